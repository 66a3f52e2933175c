"""Magic aspect ratios: where the azimuthal potential term vanishes.

For azimuthal number nu, the effective potential of the torus equation
loses its theta dependence at alpha = 1/(2 nu) (laplacian route) or
alpha = 1/sqrt(1 + 4 nu^2) (hermitian route).  At a laplacian magic ratio
the potential vanishes entirely, so the constant function is an exact
eigenstate with beta = 0.
"""

import numpy as np

from curvedq import TorusProblem, assemble, magic_alpha, solve_spectrum

print("magic aspect ratios:")
print("   nu   laplacian 1/(2 nu)   hermitian 1/sqrt(1+4 nu^2)")
for nu in range(1, 6):
    print(f"   {nu}    {magic_alpha(nu, 'laplacian'):<18.6f}  {magic_alpha(nu, 'hermitian'):.6f}")

print("\nconstant vector as an exact eigenvector at laplacian magic ratios:")
for nu in (1, 2, 3):
    alpha = magic_alpha(nu, "laplacian")
    h, _ = assemble(TorusProblem(alpha, nu, "laplacian"), "even")
    e0 = np.zeros(h.shape[0])
    e0[0] = 1.0
    print(f"  nu={nu}, alpha={alpha:.4f}:  ||H e0|| = {np.linalg.norm(h @ e0):.2e}")

print("\nthe corresponding solved state (alpha = 1/2, nu = 1):")
ground = solve_spectrum(TorusProblem(0.5, 1, "laplacian")).entries[0]
print(f"  beta = {ground.beta:+.2e}, leading coefficients {np.round(ground.coeffs[:4], 6)}")
print("  (the constant 0.398942 is 1/sqrt(2 pi), the normalized flat state)")
