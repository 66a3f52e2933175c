"""Curvature data for a few classic surfaces.

The shell factors of the near-surface metric carry the principal
curvatures k1, k2; from them come the mean curvature h = (k1+k2)/2, the
Gaussian curvature k = k1 k2, the squeezing potential
V_C = -(h^2 - k)/2, and the volume rescaling F = 1 + 2qh + q^2 k.
"""

import math

import numpy as np

from curvedq import curvature_sample, graph_metric_patch, parse_shape, torus_metric_patch

print("cone S = 0.75 rho: flat along the slant (k1 = 0), curved azimuthally")
cone = graph_metric_patch(parse_shape("0.75*rho"), (0.2, 2.0))
for rho in (0.25, 0.5, 1.0, 2.0):
    s = curvature_sample(cone, rho)
    print(f"  rho={rho:4.2f}:  k1={s.k1:+.4f}  k2={s.k2:+.4f}  V_C={s.vc:+.5f}")

print("\nhemisphere of radius 2: umbilic everywhere, so V_C vanishes identically")
sphere = graph_metric_patch(parse_shape("sqrt(4 - rho^2)"), (0.0, 1.95))
for rho in (0.0, 1.0, 1.9):
    s = curvature_sample(sphere, rho)
    print(f"  rho={rho:4.2f}:  k1={s.k1:+.6f}  k2={s.k2:+.6f}  V_C={s.vc:+.1e}")

print("\ntorus R=3, a=1: V_C deepens toward the inner equator (theta = pi)")
torus = torus_metric_patch(3.0, 1.0)
for theta in np.linspace(0.0, math.pi, 7):
    s = curvature_sample(torus, float(theta))
    print(
        f"  theta={theta:4.2f}:  k1={s.k1:+.3f}  k2={s.k2:+.4f}"
        f"  h={s.h:+.4f}  k={s.k:+.4f}  V_C={s.vc:+.5f}"
    )

print("\nvolume rescaling away from the surface (torus, theta = 0):")
for q in (-0.5, -0.2, 0.0, 0.2, 0.5):
    s = curvature_sample(torus, 0.0, q=q)
    print(f"  q={q:+.1f}:  F={s.f:.4f}")
