"""Shape functions: parsing, canonical printing, and exact jets.

A surface of revolution is described by z = S(rho).  Shapes arrive as
text; parsing gives an immutable expression tree that evaluates together
with its first two derivatives by dual-number propagation, with no
finite-difference noise.
"""

from curvedq import ShapeDomainError, eval_jet2, format_expr, parse_shape

# A paraboloid cap and the upper half of a sphere of radius 2.
paraboloid = parse_shape("2 - 0.5*rho^2")
hemisphere = parse_shape("sqrt(4 - rho^2)")

print("canonical forms (whitespace dropped, floats normalized):")
print(" ", format_expr(paraboloid))
print(" ", format_expr(hemisphere))

print("\njets (S, S', S'') on a few radii:")
for rho in (0.0, 0.5, 1.0, 1.5):
    jet = eval_jet2(hemisphere, rho)
    print(f"  rho={rho:.1f}:  S={jet.value:+.6f}  S'={jet.d1:+.6f}  S''={jet.d2:+.6f}")

# The parser reports byte offsets and expected tokens; the evaluator names
# the offending subexpression when a point leaves the domain.
print("\ndomain error example:")
try:
    eval_jet2(hemisphere, 3.0)
except ShapeDomainError as exc:
    print(" ", exc)

# Exponent binds tighter than unary minus.
print("\nprecedence check: -rho^2 at rho=3 ->", eval_jet2(parse_shape("-rho^2"), 3.0).value)
