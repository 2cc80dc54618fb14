"""Heisenberg groups, boundary parameterization and the Cayley transform.

Run:  python demos/04_heisenberg_geometry.py
"""

import numpy as np

from qszego import (
    GroupElement,
    Hypercomplex,
    SiegelPoint,
    boundary_param,
    boundary_unparam,
    cayley,
    cayley_inv,
    dilate_element,
    group_mul,
    rho_length,
    translate,
)

e = lambda dim, i: Hypercomplex.basis(dim, i)

print("the twisted product picks up a vertical component:")
a = GroupElement((e(4, 1),), (0, 0, 0))
b = GroupElement((e(4, 2),), (0, 0, 0))
ab = group_mul(a, b)
ba = group_mul(b, a)
print(f"  [e1,0] [e2,0] = [{ab.omega[0].to_text()}, {ab.t}]")
print(f"  [e2,0] [e1,0] = [{ba.omega[0].to_text()}, {ba.t}]   (noncommutative)")

print("\ntranslation preserves the height r = Re q_2 - |q_1|^2:")
p = SiegelPoint((Hypercomplex.zero(4),), Hypercomplex.from_real(4, 1))
moved = translate(a, p)
print(f"  (0, 1) -> ({moved.horizontal[0].to_text()}, {moved.vertical.to_text()}),"
      f" height {p.height()} -> {moved.height()}")

print("\nboundary points are exactly the group orbit of the origin:")
h = GroupElement((e(4, 1),), (1, 0, 0))
bp = boundary_param(h)
print(f"  [e1,(1,0,0)] <-> ({bp.horizontal[0].to_text()}, {bp.vertical.to_text()}),"
      f" height {bp.height()}")
print(f"  roundtrip recovers the element: {boundary_unparam(bp) == h}")

print("\nthe homogeneous length scales linearly under group dilation:")
g = GroupElement(
    (Hypercomplex((0.3, -1.2, 0.5, 0.9), exact=False),), (2.0, -0.5, 0.25)
)
print(f"  rho(h) = {rho_length(g):.6f},  rho(3 o h) = {rho_length(dilate_element(3.0, g)):.6f}")

print("\nthe octonionic Cayley transform maps the half space into the ball:")
rng = np.random.default_rng(7)
worst = 0.0
for _ in range(2000):
    tau1 = Hypercomplex(rng.uniform(-1, 1, 8), exact=False)
    vert = np.concatenate([[float(tau1.norm_sq()) + rng.uniform(0.1, 2.0)], rng.uniform(-1, 1, 7)])
    p = SiegelPoint((tau1,), Hypercomplex(vert, exact=False))
    ball = cayley(p)
    assert ball.in_ball()
    back = cayley_inv(ball)
    worst = max(worst, max(abs(x - y) for x, y in zip(back.vertical.comps, p.vertical.comps)))
print(f"  2000 random interior points: all inside, roundtrip deviation <= {worst:.2e}")

boundary = SiegelPoint((Hypercomplex.zero(8),), e(8, 1))
print(f"  boundary point (0, e1) maps to sigma2 = {cayley(boundary).sigma2.to_text()},"
      f" |sigma|^2 = {cayley(boundary).norm_sq_sum()}")
