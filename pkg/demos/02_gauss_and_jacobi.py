"""Gauss sums, the cubic Jacobi sum and the quartic decomposition q = m^2 + n^2.

Run: python3 demos/02_gauss_and_jacobi.py
"""
from cyclocode.charsum import (
    CharSpec,
    as_base_field,
    cubic_AB,
    gauss_quadratic_exact,
    gauss_sum,
    jacobi_cubic,
    quartic_candidates,
    quartic_decompose,
)

for p, e in [(5, 1), (3, 1), (3, 2), (7, 2)]:
    f = as_base_field(p**e)
    g = gauss_sum(CharSpec(f, 2))
    print(f"q={p**e:3d} quadratic G = {g:.6f}  closed form {gauss_quadratic_exact(p, e)}")

print()
for q in (4, 7, 13, 19, 31):
    f = as_base_field(q)
    J = jacobi_cubic(f)
    g3 = gauss_sum(CharSpec(f, 3)) ** 3
    ab = cubic_AB(f)
    print(f"q={q:2d} J = {J.a}{J.b:+d}w  G^3/q = {g3 / q:.4f}  A={ab.A} B={ab.B}")

print()
# q = 25 has two decompositions; the Gauss sum picks one
for q in (5, 9, 13, 25, 125):
    mn = quartic_decompose(q)
    cands = [(c.m, c.n) for c in quartic_candidates(q)]
    print(f"q={q:3d} (m, n) = ({mn.m}, {mn.n})  candidates {cands}")
