"""Exact Gamma arithmetic against adaptive spherical quadrature.

Run:  python demos/05_moment_integrals.py
"""

import math

import numpy as np

from qszego.quadrature import (
    ExpDecay,
    exponential_moment_closed_form,
    fourier_newton,
    gamma_half,
    integrate_r3,
    parseval_identity_check,
)

print("Gamma at half integers is exact (rational times sqrt(pi)):")
for twice in (1, 3, 5, 8):
    print(f"  Gamma({twice}/2) = {gamma_half(twice)}")

print("\nthe Legendre duplication identity holds exactly in this arithmetic:")
from fractions import Fraction

from qszego.quadrature import SqrtPiRational

for twice in (1, 5, 9):
    lhs = gamma_half(twice) * gamma_half(twice + 1)
    rhs = gamma_half(1) * gamma_half(2 * twice) * SqrtPiRational(Fraction(2) ** (1 - twice))
    print(f"  2x = {twice}: {lhs} == {rhs}: {lhs == rhs}")

print("\nexponential moments over R^3, closed form vs quadrature:")
for a, powers in ((1.0, (0, 0, 0, 0)), (2.0, (0, 0, 0, 0)), (1.0, (1, 2, 0, 2))):
    exact = exponential_moment_closed_form(a, *powers)

    def f(pts):
        r = np.linalg.norm(pts, axis=1)
        return (
            r ** powers[0]
            * pts[:, 0] ** powers[1]
            * pts[:, 1] ** powers[2]
            * pts[:, 2] ** powers[3]
            * np.exp(-a * r)
        )

    res = integrate_r3(f, ExpDecay(a), tol=1e-9, abs_tol=1e-12)
    print(f"  a={a}, powers={powers}: closed {exact.to_float():.10f}"
          f"  numeric {res.value:.10f}  ({res.n_evals} evaluations)")

print("\nodd powers vanish by symmetry, exactly in the closed form:")
print(f"  powers (0,1,0,0): {exponential_moment_closed_form(1, 0, 1, 0, 0)}")

print("\nthe Fourier profile of the Newton-potential slice:")
print(f"  x0=1, rho=1: {fourier_newton(1.0, 1.0):.10f}  (= pi e^(-2 pi))")

print("\nParseval ties derivative products to exponential moments:")
for p, q, x0 in (((1, 0, 0, 0), (1, 0, 0, 0), 1.0), ((2, 0, 0, 0), (0, 0, 0, 2), 0.5)):
    rep = parseval_identity_check(p, q, x0)
    print(f"  p={p}, q={q}, x0={x0}: lhs {rep.lhs:.8f}  rhs {rep.rhs:.8f}"
          f"  rel dev {rep.rel_deviation:.1e}")
