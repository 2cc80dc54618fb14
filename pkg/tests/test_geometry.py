"""Heisenberg groups, Siegel points, Cayley transform, homogeneous norm."""

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from qszego.geometry import (
    BallPoint,
    GroupElement,
    SiegelPoint,
    boundary_param,
    boundary_unparam,
    cayley,
    cayley_inv,
    dilate,
    dilate_element,
    group_inverse,
    group_mul,
    group_mul_with_convention,
    homogeneous_dim,
    identity_element,
    rho_length,
    rotate,
    translate,
)
from qszego.hypercomplex import Hypercomplex


def q(*comps):
    return Hypercomplex(comps)


def e(dim, i):
    return Hypercomplex.basis(dim, i)


def rand_quat(rng, span=4):
    return Hypercomplex([rng.randint(-span, span) for _ in range(4)])


def rand_oct(rng, span=4):
    return Hypercomplex([rng.randint(-span, span) for _ in range(8)])


def test_group_mul_example():
    a = GroupElement((e(4, 1),), (0, 0, 0))
    b = GroupElement((e(4, 2),), (0, 0, 0))
    ab = group_mul(a, b)
    assert ab.omega == (e(4, 1) + e(4, 2),)
    assert ab.t == (0, 0, -2)


def test_group_mul_pure_t():
    rng = random.Random(1)
    a = GroupElement((rand_quat(rng),), (1, 2, 3))
    s = GroupElement((Hypercomplex.zero(4),), (5, -1, 0))
    assert group_mul(a, s) == GroupElement(a.omega, (6, 1, 3))


def test_group_inverse():
    rng = random.Random(2)
    for kind, n in (("quaternionic", 1), ("quaternionic", 2), ("octonionic", 1)):
        ident = identity_element(kind, n)
        dim = 4 if kind == "quaternionic" else 8
        tn = 3 if kind == "quaternionic" else 7
        for _ in range(50):
            h = GroupElement(
                tuple(Hypercomplex([rng.randint(-4, 4) for _ in range(dim)]) for _ in range(n)),
                tuple(rng.randint(-4, 4) for _ in range(tn)),
            )
            assert group_mul(h, group_inverse(h)) == ident
            assert group_mul(group_inverse(h), h) == ident


@pytest.mark.parametrize("kind,n", [("quaternionic", 1), ("quaternionic", 2), ("octonionic", 1)])
def test_group_associativity(kind, n):
    rng = random.Random(3)
    dim = 4 if kind == "quaternionic" else 8
    tn = 3 if kind == "quaternionic" else 7

    def rand_el():
        return GroupElement(
            tuple(Hypercomplex([rng.randint(-3, 3) for _ in range(dim)]) for _ in range(n)),
            tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 2)) for _ in range(tn)),
        )

    for _ in range(1000):
        a, b, c = rand_el(), rand_el(), rand_el()
        assert group_mul(group_mul(a, b), c) == group_mul(a, group_mul(b, c))


def test_translation_example():
    h = GroupElement((e(4, 1),), (0, 0, 0))
    p = SiegelPoint((Hypercomplex.zero(4),), Hypercomplex.from_real(4, 1))
    moved = translate(h, p)
    assert moved.horizontal == (e(4, 1),)
    assert moved.vertical == Hypercomplex.from_real(4, 2)
    assert moved.height() == p.height() == 1


def test_translation_identity():
    p = SiegelPoint((q(1, 2, 3, 4),), q(31, 1, 0, -2))
    assert translate(identity_element("quaternionic", 1), p) == p


def test_translation_preserves_boundary():
    rng = random.Random(5)
    for _ in range(100):
        h = GroupElement((rand_quat(rng),), tuple(rng.randint(-4, 4) for _ in range(3)))
        g = GroupElement((rand_quat(rng),), tuple(rng.randint(-4, 4) for _ in range(3)))
        p = boundary_param(g)
        assert p.height() == 0
        assert translate(h, p).height() == 0


def test_translation_is_group_action_both_conventions():
    rng = random.Random(7)
    for kind, dim, tn in (("quaternionic", 4, 3), ("octonionic", 8, 7)):
        for conv in ("minus_conj_beta_alpha", "plus_conj_alpha_beta"):
            for _ in range(60):
                a = GroupElement(
                    (Hypercomplex([rng.randint(-3, 3) for _ in range(dim)]),),
                    tuple(rng.randint(-3, 3) for _ in range(tn)),
                )
                b = GroupElement(
                    (Hypercomplex([rng.randint(-3, 3) for _ in range(dim)]),),
                    tuple(rng.randint(-3, 3) for _ in range(tn)),
                )
                p = SiegelPoint(
                    (Hypercomplex([rng.randint(-3, 3) for _ in range(dim)]),),
                    Hypercomplex([rng.randint(-3, 3) for _ in range(dim)]),
                )
                assert translate(a, translate(b, p)) == translate(
                    group_mul_with_convention(a, b, conv), p
                )


def test_printed_conventions_coincide():
    rng = random.Random(9)
    for _ in range(200):
        a = GroupElement((rand_quat(rng),), tuple(rng.randint(-4, 4) for _ in range(3)))
        b = GroupElement((rand_quat(rng),), tuple(rng.randint(-4, 4) for _ in range(3)))
        assert group_mul_with_convention(
            a, b, "minus_conj_beta_alpha"
        ) == group_mul_with_convention(a, b, "plus_conj_alpha_beta")


def test_dilation():
    p = SiegelPoint((Hypercomplex.zero(4),), Hypercomplex.from_real(4, 1))
    d = dilate(2, p)
    assert d.vertical == Hypercomplex.from_real(4, 4)
    rng = random.Random(11)
    for _ in range(50):
        pt = SiegelPoint((rand_quat(rng),), rand_quat(rng))
        assert dilate(3, pt).height() == 9 * pt.height()
    with pytest.raises(ValueError):
        dilate(0, p)


def test_rotation_example():
    p = SiegelPoint((e(4, 2),), Hypercomplex.from_real(4, 1))
    r = rotate((e(4, 1),), p)
    assert r.horizontal == (e(4, 3),)
    assert r.vertical == p.vertical
    assert r.height() == p.height()
    with pytest.raises(ValueError):
        rotate((q(2, 0, 0, 0),), p)


def test_boundary_parameterization():
    assert boundary_param(identity_element("quaternionic", 1)) == SiegelPoint(
        (Hypercomplex.zero(4),), Hypercomplex.zero(4)
    )
    h = GroupElement((e(4, 1),), (1, 0, 0))
    p = boundary_param(h)
    assert p.vertical == Hypercomplex((1, 1, 0, 0))
    rng = random.Random(13)
    for _ in range(100):
        g = GroupElement((rand_quat(rng),), tuple(rng.randint(-5, 5) for _ in range(3)))
        assert boundary_unparam(boundary_param(g)) == g
    with pytest.raises(ValueError):
        boundary_unparam(SiegelPoint((Hypercomplex.zero(4),), Hypercomplex.from_real(4, 1)))


def test_octonionic_boundary_parameterization():
    h = GroupElement((e(8, 3),), (0, 0, 0, 0, 0, 0, 2))
    p = boundary_param(h)
    assert p.vertical == Hypercomplex((1, 0, 0, 0, 0, 0, 0, 2))
    assert boundary_unparam(p) == h


def test_cayley_center_and_boundary():
    center = SiegelPoint((Hypercomplex.zero(8, exact=False),), Hypercomplex.from_real(8, 1.0, exact=False))
    b = cayley(center)
    assert all(abs(c) < 1e-15 for c in b.sigma1.comps)
    assert all(abs(c) < 1e-15 for c in b.sigma2.comps)

    bp = SiegelPoint((Hypercomplex.zero(8),), e(8, 1))
    ball = cayley(bp)
    assert ball.sigma1 == Hypercomplex.zero(8)
    assert ball.sigma2 == -e(8, 1)
    assert ball.norm_sq_sum() == 1


def test_cayley_roundtrip_random():
    rng = np.random.default_rng(0)
    for _ in range(3000):
        tau1 = Hypercomplex(rng.uniform(-1, 1, 8), exact=False)
        vert = np.concatenate(
            [[float(tau1.norm_sq()) + rng.uniform(0.05, 3.0)], rng.uniform(-2, 2, 7)]
        )
        p = SiegelPoint((tau1,), Hypercomplex(vert, exact=False))
        ball = cayley(p)
        assert ball.in_ball()
        back = cayley_inv(ball)
        assert back.horizontal[0].approx_eq(p.horizontal[0], rel=1e-12, abs_tol=1e-12)
        assert back.vertical.approx_eq(p.vertical, rel=1e-12, abs_tol=1e-12)


def test_cayley_pole():
    p = SiegelPoint((Hypercomplex.zero(8),), Hypercomplex.from_real(8, -1))
    with pytest.raises(ZeroDivisionError):
        cayley(p)


def test_rho_length():
    assert rho_length(GroupElement((Hypercomplex.zero(4),), (4, 0, 0))) == 2.0
    assert rho_length(GroupElement((e(4, 1),), (0, 0, 0))) == 1.0
    rng = random.Random(15)
    for _ in range(100):
        h = GroupElement(
            (Hypercomplex([rng.uniform(-3, 3) for _ in range(4)], exact=False),),
            tuple(rng.uniform(-3, 3) for _ in range(3)),
        )
        assert rho_length(dilate_element(3.0, h)) == pytest.approx(3.0 * rho_length(h), rel=1e-12)
        assert rho_length(group_inverse(h)) == rho_length(h)


def test_homogeneous_dim():
    assert homogeneous_dim(1) == 10
    assert homogeneous_dim(2) == 14


def test_octonionic_translation_height():
    rng = random.Random(17)
    for _ in range(100):
        h = GroupElement((rand_oct(rng),), tuple(rng.randint(-4, 4) for _ in range(7)))
        p = SiegelPoint((rand_oct(rng),), rand_oct(rng))
        assert translate(h, p).height() == p.height()


def test_point_json_roundtrip():
    p = SiegelPoint((q(1, 2, 3, 4),), q(31, Fraction(1, 2), 0, -2))
    assert SiegelPoint.from_json(p.to_json()) == p


def test_element_json_roundtrip():
    h = GroupElement((q(1, Fraction(-1, 2), 0, 3),), (Fraction(1, 3), -2, 0))
    assert GroupElement.from_json(h.to_json()) == h
    hf = h.to_float()
    assert GroupElement.from_json(hf.to_json()) == hf


def test_kind_mismatch_raises():
    a = GroupElement((e(4, 1),), (0, 0, 0))
    b = GroupElement((e(8, 1),), (0,) * 7)
    with pytest.raises(ValueError):
        group_mul(a, b)
