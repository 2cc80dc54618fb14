"""The test-function family, reproducing property, and the section-4 checks."""

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from qszego.geometry import SiegelPoint
from qszego.hypercomplex import Hypercomplex
from qszego.polyfrac import HyperFrac, RadialFraction, RatPoly
from qszego.verify import (
    HardyTestFunction,
    TestFunctionSpec,
    action_compatibility_check,
    coefficient_system_check,
    composed_analyticity_check,
    cr_corpus,
    hardy_norm_profile,
    hardy_test_function,
    hardy_test_function_closed_form,
    kernel_decay_check,
    o_analytic_corpus,
    reproducing_check,
    slice_regularity_check,
    slice_regularity_corpus,
    stein_weiss_check,
    subharmonicity_check,
    closed_form_agreement_check,
)


def x(i, d=8):
    return RatPoly.variable(d, i)


def origin(n=1, eps=0):
    return SiegelPoint(
        tuple(Hypercomplex.zero(4) for _ in range(n)),
        Hypercomplex.from_real(4, 1 + eps),
    )


def test_spec_validation():
    spec = TestFunctionSpec(1, (2, 0, 0, 1))
    assert spec.order == 3
    assert spec.in_hardy_range()
    assert spec.closed_form_parity()
    with pytest.raises(ValueError):
        TestFunctionSpec(1, (1, 2, 3))


def test_value_at_base_point():
    # e3 component is -d^4 N / dx0^2 dx3^2 at (2,0,0,0) = -(-5/8); others vanish
    spec = TestFunctionSpec(1, (2, 0, 0, 1))
    v = hardy_test_function(spec, origin())
    assert v == Hypercomplex((0, 0, 0, Fraction(5, 8)))


def test_odd_components_vanish():
    spec = TestFunctionSpec(1, (2, 1, 0, 1))
    v = hardy_test_function(spec, origin())
    assert v.comps[0] == 0 and v.comps[2] == 0 and v.comps[3] == 0


def test_vertical_translate_is_shift():
    spec = TestFunctionSpec(1, (2, 0, 0, 1))
    eps = Fraction(1, 3)
    direct = hardy_test_function(spec, origin(eps=eps))
    from qszego.verify import hardy_test_function_components

    shifted = hardy_test_function_components(spec.t).eval((2 + eps, 0, 0, 0))
    assert direct == shifted


def test_closed_form_values():
    assert hardy_test_function_closed_form(
        TestFunctionSpec(1, (2, 0, 0, 1))
    ) == Hypercomplex((0, 0, 0, Fraction(5, 8)))
    assert hardy_test_function_closed_form(
        TestFunctionSpec(1, (0, 0, 0, 1))
    ) == Hypercomplex((0, 0, 0, Fraction(1, 8)))
    a = hardy_test_function_closed_form(TestFunctionSpec(1, (1, 0, 0, 1)))
    b = hardy_test_function_closed_form(TestFunctionSpec(1, (2, 0, 0, 1)))
    assert a.comps[3] < 0 < b.comps[3]
    with pytest.raises(ValueError):
        hardy_test_function_closed_form(TestFunctionSpec(1, (0, 1, 0, 1)))


def test_agreement_all_valid_specs():
    rep = closed_form_agreement_check(6)
    assert rep.passed
    assert rep.inputs["specs_checked"] >= 25


def test_reproducing_property_quick():
    spec = TestFunctionSpec(1, (2, 0, 0, 1))
    rep = reproducing_check(spec, tol=1e-2, budget=3e6)
    assert rep.passed
    assert rep.rel_deviation <= 1e-2


def test_reproducing_rejects_out_of_range():
    with pytest.raises(ValueError):
        reproducing_check(TestFunctionSpec(4, (0, 0, 0, 1)), tol=1e-2)


def test_coefficient_system_exact():
    for n in (1, 2, 3):
        rep = coefficient_system_check(n)
        assert rep.passed


def test_stein_weiss_examples():
    z = RatPoly.zero(8)
    fueter = HyperFrac.from_polys((x(1), -x(0), z, z, z, z, z, z))
    ok, violations = stein_weiss_check(fueter)
    assert ok and not violations

    ident = HyperFrac.from_polys(tuple(x(i) for i in range(8)))
    ok, violations = stein_weiss_check(ident)
    assert not ok and "divergence" in violations

    zero = HyperFrac.from_polys((z,) * 8)
    assert stein_weiss_check(zero)[0]


def test_composed_analyticity_fueter():
    z = RatPoly.zero(8)
    f = HyperFrac.from_polys((x(1), -x(0), z, z, z, z, z, z))
    rep = composed_analyticity_check(f)
    assert rep.passed
    assert rep.inputs["universal_alpha"] and rep.inputs["cr_system"]


def test_composed_analyticity_dirac_null_but_asymmetric():
    z = RatPoly.zero(8)
    f = HyperFrac.from_polys((z, -x(2), x(1), RatPoly.const(8, -2) * x(0), z, z, z, z))
    assert f.dirac("left").is_zero()
    rep = composed_analyticity_check(f)
    assert rep.passed
    assert not rep.inputs["universal_alpha"]
    assert not rep.inputs["cr_system"]
    assert rep.inputs["alpha_witness"] is not None


def test_composed_analyticity_constant():
    z = RatPoly.zero(8)
    f = HyperFrac.from_polys((RatPoly.const(8, 1),) + (z,) * 7)
    rep = composed_analyticity_check(f)
    assert rep.passed and rep.inputs["universal_alpha"] and rep.inputs["cr_system"]


def test_corpus_agreement_and_classes():
    corpus = cr_corpus()
    assert len(corpus) >= 20
    true_class = false_class = 0
    for name, f in corpus:
        rep = composed_analyticity_check(f, n_random=8)
        assert rep.passed, name
        if rep.inputs["cr_system"]:
            true_class += 1
        else:
            false_class += 1
    assert true_class >= 5 and false_class >= 5


def test_stein_weiss_implies_analyticity():
    for name, f in cr_corpus():
        sw_ok, _ = stein_weiss_check(f)
        if sw_ok:
            rep = composed_analyticity_check(f, n_random=5)
            assert rep.inputs["universal_alpha"], name
            assert rep.inputs["cr_system"], name


def test_slice_regularity_examples():
    cases = slice_regularity_corpus()
    assert len(cases) >= 12
    for name, func, alpha in cases:
        assert slice_regularity_check(func, alpha), (name, alpha.to_text())


def test_slice_regularity_rejects_irregular():
    z = RatPoly.zero(8)
    bad = HyperFrac.from_polys((x(0), z, z, z))
    with pytest.raises(ValueError):
        slice_regularity_check(bad, Hypercomplex.basis(4, 1))


def test_subharmonicity_examples():
    z = RatPoly.zero(8)
    f = HyperFrac.from_polys((z, -x(2), x(1), RatPoly.const(8, -2) * x(0), z, z, z, z))
    for p in (6.0 / 7.0, 1.0, 2.0):
        rep = subharmonicity_check(f, p, n_points=400, seed=1)
        assert rep.passed, p


def test_subharmonicity_rejects_bad_inputs():
    z = RatPoly.zero(8)
    f = HyperFrac.from_polys((z, -x(2), x(1), RatPoly.const(8, -2) * x(0), z, z, z, z))
    with pytest.raises(ValueError):
        subharmonicity_check(f, 0.5)
    not_analytic = HyperFrac.from_polys(tuple(x(i) for i in range(8)))
    with pytest.raises(ValueError):
        subharmonicity_check(not_analytic, 1.0)


def test_kernel_decay_small_sample():
    rep = kernel_decay_check(1, samples=20_000, seed=2)
    assert rep.passed
    assert rep.inputs["dilation_dev"] <= 1e-12
    for key, ratio in rep.inputs["ratios"].items():
        assert ratio < 2.0, key


def test_kernel_decay_pure_vertical_axis():
    # on the t1 axis K = s(e1 t1), so |K| |t1|^(d/2) is constant
    from qszego.kernel import KernelOrder, group_kernel_array

    t1 = np.array([0.5, 1.0, 2.0, 5.0, 25.0])
    t = np.stack([t1, np.zeros(5), np.zeros(5)], axis=-1)
    vals = group_kernel_array(KernelOrder(1), np.zeros(5), t)
    mods = np.sqrt(np.sum(vals * vals, axis=1)) * t1 ** 5.0
    assert np.ptp(mods) <= 1e-12 * mods[0]


def test_action_compatibility_reported():
    rep = action_compatibility_check()
    assert rep.passed
    verdicts = rep.inputs["verdicts"]
    assert set(verdicts) == {
        "quaternionic:minus_conj_beta_alpha",
        "quaternionic:plus_conj_alpha_beta",
        "octonionic:minus_conj_beta_alpha",
        "octonionic:plus_conj_alpha_beta",
    }
    assert all(verdicts.values())


def test_hardy_norm_profile_decreasing():
    func = HardyTestFunction(TestFunctionSpec(1, (2, 0, 0, 1)))
    profile = hardy_norm_profile(func, 2.0, (0.0, 0.5, 1.0), budget=4e6)
    vals = [profile[k] for k in sorted(profile)]
    assert all(v > 0 for v in vals)
    assert vals[0] > vals[1] > vals[2]


def test_hardy_norm_rejects_constant():
    class Constant:
        class spec:
            n = 1

        def boundary_abs_p_integrand(self, eps, p):
            from qszego.quadrature import BoundaryIntegrand

            return BoundaryIntegrand(
                n=1, fn=lambda r, t: np.ones(len(r)), radial=True, decay_power=0.0
            )

    with pytest.raises(ValueError):
        hardy_norm_profile(Constant(), 2.0, (0.0,))


def test_hardy_norm_dilation_scaling():
    # norms of F(2 o .) at eps relate to norms of F at 4 eps by 2^-(4n+6)/p
    spec = TestFunctionSpec(1, (2, 0, 0, 1))
    base = HardyTestFunction(spec)
    dilated = HardyTestFunction(spec, dilation=2.0)
    p = 2.0
    prof_d = hardy_norm_profile(dilated, p, (0.25,), budget=2e7)
    prof_b = hardy_norm_profile(base, p, (1.0,), budget=2e7)
    lhs = prof_d[0.25]
    rhs = prof_b[1.0] * 2.0 ** (-10.0 / p)
    assert abs(lhs - rhs) <= 1e-6 * abs(rhs)
