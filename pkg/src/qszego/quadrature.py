"""Numerical integration engines and exact half-integer Gamma arithmetic.

Three integration paths cover the verification needs: an adaptive product
rule in spherical coordinates for integrals over R^3, a tensor rule over the
Siegel boundary (with a radial reduction when the integrand declares
rotational symmetry in the horizontal variables), and a seeded
importance-sampling Monte Carlo fallback for non-symmetric integrands.

Gamma values at positive half integers are exact: they are rational
multiples of sqrt(pi)^k, carried by :class:`SqrtPiRational` so that moment
identities and coefficient systems can be checked with no floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .report import CheckReport


# ----------------------------------------------------------------------
# exact Gamma arithmetic


@dataclass(frozen=True)
class SqrtPiRational:
    """Exact value coef * pi^(pi_half / 2); the ledger for Gamma identities."""

    coef: Fraction
    pi_half: int = 0

    def __post_init__(self):
        c = Fraction(self.coef)
        object.__setattr__(self, "coef", c)
        if not c:
            object.__setattr__(self, "pi_half", 0)

    @classmethod
    def zero(cls):
        return cls(Fraction(0), 0)

    @classmethod
    def one(cls):
        return cls(Fraction(1), 0)

    def is_zero(self):
        return not self.coef

    def __mul__(self, other):
        if isinstance(other, SqrtPiRational):
            return SqrtPiRational(self.coef * other.coef, self.pi_half + other.pi_half)
        return SqrtPiRational(self.coef * Fraction(other), self.pi_half)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, SqrtPiRational):
            if not other.coef:
                raise ZeroDivisionError("division by zero SqrtPiRational")
            return SqrtPiRational(self.coef / other.coef, self.pi_half - other.pi_half)
        return SqrtPiRational(self.coef / Fraction(other), self.pi_half)

    def __neg__(self):
        return SqrtPiRational(-self.coef, self.pi_half)

    def __add__(self, other):
        if not isinstance(other, SqrtPiRational):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.pi_half != other.pi_half:
            raise ValueError("cannot add values with different powers of sqrt(pi)")
        return SqrtPiRational(self.coef + other.coef, self.pi_half)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, SqrtPiRational):
            return NotImplemented
        return self.coef == other.coef and self.pi_half == other.pi_half

    def to_float(self):
        return float(self.coef) * math.pi ** (self.pi_half / 2.0)

    def __repr__(self):
        if self.pi_half == 0:
            return f"SqrtPiRational({self.coef})"
        return f"SqrtPiRational({self.coef} * pi^({self.pi_half}/2))"


def gamma_half(twice_x):
    """Exact Gamma(twice_x / 2) for a positive integer argument.

    Gamma(k+1) = k! carries no pi; Gamma(k+1/2) = (2k)!/(4^k k!) sqrt(pi).
    """
    twice_x = int(twice_x)
    if twice_x < 1:
        raise ValueError("argument must be a positive half integer")
    if twice_x % 2 == 0:
        m = twice_x // 2
        return SqrtPiRational(Fraction(math.factorial(m - 1)), 0)
    k = (twice_x - 1) // 2
    coef = Fraction(math.factorial(2 * k), 4**k * math.factorial(k))
    return SqrtPiRational(coef, 1)


def _moment_gamma_part(l0, l1, l2, l3):
    """2 Gamma(l+3) Gamma(k1+1/2) Gamma(k2+1/2) Gamma(k3+1/2) / Gamma(k1+k2+k3+3/2)."""
    l = l0 + l1 + l2 + l3
    if l < -2:
        raise ValueError("total exponent below integrability threshold")
    k1, k2, k3 = l1 // 2, l2 // 2, l3 // 2
    num = gamma_half(2 * (l + 3)) * gamma_half(2 * k1 + 1) * gamma_half(2 * k2 + 1) * gamma_half(2 * k3 + 1)
    return (num / gamma_half(2 * (k1 + k2 + k3) + 3)) * 2


def exponential_moment_closed_form(a, l0, l1, l2, l3):
    """Closed form of int (x1^2+x2^2+x3^2)^(l0/2) x1^l1 x2^l2 x3^l3 e^(-a rho) dx.

    Vanishes unless l1, l2, l3 are all even; otherwise equals
    2 a^(-l-3) Gamma(l+3) Gamma(k1+1/2) Gamma(k2+1/2) Gamma(k3+1/2)
    / Gamma(k1+k2+k3+3/2) with l = l0+l1+l2+l3 and li = 2 ki.  ``l0`` may be
    as small as -2 (the radial factor stays integrable); ``a`` must be
    positive and exactly representable (int, Fraction, or float).
    """
    if a <= 0:
        raise ValueError("decay rate a must be positive")
    if min(l1, l2, l3) < 0:
        raise ValueError("axis exponents must be nonnegative")
    if l0 < -2:
        raise ValueError("radial exponent below -2 is not integrable")
    if (l1 % 2) or (l2 % 2) or (l3 % 2):
        return SqrtPiRational.zero()
    l = l0 + l1 + l2 + l3
    a_exact = Fraction(a)
    return _moment_gamma_part(l0, l1, l2, l3) * (a_exact ** (-(l + 3)))


def fourier_newton(x0, rho):
    """Radial Fourier profile (pi / rho) exp(-2 pi x0 rho) of the Newton slice."""
    if x0 <= 0 or rho <= 0:
        raise ValueError("x0 and rho must be positive")
    return math.pi / rho * math.exp(-2.0 * math.pi * x0 * rho)


# ----------------------------------------------------------------------
# quadrature engines


@dataclass
class QuadratureResult:
    value: object
    error_estimate: float
    n_evals: int
    converged: bool = True
    seed: int | None = None

    def to_json(self):
        v = self.value
        if hasattr(v, "tolist"):
            v = v.tolist()
        return {
            "value": v,
            "error_estimate": self.error_estimate,
            "n_evals": self.n_evals,
            "seed": self.seed,
        }


class QuadratureConvergenceError(RuntimeError):
    """Raised when refinement stalls; carries the best result obtained."""

    def __init__(self, message, result):
        super().__init__(message)
        self.result = result


@dataclass(frozen=True)
class ExpDecay:
    """Radial integrand decays like exp(-rate * r).

    The half line is truncated where the exponential tail falls below 1e-30
    even against polynomial growth; the integrand is entire there, so the
    Gauss rule converges geometrically.
    """

    rate: float = 1.0

    def map(self, u):
        cutoff = 80.0 / self.rate
        r = cutoff * u
        jac = np.full_like(u, cutoff)
        return r, jac


@dataclass(frozen=True)
class PowerDecay:
    """Radial integrand decays like a negative power; scale sets the knee.

    Uses r = scale * tan(pi u / 2): rational integrands become trigonometric
    rational functions of u, which the Gauss rule resolves geometrically.
    """

    scale: float = 1.0

    def map(self, u):
        theta = u * (math.pi / 2.0)
        r = self.scale * np.tan(theta)
        jac = self.scale * (math.pi / 2.0) / np.cos(theta) ** 2
        return r, jac


@lru_cache(maxsize=64)
def _leggauss(n):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def _gauss01(n):
    x, w = _leggauss(n)
    return (x + 1.0) / 2.0, w / 2.0


def _sphere_level(f, decay, nr, nc, nphi):
    """One tensor level of the spherical product rule; returns (value, evals)."""
    u, wu = _gauss01(nr)
    r, jac = decay.map(u)
    c, wc = _leggauss(nc)
    phi = (np.arange(nphi) + 0.5) * (2.0 * math.pi / nphi)
    wphi = 2.0 * math.pi / nphi

    s = np.sqrt(1.0 - c**2)
    cphi, sphi = np.cos(phi), np.sin(phi)

    total = 0.0
    for i in range(nr):
        ri = r[i]
        x1 = np.broadcast_to((ri * c)[:, None], (nc, nphi))
        x2 = ri * s[:, None] * cphi[None, :]
        x3 = ri * s[:, None] * sphi[None, :]
        pts = np.stack([x1, x2, x3], axis=-1).reshape(-1, 3)
        vals = np.asarray(f(pts), dtype=float).reshape(nc, nphi)
        angular = float(np.sum(vals * wc[:, None]) * wphi)
        total += wu[i] * jac[i] * ri * ri * angular
    return total, nr * nc * nphi


def spherical_tensor_level(f, decay_hint, n_r, n_cos, n_phi):
    """One deterministic spherical product level; returns (value, evals)."""
    return _sphere_level(f, decay_hint, n_r, n_cos, n_phi)


def integrate_r3(f, decay_hint, tol=1e-8, abs_tol=0.0, start=(16, 12, 12), max_refinements=4):
    """Adaptive spherical product rule over R^3.

    ``f`` is vectorized over points of shape (N, 3) and must be absolutely
    integrable with the declared radial decay.  Refinement doubles the radial
    rule and grows the angular rules until successive levels agree to the
    requested tolerance.  Raises :class:`QuadratureConvergenceError` (carrying
    the best value) when the budget of refinements is exhausted.
    """
    nr, nc, nphi = start
    prev = None
    err = math.inf
    n_evals = 0
    value = math.nan
    for _ in range(max_refinements + 1):
        value, used = _sphere_level(f, decay_hint, nr, nc, nphi)
        n_evals += used
        if prev is not None:
            err = abs(value - prev)
            if err <= max(tol * abs(value), abs_tol):
                return QuadratureResult(value, err, n_evals)
        prev = value
        nr *= 2
        nc = min(nc * 2, 48)
        nphi = min(nphi * 2, 48)
    result = QuadratureResult(value, err, n_evals, converged=False)
    raise QuadratureConvergenceError(
        f"spherical rule did not reach tol={tol:g} (best error {err:g})", result
    )


# ----------------------------------------------------------------------
# verification of the derivative-product / exponential-moment identity


def parseval_identity_check(p_orders, q_orders, x0, tol=1e-6, zero_tol=1e-10):
    """Check the Parseval identity between two Newton-derivative products.

    The left side integrates the product of two mixed partials of the Newton
    potential over R^3 at fixed x0 > 0 by quadrature; the right side is the
    exact exponential-moment value the Fourier transform produces.  When any
    paired axis order is odd both sides vanish; the left side is then tested
    against ``zero_tol`` times the integral of the absolute product.
    """
    from .kernel import newton_derivative

    p_orders = tuple(int(v) for v in p_orders)
    q_orders = tuple(int(v) for v in q_orders)
    if len(p_orders) != 4 or len(q_orders) != 4:
        raise ValueError("need two exponent 4-tuples")
    if x0 <= 0:
        raise ValueError("x0 must be positive")
    alpha, gamma = sum(p_orders), sum(q_orders)
    l = [p_orders[i] + q_orders[i] for i in range(4)]

    fp = newton_derivative(p_orders)
    fq = newton_derivative(q_orders)

    def product(pts3, absolute=False):
        pts4 = np.concatenate([np.full((len(pts3), 1), float(x0)), pts3], axis=1)
        vals = fp.eval_array(pts4) * fq.eval_array(pts4)
        return np.abs(vals) if absolute else vals

    decay = PowerDecay(scale=max(1.0, 2.0 * float(x0)))
    inputs = {"p": list(p_orders), "q": list(q_orders), "x0": float(x0)}

    if any(l[i] % 2 for i in (1, 2, 3)):
        lhs, used = _sphere_level(lambda pts: product(pts), decay, 64, 24, 24)
        scale, used2 = _sphere_level(lambda pts: product(pts, absolute=True), decay, 64, 24, 24)
        passed = abs(lhs) <= zero_tol * max(scale, 1e-300)
        return CheckReport(
            name="parseval-identity",
            inputs=inputs,
            lhs=lhs,
            rhs=0.0,
            abs_deviation=abs(lhs),
            rel_deviation=abs(lhs) / max(scale, 1e-300),
            tolerance=zero_tol,
            passed=passed,
            n_evals=used + used2,
        )

    # exact right side: 2^(a+g) pi^(a+g+2) (-1)^(p0+g) i^(a+g-p0-q0) times the
    # moment at rate 4 pi x0, with the pi powers folded together symbolically
    m = (l[1] + l[2] + l[3]) // 2
    sign = (-1) ** (p_orders[0] + gamma) * (-1) ** m
    l0 = l[0] - 2
    gamma_part = _moment_gamma_part(l0, l[1], l[2], l[3])
    a_rational = Fraction(4) * Fraction(x0)
    total_l = l0 + l[1] + l[2] + l[3]
    coef = (
        Fraction(sign)
        * Fraction(2) ** (alpha + gamma)
        * gamma_part.coef
        * a_rational ** (-(total_l + 3))
    )
    pi_half = 2 * (alpha + gamma + 2) + gamma_part.pi_half + 2 * (-(total_l + 3))
    rhs_exact = SqrtPiRational(coef, pi_half)
    rhs = rhs_exact.to_float()

    res = integrate_r3(product, decay, tol=tol * 0.2, abs_tol=abs(rhs) * tol * 0.2)
    deviation = abs(res.value - rhs)
    return CheckReport(
        name="parseval-identity",
        inputs=inputs,
        lhs=res.value,
        rhs=rhs,
        abs_deviation=deviation,
        rel_deviation=deviation / abs(rhs),
        tolerance=tol,
        passed=deviation <= tol * abs(rhs),
        n_evals=res.n_evals,
    )


# ----------------------------------------------------------------------
# boundary integration


SPHERE_SURFACE = {1: 2.0, 2: 2 * math.pi, 3: 4 * math.pi, 4: 2 * math.pi**2}


def sphere_surface(dim):
    """Surface measure of the unit sphere in R^dim."""
    if dim in SPHERE_SURFACE:
        return SPHERE_SURFACE[dim]
    return 2 * math.pi ** (dim / 2.0) / math.gamma(dim / 2.0)


@dataclass
class BoundaryIntegrand:
    """An integrand over the Siegel boundary parameterized by (w', t).

    ``decay_power`` declares |F| <= C (1 + |w'|^2 + |t|)^(-decay_power); the
    engine refuses integrands whose declared decay cannot be absolutely
    integrable.  ``radial`` means F depends on w' through |w'| only, in which
    case ``fn(r, t)`` receives the radius; otherwise ``fn(w, t)`` receives the
    full horizontal vector.  ``values`` is 1 for scalar integrands or the
    component count for hypercomplex ones.

    ``omega_decay`` / ``t_decay`` pick the coordinate maps: "power" uses a
    rational compactification (right for rational integrands), "gaussian"
    truncates where the declared Gaussian tail is negligible.  With
    ``t_scale_with_r`` the vertical window grows like 1 + r^2, matching the
    parabolic geometry of kernel integrands.
    """

    n: int
    fn: object
    radial: bool = True
    decay_power: float = 0.0
    values: int = 1
    omega_scale: float = 1.0
    t_scale: float = 1.0
    omega_decay: str = "power"
    t_decay: str = "power"
    t_scale_with_r: bool = False

    def check_integrable(self):
        if self.omega_decay == "gaussian" and self.t_decay == "gaussian":
            return
        if 2.0 * self.decay_power <= 4 * self.n + 6:
            raise ValueError(
                "declared decay power {:g} cannot be absolutely integrable over "
                "the boundary (needs > {:g})".format(self.decay_power, 2 * self.n + 3)
            )


_GAUSS_CUT = 5.5  # exp(-5.5^2) ~ 7e-14, below every tolerance requested here


def _halfline_rule(kind, scale, n):
    u, wu = _gauss01(n)
    if kind == "power":
        theta = u * (math.pi / 2.0)
        r = scale * np.tan(theta)
        jac = scale * (math.pi / 2.0) / np.cos(theta) ** 2
    elif kind == "gaussian":
        cut = _GAUSS_CUT * scale
        r = cut * u
        jac = np.full_like(u, cut)
    else:
        raise ValueError(f"unknown decay kind {kind!r}")
    return r, wu * jac


def _line_rule(kind, scale, n):
    v, wv = _leggauss(n)
    if kind == "power":
        theta = v * (math.pi / 2.0)
        t = scale * np.tan(theta)
        jac = scale * (math.pi / 2.0) / np.cos(theta) ** 2
    elif kind == "gaussian":
        cut = _GAUSS_CUT * scale
        t = cut * v
        jac = np.full_like(v, cut)
    else:
        raise ValueError(f"unknown decay kind {kind!r}")
    return t, wv * jac


def _boundary_level_radial(integrand, n_r, n_t):
    n = integrand.n
    r, wr = _halfline_rule(integrand.omega_decay, integrand.omega_scale, n_r)
    t1, wt1 = _line_rule(integrand.t_decay, integrand.t_scale, n_t)

    tt = np.stack(np.meshgrid(t1, t1, t1, indexing="ij"), axis=-1).reshape(-1, 3)
    wt = wt1[:, None, None] * wt1[None, :, None] * wt1[None, None, :]
    wt = wt.reshape(-1)

    area = sphere_surface(4 * n)
    out = np.zeros(integrand.values, dtype=float)
    for i in range(n_r):
        if integrand.t_scale_with_r:
            grow = 1.0 + r[i] ** 2
            tti = tt * grow
            wti = wt * grow**3
        else:
            tti, wti = tt, wt
        vals = np.asarray(integrand.fn(np.full(len(tt), r[i]), tti), dtype=float)
        if vals.ndim == 1:
            vals = vals[:, None]
        weight = area * wr[i] * r[i] ** (4 * n - 1)
        out += weight * (wti @ vals)
    return out, n_r * len(tt)


def _boundary_level_full(integrand, n_w, n_t, chunk=4096):
    n = integrand.n
    w1, ww1 = _line_rule(integrand.omega_decay, integrand.omega_scale, n_w)
    t1, wt1 = _line_rule(integrand.t_decay, integrand.t_scale, n_t)

    w_axes = [w1] * (4 * n)
    ww_axes = [ww1] * (4 * n)
    tt = np.stack(np.meshgrid(t1, t1, t1, indexing="ij"), axis=-1).reshape(-1, 3)
    wt = wt1[:, None, None] * wt1[None, :, None] * wt1[None, None, :]
    wt = wt.reshape(-1)

    w_grid = np.stack(np.meshgrid(*w_axes, indexing="ij"), axis=-1).reshape(-1, 4 * n)
    w_weights = np.stack(np.meshgrid(*ww_axes, indexing="ij"), axis=-1).reshape(-1, 4 * n).prod(axis=1)

    out = np.zeros(integrand.values, dtype=float)
    evals = 0
    for s in range(0, len(w_grid), chunk):
        wg = w_grid[s : s + chunk]
        wwg = w_weights[s : s + chunk]
        big_w = np.repeat(wg, len(tt), axis=0)
        big_t = np.tile(tt, (len(wg), 1))
        vals = np.asarray(integrand.fn(big_w, big_t), dtype=float)
        if vals.ndim == 1:
            vals = vals[:, None]
        vals = vals.reshape(len(wg), len(tt), integrand.values)
        out += np.einsum("i,j,ijk->k", wwg, wt, vals)
        evals += len(wg) * len(tt)
    return out, evals


def boundary_tensor_level(integrand, n_omega, n_t):
    """One deterministic tensor level (no refinement); returns (value, evals).

    Intended for fixed-budget cross checks such as comparing the radial
    reduction against the full tensor product on a symmetric integrand.
    """
    integrand.check_integrable()
    if integrand.radial:
        value, used = _boundary_level_radial(integrand, n_omega, n_t)
    else:
        value, used = _boundary_level_full(integrand, n_omega, n_t)
    out = value if integrand.values > 1 else float(value[0])
    return out, used


def integrate_boundary(n, integrand, tol=1e-6, budget=2.0e7, start=None):
    """Tensor-product integration over the boundary of the Siegel half space.

    The boundary is identified with R^(4n) x R^3 carrying Lebesgue measure.
    When the integrand declares rotational symmetry in w' the horizontal
    factor collapses to one radial dimension.  Refinement doubles every axis
    while the cumulative evaluation count fits the budget; the result is
    deterministic for a fixed budget.
    """
    if integrand.n != n:
        raise ValueError("integrand was declared for a different n")
    integrand.check_integrable()
    if start is None:
        start = (12, 8) if integrand.radial else (6, 6)
    a, b = start
    prev = None
    err = math.inf
    n_evals = 0
    value = None
    levels = 0
    while True:
        cost = a * b**3 if integrand.radial else a ** (4 * n) * b**3
        if n_evals + cost > budget:
            break
        if integrand.radial:
            value, used = _boundary_level_radial(integrand, a, b)
        else:
            value, used = _boundary_level_full(integrand, a, b)
        n_evals += used
        levels += 1
        if prev is not None:
            err = float(np.max(np.abs(value - prev)))
            scale = float(np.max(np.abs(value)))
            if err <= max(tol * scale, 1e-300):
                out = value if integrand.values > 1 else float(value[0])
                return QuadratureResult(out, err, n_evals)
        prev = value
        a = max(a + 1, int(a * 1.5))
        b = max(b + 1, int(b * 1.5))
    if value is None or levels < 2:
        raise ValueError("budget too small for two refinement levels")
    out = value if integrand.values > 1 else float(value[0])
    result = QuadratureResult(out, err, n_evals, converged=False)
    raise QuadratureConvergenceError(
        f"budget {budget:g} exhausted before reaching tol={tol:g} (error {err:g})", result
    )


# ----------------------------------------------------------------------
# Monte Carlo fallback


class BallPowerLawSampler:
    """Density proportional to (1 + |w/scale|^2)^(-power) on R^dim."""

    def __init__(self, dim, power, scale=1.0):
        if 2 * power <= dim:
            raise ValueError("power too small for a normalizable density")
        self.dim = dim
        self.power = float(power)
        self.scale = float(scale)
        self._norm = math.gamma(power) / (
            math.pi ** (dim / 2.0) * math.gamma(power - dim / 2.0)
        )

    def sample(self, rng, n):
        s = rng.beta(self.dim / 2.0, self.power - self.dim / 2.0, size=n)
        radius = self.scale * np.sqrt(s / (1.0 - s))
        dirs = rng.standard_normal((n, self.dim))
        dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
        pts = radius[:, None] * dirs
        return pts, self.pdf(pts)

    def pdf(self, pts):
        r2 = np.sum((pts / self.scale) ** 2, axis=-1)
        return self._norm / self.scale**self.dim * (1.0 + r2) ** (-self.power)


class CauchyProductSampler:
    """Independent Cauchy coordinates with a common scale."""

    def __init__(self, dims, scale=1.0):
        self.dims = dims
        self.scale = float(scale)

    def sample(self, rng, n):
        pts = self.scale * rng.standard_cauchy((n, self.dims))
        return pts, self.pdf(pts)

    def pdf(self, pts):
        dens = self.scale / (math.pi * (self.scale**2 + pts**2))
        return np.prod(dens, axis=-1)


class ProductSampler:
    """Joint sampler over (w', t) built from two independent samplers."""

    def __init__(self, omega_sampler, t_sampler):
        self.omega_sampler = omega_sampler
        self.t_sampler = t_sampler

    def sample(self, rng, n):
        w, pw = self.omega_sampler.sample(rng, n)
        t, pt = self.t_sampler.sample(rng, n)
        return (w, t), pw * pt


def mc_integrate(f, sampler, n_samples, seed=0):
    """Importance-sampled mean with a standard-error estimate; seeded."""
    rng = np.random.default_rng(seed)
    pts, pdf = sampler.sample(rng, int(n_samples))
    pdf = np.asarray(pdf, dtype=float)
    if np.any(pdf <= 0.0) or np.any(~np.isfinite(pdf)):
        raise ValueError("sampler produced zero or invalid densities")
    vals = np.asarray(f(pts), dtype=float)
    if np.any(~np.isfinite(vals)):
        raise ValueError("integrand produced non-finite values")
    weights = vals / (pdf[:, None] if vals.ndim > 1 else pdf)
    value = weights.mean(axis=0)
    stderr = weights.std(axis=0, ddof=1) / math.sqrt(len(pdf))
    if vals.ndim == 1:
        value = float(value)
        err = float(stderr)
    else:
        err = float(np.max(stderr))
    return QuadratureResult(value, err, int(n_samples), seed=seed)
