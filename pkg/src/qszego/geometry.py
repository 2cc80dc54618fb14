"""Siegel half spaces, Heisenberg groups and the Cayley transform.

Points ``(q', q_{n+1})`` with Re q_{n+1} > |q'|^2 form the quaternionic
Siegel half space; the octonionic case has a single horizontal coordinate.
The boundary is parameterized by Heisenberg group elements ``[w', t]`` whose
twisted product makes translation an automorphism of the domain.  Both the
quaternionic and the octonionic multiplication laws are implemented exactly
as printed (they differ in the sign and the order of the conjugated factor;
see :func:`group_mul_with_convention` for testing either convention on
either group).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .hypercomplex import Hypercomplex, _norm_rat


def _coerce_t(t, exact):
    if exact:
        return tuple(_norm_rat(v) for v in t)
    return tuple(float(v) for v in t)


@dataclass(frozen=True)
class SiegelPoint:
    """A point (q', q_{n+1}); height r = Re(vertical) - |horizontal|^2."""

    horizontal: tuple
    vertical: Hypercomplex

    def __post_init__(self):
        horizontal = tuple(self.horizontal)
        object.__setattr__(self, "horizontal", horizontal)
        dim = self.vertical.dim
        exact = self.vertical.exact
        for h in horizontal:
            if h.dim != dim:
                raise ValueError("mixed algebra dimensions in point")
            if h.exact != exact:
                raise TypeError("mixed scalar modes in point")
        if dim == 8 and len(horizontal) != 1:
            raise ValueError("octonionic points have a single horizontal coordinate")

    @property
    def n(self):
        return len(self.horizontal)

    @property
    def alg_dim(self):
        return self.vertical.dim

    @property
    def exact(self):
        return self.vertical.exact

    def height(self):
        return self.vertical.re - sum(h.norm_sq() for h in self.horizontal)

    def in_domain(self):
        return self.height() > 0

    def on_boundary(self, tol=0.0):
        return abs(float(self.height())) <= tol

    def to_float(self):
        return SiegelPoint(tuple(h.to_float() for h in self.horizontal), self.vertical.to_float())

    def to_json(self):
        return {
            "horizontal": [h.to_json() for h in self.horizontal],
            "vertical": self.vertical.to_json(),
        }

    @classmethod
    def from_json(cls, data):
        from .hypercomplex import from_json

        return cls(tuple(from_json(h) for h in data["horizontal"]), from_json(data["vertical"]))


@dataclass(frozen=True)
class BallPoint:
    """A point (sigma_1, sigma_2) of the unit ball model."""

    sigma1: Hypercomplex
    sigma2: Hypercomplex

    def norm_sq_sum(self):
        return self.sigma1.norm_sq() + self.sigma2.norm_sq()

    def in_ball(self):
        return self.norm_sq_sum() < 1


@dataclass(frozen=True)
class GroupElement:
    """Heisenberg element [w', t]; t has 3 (quaternionic) or 7 (octonionic) slots."""

    omega: tuple
    t: tuple

    def __post_init__(self):
        omega = tuple(self.omega)
        if not omega:
            raise ValueError("empty horizontal part")
        dim = omega[0].dim
        exact = omega[0].exact
        for w in omega:
            if w.dim != dim or w.exact != exact:
                raise ValueError("inconsistent horizontal components")
        expected_t = {4: 3, 8: 7}.get(dim)
        if expected_t is None:
            raise ValueError(f"unsupported algebra dimension {dim}")
        if dim == 8 and len(omega) != 1:
            raise ValueError("octonionic elements have a single horizontal coordinate")
        t = _coerce_t(self.t, exact)
        if len(t) != expected_t:
            raise ValueError(f"t must have {expected_t} components")
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "t", t)

    @property
    def kind(self):
        return "quaternionic" if self.omega[0].dim == 4 else "octonionic"

    @property
    def n(self):
        return len(self.omega)

    @property
    def alg_dim(self):
        return self.omega[0].dim

    @property
    def exact(self):
        return self.omega[0].exact

    def to_float(self):
        return GroupElement(tuple(w.to_float() for w in self.omega), tuple(float(v) for v in self.t))

    def to_json(self):
        return {
            "omega": [w.to_json() for w in self.omega],
            "t": [v if isinstance(v, float) else str(Fraction(v)) for v in self.t],
        }

    @classmethod
    def from_json(cls, data):
        from .hypercomplex import from_json

        t = tuple(Fraction(v) if isinstance(v, str) else float(v) for v in data["t"])
        return cls(tuple(from_json(w) for w in data["omega"]), t)


def identity_element(kind, n=1, exact=True):
    dim = 4 if kind == "quaternionic" else 8
    n = 1 if kind == "octonionic" else n
    omega = tuple(Hypercomplex.zero(dim, exact=exact) for _ in range(n))
    t_len = 3 if kind == "quaternionic" else 7
    t = (0,) * t_len if exact else (0.0,) * t_len
    return GroupElement(omega, t)


def _hermitian_pairing(a, b):
    """sum_i conj(a_i) b_i over horizontal tuples."""
    acc = Hypercomplex.zero(a[0].dim, exact=a[0].exact)
    for ai, bi in zip(a, b):
        acc = acc + ai.conj() * bi
    return acc


def group_mul_with_convention(a, b, convention):
    """Product [alpha,t][beta,s] with an explicit t-part convention.

    ``minus_conj_beta_alpha``: t_i + s_i - 2 Im_i(conj(beta) . alpha)
    ``plus_conj_alpha_beta``:  t_i + s_i + 2 Im_i(conj(alpha) . beta)

    The two agree identically because conj(beta).alpha and conj(alpha).beta
    are conjugates of each other; both are kept so the compatibility suite
    can exercise each printed form.
    """
    if a.kind != b.kind or a.n != b.n:
        raise ValueError("group kind/shape mismatch")
    if a.exact != b.exact:
        raise TypeError("scalar mode mismatch")
    omega = tuple(wa + wb for wa, wb in zip(a.omega, b.omega))
    if convention == "minus_conj_beta_alpha":
        inner = _hermitian_pairing(b.omega, a.omega)
        t = tuple(ta + sb - 2 * inner.im(i + 1) for i, (ta, sb) in enumerate(zip(a.t, b.t)))
    elif convention == "plus_conj_alpha_beta":
        inner = _hermitian_pairing(a.omega, b.omega)
        t = tuple(ta + sb + 2 * inner.im(i + 1) for i, (ta, sb) in enumerate(zip(a.t, b.t)))
    else:
        raise ValueError(f"unknown convention {convention!r}")
    return GroupElement(omega, t)


def group_mul(a, b):
    """Heisenberg product, using each group's printed convention."""
    conv = "minus_conj_beta_alpha" if a.kind == "quaternionic" else "plus_conj_alpha_beta"
    return group_mul_with_convention(a, b, conv)


def group_inverse(h):
    return GroupElement(tuple(-w for w in h.omega), tuple(-v for v in h.t))


def _imag_embedding(dim, t, exact):
    comps = [0 if exact else 0.0] + list(t)
    return Hypercomplex(comps, exact=exact)


def translate(h, p):
    """Left translation of the half space by [w', t]."""
    if h.alg_dim != p.alg_dim or h.n != p.n:
        raise ValueError("element/point shape mismatch")
    if h.exact != p.exact:
        raise TypeError("scalar mode mismatch")
    horizontal = tuple(qi + wi for qi, wi in zip(p.horizontal, h.omega))
    shift = _hermitian_pairing(h.omega, p.horizontal) * 2
    w2 = sum(w.norm_sq() for w in h.omega)
    vertical = (
        p.vertical
        + Hypercomplex.from_real(p.alg_dim, w2, exact=p.exact)
        + shift
        + _imag_embedding(p.alg_dim, h.t, p.exact)
    )
    return SiegelPoint(horizontal, vertical)


def dilate(delta, p):
    if not delta > 0:
        raise ValueError("dilation factor must be positive")
    if p.exact:
        delta = _norm_rat(delta if not isinstance(delta, float) else Fraction(delta))
    else:
        delta = float(delta)
    return SiegelPoint(tuple(h * delta for h in p.horizontal), p.vertical * (delta * delta))


def dilate_element(delta, h):
    """Group dilation delta o [w', t] = [delta w', delta^2 t]."""
    if not delta > 0:
        raise ValueError("dilation factor must be positive")
    if h.exact:
        delta = _norm_rat(delta if not isinstance(delta, float) else Fraction(delta))
    else:
        delta = float(delta)
    d2 = delta * delta
    return GroupElement(tuple(w * delta for w in h.omega), tuple(v * d2 for v in h.t))


def rotate(rotation, p, tol=1e-12):
    """Componentwise rotation (R_1 q_1, ..., R_n q_n, q_{n+1}), |R_i| = 1."""
    rotation = tuple(rotation)
    if len(rotation) != p.n:
        raise ValueError("one unit rotation per horizontal coordinate")
    for r in rotation:
        n2 = r.norm_sq()
        if r.exact:
            if n2 != 1:
                raise ValueError("rotation components must have unit norm")
        elif abs(float(n2) - 1.0) > tol:
            raise ValueError("rotation components must have unit norm")
    horizontal = tuple(r * q for r, q in zip(rotation, p.horizontal))
    return SiegelPoint(horizontal, p.vertical)


def boundary_param(h):
    """[w', t] -> (w', |w'|^2 + e.t), a point on the boundary."""
    w2 = sum(w.norm_sq() for w in h.omega)
    vertical = Hypercomplex.from_real(h.alg_dim, w2, exact=h.exact) + _imag_embedding(
        h.alg_dim, h.t, h.exact
    )
    return SiegelPoint(h.omega, vertical)


def boundary_unparam(p, tol=1e-12):
    """Inverse of :func:`boundary_param`; requires the point on the boundary."""
    height = p.height()
    if p.exact:
        if height != 0:
            raise ValueError("point is not on the boundary")
    elif abs(float(height)) > tol:
        raise ValueError(f"point is off the boundary by {float(height):g}")
    t = tuple(p.vertical.comps[1:])
    return GroupElement(p.horizontal, t)


def cayley(p):
    """Octonionic Siegel half space (n=1) to the unit ball."""
    if p.alg_dim != 8 or p.n != 1:
        raise ValueError("Cayley transform expects an octonionic point with n=1")
    tau1, tau2 = p.horizontal[0], p.vertical
    one = Hypercomplex.from_real(8, 1 if p.exact else 1.0, exact=p.exact)
    denom = (one + tau2).norm_sq()
    if not denom:
        raise ZeroDivisionError("Cayley pole: tau2 = -1")
    inv = (Fraction(1) / Fraction(denom)) if p.exact else 1.0 / denom
    if p.exact:
        inv = _norm_rat(inv)
    sigma1 = (tau1 * 2) * (one + tau2.conj()) * inv
    sigma2 = (one + tau2.conj()) * (one - tau2) * inv
    return BallPoint(sigma1, sigma2)


def cayley_inv(b):
    """Unit ball back to the Siegel half space."""
    sigma1, sigma2 = b.sigma1, b.sigma2
    exact = sigma1.exact
    one = Hypercomplex.from_real(8, 1 if exact else 1.0, exact=exact)
    denom = (one + sigma2).norm_sq()
    if not denom:
        raise ZeroDivisionError("Cayley pole: sigma2 = -1")
    inv = (Fraction(1) / Fraction(denom)) if exact else 1.0 / denom
    if exact:
        inv = _norm_rat(inv)
    tau1 = sigma1 * (one + sigma2.conj()) * inv
    tau2 = (one + sigma2.conj()) * (one - sigma2) * inv
    return SiegelPoint((tau1,), tau2)


def rho_length(h):
    """Homogeneous length max(|w'|, max_i |t_i|^(1/2))."""
    w2 = sum(float(w.norm_sq()) for w in h.omega)
    vals = [math.sqrt(w2)] + [math.sqrt(abs(float(v))) for v in h.t]
    return max(vals)


def homogeneous_dim(n):
    """Homogeneous dimension of the quaternionic Heisenberg group."""
    return 4 * n + 6
