"""Exact calculus on rational functions of the form P(x) / |x|^(2k).

``RatPoly`` is a sparse multivariate polynomial over exact rationals.
``RadialFraction`` divides such a polynomial by an integer power of the
squared radius ``|x|^2 = sum x_i^2`` and keeps itself canonical: the
numerator is never divisible by ``|x|^2`` while the denominator power is
positive, so identity checks (harmonicity, Dirac annihilation, homogeneity)
reduce to exact zero tests.  ``HyperFrac`` is a vector of radial fractions
acting as hypercomplex components; the Dirac operators and linear variable
substitutions act on it.

All values are immutable, all operations are pure.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .hypercomplex import Hypercomplex, _norm_rat, mult_table

MAX_EXPONENT = 1 << 16


def _clean_terms(dim, items):
    terms = {}
    for exps, coef in items:
        exps = tuple(int(e) for e in exps)
        if len(exps) != dim:
            raise ValueError(f"monomial key length {len(exps)} != dim {dim}")
        if any(e < 0 or e >= MAX_EXPONENT for e in exps):
            raise ValueError(f"exponent out of range in {exps}")
        c = _norm_rat(coef)
        if not c:
            continue
        acc = terms.get(exps)
        if acc is None:
            terms[exps] = c
        else:
            acc = acc + c
            if acc:
                terms[exps] = acc
            else:
                del terms[exps]
    return terms


class RatPoly:
    """Sparse polynomial with exact rational coefficients."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim, terms=None):
        object.__setattr__(self, "dim", int(dim))
        if terms is None:
            cleaned = {}
        elif isinstance(terms, dict):
            cleaned = _clean_terms(dim, terms.items())
        else:
            cleaned = _clean_terms(dim, terms)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly values are immutable")

    @classmethod
    def zero(cls, dim):
        return cls(dim)

    @classmethod
    def const(cls, dim, value):
        return cls(dim, {(0,) * dim: value})

    @classmethod
    def variable(cls, dim, i):
        if not 0 <= i < dim:
            raise ValueError(f"variable index {i} out of range")
        key = [0] * dim
        key[i] = 1
        return cls(dim, {tuple(key): 1})

    @classmethod
    def monomial(cls, dim, exps, coef=1):
        return cls(dim, {tuple(exps): coef})

    # -- ring operations ----------------------------------------------------

    def _check_dim(self, other):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        if not isinstance(other, RatPoly):
            return NotImplemented
        self._check_dim(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc = out.get(k)
            if acc is None:
                out[k] = c
            else:
                acc = acc + c
                if acc:
                    out[k] = acc
                else:
                    del out[k]
        p = RatPoly.__new__(RatPoly)
        object.__setattr__(p, "dim", self.dim)
        object.__setattr__(p, "terms", out)
        return p

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        p = RatPoly.__new__(RatPoly)
        object.__setattr__(p, "dim", self.dim)
        object.__setattr__(p, "terms", {k: -c for k, c in self.terms.items()})
        return p

    def __mul__(self, other):
        if isinstance(other, RatPoly):
            self._check_dim(other)
            out = {}
            for ka, ca in self.terms.items():
                for kb, cb in other.terms.items():
                    k = tuple(a + b for a, b in zip(ka, kb))
                    c = ca * cb
                    acc = out.get(k)
                    if acc is None:
                        out[k] = c
                    else:
                        acc = acc + c
                        if acc:
                            out[k] = acc
                        else:
                            del out[k]
            if out and any(e >= MAX_EXPONENT for k in out for e in k):
                raise ValueError("exponent overflow in product")
            p = RatPoly.__new__(RatPoly)
            object.__setattr__(p, "dim", self.dim)
            object.__setattr__(p, "terms", out)
            return p
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c):
        c = _norm_rat(c)
        if not c:
            return RatPoly.zero(self.dim)
        p = RatPoly.__new__(RatPoly)
        object.__setattr__(p, "dim", self.dim)
        object.__setattr__(p, "terms", {k: v * c for k, v in self.terms.items()})
        return p

    def deriv(self, i):
        if not 0 <= i < self.dim:
            raise ValueError(f"axis {i} out of range")
        out = {}
        for k, c in self.terms.items():
            e = k[i]
            if e == 0:
                continue
            nk = k[:i] + (e - 1,) + k[i + 1 :]
            nc = c * e
            acc = out.get(nk)
            out[nk] = nc if acc is None else acc + nc
        return RatPoly(self.dim, out)

    # -- queries -------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        return max((sum(k) for k in self.terms), default=0)

    def homogeneous_degree(self):
        """Common total degree of all monomials, or None if inhomogeneous."""
        degs = {sum(k) for k in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None if degs else 0

    def __eq__(self, other):
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "RatPoly(0)"
        bits = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            mono = "".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(k) if e)
            bits.append(f"{c}{'*' + mono if mono else ''}")
        return "RatPoly(" + " + ".join(bits) + ")"

    # -- evaluation ----------------------------------------------------------

    def eval(self, point):
        point = tuple(point)
        if len(point) != self.dim:
            raise ValueError("point dimension mismatch")
        total = 0
        for k, c in self.terms.items():
            v = c
            for x, e in zip(point, k):
                if e:
                    v = v * x**e
            total = total + v
        return total

    def eval_array(self, x):
        """Evaluate on float points, x shape (..., dim)."""
        x = np.asarray(x, dtype=float)
        out = np.zeros(x.shape[:-1], dtype=float)
        for k, c in self.terms.items():
            term = np.full(x.shape[:-1], float(c))
            for i, e in enumerate(k):
                if e == 1:
                    term = term * x[..., i]
                elif e:
                    term = term * x[..., i] ** e
            out += term
        return out

    # -- substitution ----------------------------------------------------------

    def substitute_linear(self, rows):
        """Replace x_i by the linear form sum_j rows[i][j] * y_j.

        ``rows`` has one row per old variable; the number of columns sets the
        dimension of the resulting polynomial.
        """
        rows = [tuple(_norm_rat(v) for v in r) for r in rows]
        if len(rows) != self.dim:
            raise ValueError(f"need {self.dim} rows, got {len(rows)}")
        new_dim = len(rows[0])
        if any(len(r) != new_dim for r in rows):
            raise ValueError("ragged substitution matrix")
        forms = [RatPoly(new_dim, {tuple(int(j == m) for m in range(new_dim)): rows[i][j] for j in range(new_dim) if rows[i][j]}) for i in range(self.dim)]
        power_cache = [{0: RatPoly.const(new_dim, 1)} for _ in range(self.dim)]

        def form_pow(i, e):
            cache = power_cache[i]
            if e not in cache:
                cache[e] = form_pow(i, e - 1) * forms[i]
            return cache[e]

        out = RatPoly.zero(new_dim)
        for k, c in self.terms.items():
            term = RatPoly.const(new_dim, c)
            for i, e in enumerate(k):
                if e:
                    term = term * form_pow(i, e)
            out = out + term
        return out


def radius_sq(dim):
    """The polynomial sum_i x_i^2."""
    key0 = [0] * dim
    terms = {}
    for i in range(dim):
        k = list(key0)
        k[i] = 2
        terms[tuple(k)] = 1
    return RatPoly(dim, terms)


def try_divide_radius_sq(poly):
    """Exact quotient poly / |x|^2, or None when not divisible.

    Single-divisor multivariate division in lex order; the remainder is zero
    exactly when the polynomial lies in the ideal generated by |x|^2, and the
    first term that cannot be cancelled proves indivisibility.
    """
    if poly.is_zero():
        return poly
    dim = poly.dim
    rsq = radius_sq(dim)
    work = dict(poly.terms)
    quot = {}
    while work:
        m = max(work)
        c = work.pop(m)
        if m[0] < 2:
            return None
        qk = (m[0] - 2,) + m[1:]
        quot[qk] = quot.get(qk, 0) + c
        for rk in rsq.terms:
            k = tuple(a + b for a, b in zip(qk, rk))
            if k == m:
                continue
            acc = work.get(k, 0) - c
            if acc:
                work[k] = acc
            else:
                work.pop(k, None)
    return RatPoly(dim, quot)


class RadialFraction:
    """Canonical P(x) / |x|^(2k) with exact polynomial numerator."""

    __slots__ = ("num", "k")

    def __init__(self, num, k=0):
        if k < 0:
            raise ValueError("denominator power must be nonnegative")
        if num.is_zero():
            k = 0
        while k > 0:
            q = try_divide_radius_sq(num)
            if q is None:
                break
            num, k = q, k - 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "k", k)

    def __setattr__(self, name, value):
        raise AttributeError("RadialFraction values are immutable")

    @property
    def dim(self):
        return self.num.dim

    @classmethod
    def from_poly(cls, poly):
        return cls(poly, 0)

    @classmethod
    def zero(cls, dim):
        return cls(RatPoly.zero(dim), 0)

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.k == 0

    def _check_dim(self, other):
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")

    def __add__(self, other):
        if not isinstance(other, RadialFraction):
            return NotImplemented
        self._check_dim(other)
        k = max(self.k, other.k)
        rsq = radius_sq(self.dim)
        a, b = self.num, other.num
        for _ in range(k - self.k):
            a = a * rsq
        for _ in range(k - other.k):
            b = b * rsq
        return RadialFraction(a + b, k)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RadialFraction(-self.num, self.k)

    def __mul__(self, other):
        if isinstance(other, RadialFraction):
            self._check_dim(other)
            return RadialFraction(self.num * other.num, self.k + other.k)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c):
        return RadialFraction(self.num.scale(c), self.k if c else 0)

    def deriv(self, i):
        """d/dx_i via the quotient rule, re-canonicalized."""
        dnum = self.num.deriv(i)
        if self.k == 0:
            return RadialFraction(dnum, 0)
        xi = RatPoly.variable(self.dim, i)
        new_num = dnum * radius_sq(self.dim) + (xi * self.num).scale(-2 * self.k)
        return RadialFraction(new_num, self.k + 1)

    def __eq__(self, other):
        if not isinstance(other, RadialFraction):
            return NotImplemented
        return self.k == other.k and self.num == other.num

    def __hash__(self):
        return hash((self.k, self.num))

    def __repr__(self):
        if self.k == 0:
            return f"RadialFraction({self.num!r})"
        return f"RadialFraction({self.num!r} / |x|^{2 * self.k})"

    def eval(self, point):
        point = tuple(point)
        if self.k:
            r2 = sum(x * x for x in point)
            if not r2:
                raise ZeroDivisionError("evaluation at the singular origin")
            val = self.num.eval(point)
            if isinstance(val, float) or isinstance(r2, float):
                return val / r2**self.k
            return _norm_rat(Fraction(val) / Fraction(r2) ** self.k)
        return self.num.eval(point)

    def eval_array(self, x):
        x = np.asarray(x, dtype=float)
        val = self.num.eval_array(x)
        if self.k:
            r2 = np.sum(x * x, axis=-1)
            val = val / r2**self.k
        return val

    def to_json(self):
        terms = [
            {"exp": list(k), "coef": f"{Fraction(c).numerator}/{Fraction(c).denominator}"}
            for k, c in sorted(self.num.terms.items())
        ]
        return {"dim": self.dim, "k": self.k, "terms": terms}

    @classmethod
    def from_json(cls, data):
        dim = int(data["dim"])
        terms = {tuple(t["exp"]): Fraction(t["coef"]) for t in data["terms"]}
        return cls(RatPoly(dim, terms), int(data["k"]))


class HyperFrac:
    """Vector of radial fractions acting as hypercomplex components."""

    __slots__ = ("comps",)

    def __init__(self, comps):
        comps = tuple(comps)
        if len(comps) not in (2, 4, 8):
            raise ValueError(f"component count {len(comps)} not supported")
        d = comps[0].dim
        if any(c.dim != d for c in comps):
            raise ValueError("components must share variable dimension")
        object.__setattr__(self, "comps", comps)

    def __setattr__(self, name, value):
        raise AttributeError("HyperFrac values are immutable")

    @property
    def alg_dim(self):
        return len(self.comps)

    @property
    def dim(self):
        return self.comps[0].dim

    @classmethod
    def zero(cls, alg_dim, dim):
        return cls(tuple(RadialFraction.zero(dim) for _ in range(alg_dim)))

    @classmethod
    def from_polys(cls, polys):
        return cls(tuple(RadialFraction.from_poly(p) for p in polys))

    def is_zero(self):
        return all(c.is_zero() for c in self.comps)

    def is_polynomial(self):
        return all(c.k == 0 for c in self.comps)

    def __add__(self, other):
        return HyperFrac(tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other):
        return HyperFrac(tuple(a - b for a, b in zip(self.comps, other.comps)))

    def __neg__(self):
        return HyperFrac(tuple(-a for a in self.comps))

    def scale(self, c):
        return HyperFrac(tuple(a.scale(c) for a in self.comps))

    def __eq__(self, other):
        if not isinstance(other, HyperFrac):
            return NotImplemented
        return self.comps == other.comps

    def __repr__(self):
        return f"HyperFrac({list(self.comps)!r})"

    def eval(self, point):
        return Hypercomplex(tuple(c.eval(point) for c in self.comps))

    def eval_array(self, x):
        x = np.asarray(x, dtype=float)
        out = np.empty(x.shape[:-1] + (self.alg_dim,), dtype=float)
        for i, c in enumerate(self.comps):
            out[..., i] = c.eval_array(x)
        return out

    def dirac(self, side="left", conjugated=False, var_indices=None):
        """Apply the Dirac operator through the multiplication table.

        ``left`` computes sum_i e_i df/dx_i, ``right`` computes
        sum_i (df/dx_i) e_i; ``conjugated`` uses the conjugate basis
        (sign flip on e_1..).  ``var_indices`` selects which variables pair
        with e_0..; by default the variable dimension must equal the
        component count.
        """
        alg = self.alg_dim
        if var_indices is None:
            if self.dim != alg:
                raise ValueError(
                    f"variable dimension {self.dim} != component count {alg};"
                    " pass var_indices explicitly"
                )
            var_indices = range(alg)
        var_indices = tuple(var_indices)
        if len(var_indices) != alg:
            raise ValueError("need one variable per basis element")
        table = mult_table(alg)
        out = [RadialFraction.zero(self.dim) for _ in range(alg)]
        for i, vi in enumerate(var_indices):
            sign_i = -1 if (conjugated and i >= 1) else 1
            for j in range(alg):
                df = self.comps[j].deriv(vi)
                if df.is_zero():
                    continue
                k, s = table[i][j] if side == "left" else table[j][i]
                out[k] = out[k] + df.scale(s * sign_i)
        return HyperFrac(tuple(out))

    def substitute_linear(self, rows):
        """Component-wise x -> Ax substitution; polynomial inputs only."""
        if not self.is_polynomial():
            raise ValueError("substitution requires polynomial components")
        return HyperFrac.from_polys(tuple(c.num.substitute_linear(rows) for c in self.comps))

    def to_json(self):
        return {"components": [c.to_json() for c in self.comps]}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(RadialFraction.from_json(c) for c in data["components"]))
