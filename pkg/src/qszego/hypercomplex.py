"""Quaternion and octonion arithmetic over exact rationals or floats.

One component-vector representation covers the complex numbers (dim 2), the
quaternions (dim 4) and the octonions (dim 8).  Multiplication is table
driven: the sign/index tables are generated at import time from the defining
oriented triples (e_a e_b = e_c plus anticommutativity, e_i^2 = -1 and e_0
acting as identity), never typed by hand.

Values are immutable.  Exact mode stores ``int``/``Fraction`` components and
every operation is exact; floating mode stores ``float``.  The two modes do
not mix silently: combining an exact value with a floating one raises, and
conversion is explicit via :meth:`Hypercomplex.to_float` / ``to_exact``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

import numpy as np

QUATERNION_TRIPLES = ((1, 2, 3),)

OCTONION_TRIPLES = (
    (1, 2, 3),
    (1, 4, 5),
    (1, 7, 6),
    (2, 4, 6),
    (2, 5, 7),
    (3, 4, 7),
    (3, 6, 5),
)


def _build_table(dim, triples):
    """Generate table[i][j] = (k, sign) with e_i e_j = sign * e_k."""
    table = [[None] * dim for _ in range(dim)]
    for i in range(dim):
        table[0][i] = (i, 1)
        table[i][0] = (i, 1)
    for i in range(1, dim):
        table[i][i] = (0, -1)
    for a, b, c in triples:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            if table[x][y] is not None and (x != 0 and y != 0 and x != y):
                raise ValueError(f"triple collision at e{x} e{y}")
            table[x][y] = (z, 1)
            table[y][x] = (z, -1)
    for i in range(dim):
        for j in range(dim):
            if table[i][j] is None:
                raise ValueError(f"triples do not determine e{i} e{j}")
    return tuple(tuple(row) for row in table)


_TABLES = {
    2: _build_table(2, ()),
    4: _build_table(4, QUATERNION_TRIPLES),
    8: _build_table(8, OCTONION_TRIPLES),
}

SUPPORTED_DIMS = tuple(sorted(_TABLES))


def mult_table(dim):
    """The (index, sign) multiplication table for the given dimension."""
    try:
        return _TABLES[dim]
    except KeyError:
        raise ValueError(f"unsupported dimension {dim}") from None


def _norm_rat(x):
    # Keep exact components as plain ints when possible; Fraction stays in
    # lowest terms with positive denominator by construction.
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar component")
    if isinstance(x, int):
        return x
    if isinstance(x, Rational):
        f = Fraction(x)
        return int(f) if f.denominator == 1 else f
    raise TypeError(f"not an exact rational: {x!r}")


class Hypercomplex:
    """An element of a 2/4/8-dimensional real composition algebra."""

    __slots__ = ("dim", "exact", "comps")

    def __init__(self, components, exact=None):
        comps = tuple(components)
        if len(comps) not in _TABLES:
            raise ValueError(f"dimension {len(comps)} not supported")
        if exact is None:
            exact = not any(isinstance(c, float) for c in comps)
        if exact:
            comps = tuple(_norm_rat(c) for c in comps)
        else:
            comps = tuple(float(c) for c in comps)
        object.__setattr__(self, "dim", len(comps))
        object.__setattr__(self, "exact", bool(exact))
        object.__setattr__(self, "comps", comps)

    def __setattr__(self, name, value):
        raise AttributeError("Hypercomplex values are immutable")

    @classmethod
    def _make(cls, dim, exact, comps):
        obj = object.__new__(cls)
        object.__setattr__(obj, "dim", dim)
        object.__setattr__(obj, "exact", exact)
        object.__setattr__(obj, "comps", tuple(comps))
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def basis(cls, dim, index, exact=True):
        if not 0 <= index < dim:
            raise ValueError(f"basis index {index} out of range for dim {dim}")
        comps = [0] * dim
        comps[index] = 1
        if not exact:
            comps = [float(c) for c in comps]
        return cls(comps, exact=exact)

    @classmethod
    def from_real(cls, dim, value, exact=None):
        comps = [value] + [0] * (dim - 1)
        return cls(comps, exact=exact)

    @classmethod
    def zero(cls, dim, exact=True):
        return cls.from_real(dim, 0 if exact else 0.0, exact=exact)

    # -- mode handling -----------------------------------------------------

    def _check_same(self, other):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        if self.exact != other.exact:
            raise TypeError("cannot mix exact and floating values; convert explicitly")

    def _coerce_scalar(self, x):
        if self.exact:
            if isinstance(x, float):
                raise TypeError("float scalar in exact mode; convert explicitly")
            return _norm_rat(x)
        if isinstance(x, (int, float)):
            return float(x)
        raise TypeError(f"bad scalar {x!r} for floating mode")

    def to_float(self):
        if not self.exact:
            return self
        return Hypercomplex._make(self.dim, False, tuple(float(c) for c in self.comps))

    def to_exact(self):
        """Exact copy; float components convert via Fraction (always exact)."""
        if self.exact:
            return self
        return Hypercomplex._make(
            self.dim, True, tuple(_norm_rat(Fraction(c)) for c in self.comps)
        )

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Hypercomplex):
            return NotImplemented
        self._check_same(other)
        return Hypercomplex._make(
            self.dim, self.exact, tuple(a + b for a, b in zip(self.comps, other.comps))
        )

    def __sub__(self, other):
        if not isinstance(other, Hypercomplex):
            return NotImplemented
        self._check_same(other)
        return Hypercomplex._make(
            self.dim, self.exact, tuple(a - b for a, b in zip(self.comps, other.comps))
        )

    def __neg__(self):
        return Hypercomplex._make(self.dim, self.exact, tuple(-a for a in self.comps))

    def __mul__(self, other):
        if isinstance(other, Hypercomplex):
            self._check_same(other)
            table = _TABLES[self.dim]
            out = [0] * self.dim
            for i, ai in enumerate(self.comps):
                if not ai:
                    continue
                row = table[i]
                for j, bj in enumerate(other.comps):
                    if not bj:
                        continue
                    k, s = row[j]
                    if s > 0:
                        out[k] = out[k] + ai * bj
                    else:
                        out[k] = out[k] - ai * bj
            if not self.exact:
                out = [float(v) for v in out]
            return Hypercomplex._make(self.dim, self.exact, out)
        c = self._coerce_scalar(other)
        return Hypercomplex._make(self.dim, self.exact, tuple(a * c for a in self.comps))

    def __rmul__(self, other):
        c = self._coerce_scalar(other)
        return Hypercomplex._make(self.dim, self.exact, tuple(c * a for a in self.comps))

    def __truediv__(self, other):
        if isinstance(other, Hypercomplex):
            return self * other.inverse()
        c = self._coerce_scalar(other)
        if not c:
            raise ZeroDivisionError("division by zero scalar")
        if self.exact:
            inv = Fraction(1, 1) / Fraction(c)
            return self * _norm_rat(inv)
        return self * (1.0 / c)

    def conj(self):
        c = self.comps
        return Hypercomplex._make(self.dim, self.exact, (c[0],) + tuple(-x for x in c[1:]))

    def norm_sq(self):
        return sum(c * c for c in self.comps)

    def __abs__(self):
        import math

        return math.sqrt(float(self.norm_sq()))

    def inverse(self):
        n2 = self.norm_sq()
        if not n2:
            raise ZeroDivisionError("inverse of zero")
        if self.exact:
            scale = _norm_rat(Fraction(1, 1) / Fraction(n2))
        else:
            scale = 1.0 / n2
        return self.conj() * scale

    @property
    def re(self):
        return self.comps[0]

    def im(self, i):
        if not 1 <= i < self.dim:
            raise ValueError(f"imaginary index {i} out of range for dim {self.dim}")
        return self.comps[i]

    def vector_part(self):
        zero = 0 if self.exact else 0.0
        return Hypercomplex._make(self.dim, self.exact, (zero,) + self.comps[1:])

    def is_zero(self):
        return not any(self.comps)

    def __eq__(self, other):
        if not isinstance(other, Hypercomplex):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.exact == other.exact
            and all(a == b for a, b in zip(self.comps, other.comps))
        )

    def __hash__(self):
        return hash((self.dim, self.exact, self.comps))

    def approx_eq(self, other, rel=1e-12, abs_tol=0.0):
        diff = max(abs(float(a) - float(b)) for a, b in zip(self.comps, other.comps))
        scale = max(abs(self), abs(other))
        return diff <= max(abs_tol, rel * scale)

    # -- rendering ----------------------------------------------------------

    def to_text(self):
        parts = []
        for i, c in enumerate(self.comps):
            if not c:
                continue
            coef = str(c) if self.exact else repr(c)
            parts.append(coef if i == 0 else f"{coef} e{i}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"Hypercomplex({self.to_text()!r}, dim={self.dim})"

    def to_json(self):
        """JSON array form; exact rationals rendered as "p/q" strings."""
        if self.exact:
            return [f"{Fraction(c).numerator}/{Fraction(c).denominator}" for c in self.comps]
        return list(self.comps)


_TERM_RE = re.compile(
    r"^\s*(?P<coef>[+-]?(?:[0-9]+/[0-9]+"
    r"|(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?))?"
    r"\s*(?:e(?P<idx>[0-9]+))?\s*$"
)


def parse_text(text, dim, exact=True):
    """Parse the ``to_text`` rendering back to a value (exact round trip)."""
    comps = [0.0] * dim if not exact else [Fraction(0)] * dim
    body = text.strip()
    if body == "0":
        return Hypercomplex(comps, exact=exact)
    body = body.replace("- ", "+ -").replace(" -", " +-")
    for raw in body.split("+"):
        raw = raw.strip()
        if not raw:
            continue
        m = _TERM_RE.match(raw)
        if not m or (m.group("coef") is None and m.group("idx") is None):
            raise ValueError(f"cannot parse term {raw!r}")
        coef_s = m.group("coef")
        idx = int(m.group("idx")) if m.group("idx") is not None else 0
        if coef_s in (None, "", "+", "-"):
            coef_s = f"{coef_s or ''}1"
        coef = Fraction(coef_s) if exact else float(coef_s)
        if idx >= dim:
            raise ValueError(f"component e{idx} out of range for dim {dim}")
        comps[idx] = comps[idx] + coef
    return Hypercomplex(comps, exact=exact)


def from_json(arr):
    comps = []
    exact = True
    for v in arr:
        if isinstance(v, str):
            comps.append(Fraction(v))
        else:
            comps.append(float(v))
            exact = False
    return Hypercomplex(comps, exact=exact)


def quaternion(x0, x1, x2, x3, exact=None):
    return Hypercomplex((x0, x1, x2, x3), exact=exact)


def octonion(*comps, exact=None):
    if len(comps) != 8:
        raise ValueError("octonion needs 8 components")
    return Hypercomplex(comps, exact=exact)


def associator(x, y, z):
    """(xy)z - x(yz); vanishes identically on associative subalgebras."""
    return (x * y) * z - x * (y * z)


def commutator(x, y):
    return x * y - y * x


def left_mult_matrix(a):
    """Matrix M with (a*x)_k = sum_j M[k][j] x_j, entries in a's scalar mode."""
    dim = a.dim
    table = _TABLES[dim]
    zero = 0 if a.exact else 0.0
    m = [[zero] * dim for _ in range(dim)]
    for l, al in enumerate(a.comps):
        if not al:
            continue
        for j in range(dim):
            k, s = table[l][j]
            m[k][j] = m[k][j] + (al if s > 0 else -al)
    return tuple(tuple(row) for row in m)


def mul_arrays(a, b, dim):
    """Vectorized product of component arrays with shape (..., dim)."""
    table = _TABLES[dim]
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=float)
    for i in range(dim):
        ai = a[..., i]
        for j in range(dim):
            k, s = table[i][j]
            if s > 0:
                out[..., k] += ai * b[..., j]
            else:
                out[..., k] -= ai * b[..., j]
    return out


def conj_arrays(a):
    out = np.array(a, dtype=float, copy=True)
    out[..., 1:] *= -1.0
    return out
