"""Truncated formal power series over exact coefficient rings.

A :class:`TruncSeries` carries its truncation order explicitly: it knows the
coefficients of ``z**0 .. z**(order-1)`` and nothing else.  Arithmetic between
series of different orders truncates to the smaller one, and equality compares
coefficients up to the common order.

Three coefficient rings are supported, selected by a ring tag:

* ``QQ``   -- rationals (:class:`fractions.Fraction`)
* ``QQz``  -- polynomials in an auxiliary variable ``z`` over the rationals
  (:class:`~pseudofactorials.algebra.Poly`); used for series in ``t`` whose
  coefficients are polynomials in ``z``
* ``Zmod(M)`` -- integers modulo ``M`` (:class:`~pseudofactorials.algebra.ModInt`)

:class:`TruncSeries2` is a bivariate series over the rationals truncated by
total degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .algebra import AlgebraError, ModInt, Poly, format_rational

__all__ = [
    "QQ",
    "QQz",
    "Ring",
    "RingMismatch",
    "SeriesError",
    "TruncSeries",
    "TruncSeries2",
    "Zmod",
    "proportional",
    "series_antiderivative",
    "series_compose_transcendental",
    "series_derivative",
    "series_mul",
    "series_reciprocal",
    "series_sqrt",
    "substitute_sum",
]


class SeriesError(AlgebraError):
    pass


class RingMismatch(SeriesError, TypeError):
    pass


# ---------------------------------------------------------------------- rings


class Ring:
    name = "?"

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def coerce(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def div_int(self, x, n: int):
        raise NotImplementedError

    def fmt(self, x) -> str:
        return str(x)

    def __repr__(self):
        return self.name


class _Rationals(Ring):
    name = "QQ"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise RingMismatch(f"cannot coerce {type(x).__name__} into QQ")

    def inv(self, x):
        if x == 0:
            raise SeriesError("zero is not invertible")
        return 1 / x

    def div_int(self, x, n):
        return x / n

    def fmt(self, x):
        return format_rational(x)


class _PolyRing(Ring):
    name = "QQ[z]"

    def zero(self):
        return Poly()

    def one(self):
        return Poly.const(1)

    def coerce(self, x):
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return Poly.const(x)
        raise RingMismatch(f"cannot coerce {type(x).__name__} into QQ[z]")

    def inv(self, x):
        if x.degree != 0:
            raise SeriesError(f"polynomial {x} is not a unit")
        return Poly.const(1 / x[0])

    def div_int(self, x, n):
        return x / n

    def fmt(self, x):
        return "(" + x.to_str("z") + ")" if len(x) > 1 else str(x)


@dataclass(frozen=True)
class Zmod(Ring):
    """Integers modulo ``modulus``."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise SeriesError("modulus must be >= 2")

    @property
    def name(self):
        return f"Z/{self.modulus}"

    def zero(self):
        return ModInt(0, self.modulus)

    def one(self):
        return ModInt(1, self.modulus)

    def coerce(self, x):
        if isinstance(x, ModInt):
            if x.modulus != self.modulus:
                raise RingMismatch("modulus mismatch")
            return x
        if isinstance(x, Fraction):
            if x.denominator != 1:
                return ModInt(x.numerator, self.modulus) / x.denominator
            x = x.numerator
        if isinstance(x, int):
            return ModInt(x, self.modulus)
        raise RingMismatch(f"cannot coerce {type(x).__name__} into {self.name}")

    def inv(self, x):
        try:
            return x.inverse()
        except AlgebraError as exc:
            raise SeriesError(str(exc)) from None

    def div_int(self, x, n):
        if math.gcd(n, self.modulus) != 1:
            raise SeriesError(f"{n} is not invertible modulo {self.modulus}")
        return x * pow(n, -1, self.modulus)

    def __repr__(self):
        return self.name


QQ = _Rationals()
QQz = _PolyRing()


# ------------------------------------------------------------ univariate series


class TruncSeries:
    """Power series ``c0 + c1*z + ... + O(z**order)``."""

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Iterable = (), ring: Ring = QQ, order: int | None = None):
        cs = [ring.coerce(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise SeriesError("negative truncation order")
            cs = cs[:order] + [ring.zero()] * (order - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "ring", ring)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def _raw(cls, coeffs, ring):
        s = object.__new__(cls)
        object.__setattr__(s, "coeffs", tuple(coeffs))
        object.__setattr__(s, "ring", ring)
        return s

    # construction helpers
    @classmethod
    def constant(cls, c, order: int, ring: Ring = QQ) -> "TruncSeries":
        return cls([c], ring, order)

    @classmethod
    def variable(cls, order: int, ring: Ring = QQ) -> "TruncSeries":
        return cls([0, 1], ring, order)

    @classmethod
    def from_egf(cls, values: Sequence[int | Fraction], order: int | None = None) -> "TruncSeries":
        """Series with coefficients ``values[n] / n!``."""
        n = len(values) if order is None else order
        out, fact = [], 1
        for k in range(n):
            if k:
                fact *= k
            out.append(Fraction(values[k]) / fact)
        return cls._raw(out, QQ)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return self.coeffs[k]
        if not 0 <= k < len(self.coeffs):
            raise IndexError(f"coefficient {k} is beyond truncation order {self.order}")
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return TruncSeries._raw(self.coeffs[:order], self.ring)

    def egf_values(self) -> list:
        """``n! * [z**n]`` for each known coefficient."""
        out, fact = [], 1
        for n, c in enumerate(self.coeffs):
            if n:
                fact *= n
            out.append(c * fact)
        return out

    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _binary(self, other):
        if isinstance(other, TruncSeries):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            n = min(self.order, other.order)
            return self.coeffs[:n], other.coeffs[:n]
        return None

    def __add__(self, other):
        pair = self._binary(other)
        if pair is None:
            c = self.ring.coerce(other)
            if not self.coeffs:
                return self
            return TruncSeries._raw((self.coeffs[0] + c,) + self.coeffs[1:], self.ring)
        a, b = pair
        return TruncSeries._raw([x + y for x, y in zip(a, b)], self.ring)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries._raw([-c for c in self.coeffs], self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(self.ring, Zmod):
            c = other
        else:
            c = self.ring.coerce(other)
        return TruncSeries._raw([x * c for x in self.coeffs], self.ring)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, series_reciprocal(other))
        if isinstance(other, int):
            return TruncSeries._raw([self.ring.div_int(x, other) for x in self.coeffs], self.ring)
        inv = self.ring.inv(self.ring.coerce(other))
        return TruncSeries._raw([x * inv for x in self.coeffs], self.ring)

    def __pow__(self, n: int) -> "TruncSeries":
        if n < 0:
            return series_reciprocal(self) ** (-n)
        out = TruncSeries.constant(self.ring.one(), self.order, self.ring)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            if other.ring != self.ring:
                return False
            n = min(self.order, other.order)
            return self.coeffs[:n] == other.coeffs[:n]
        return NotImplemented

    __hash__ = None

    def reflect(self) -> "TruncSeries":
        """a(-z)."""
        return TruncSeries._raw([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)], self.ring)

    def shift_down(self, k: int) -> "TruncSeries":
        """Divide by ``z**k``; the first ``k`` coefficients must vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise SeriesError(f"series is not divisible by z^{k}")
        return TruncSeries._raw(self.coeffs[k:], self.ring)

    def shift_up(self, k: int) -> "TruncSeries":
        """Multiply by ``z**k`` (order grows by ``k``)."""
        return TruncSeries._raw([self.ring.zero()] * k + list(self.coeffs), self.ring)

    def derivative(self) -> "TruncSeries":
        return series_derivative(self)

    def antiderivative(self) -> "TruncSeries":
        return series_antiderivative(self)

    def map(self, fn: Callable, ring: Ring | None = None) -> "TruncSeries":
        ring = ring or self.ring
        return TruncSeries._raw([ring.coerce(fn(c)) for c in self.coeffs], ring)

    def evaluate(self, x):
        """Numerical value of the truncated sum at a float/complex point."""
        if self.ring is not QQ:
            raise SeriesError("numerical evaluation needs rational coefficients")
        acc = 0.0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [self.ring.fmt(c) for c in self.coeffs]}

    def to_str(self, var: str = "z") -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            s = self.ring.fmt(c)
            if i == 0:
                terms.append(s)
            elif i == 1:
                terms.append(f"{s}*{var}")
            else:
                terms.append(f"{s}*{var}^{i}")
        terms.append(f"O({var}^{self.order})")
        return " + ".join(terms)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"TruncSeries({self.to_str()}, ring={self.ring!r})"


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated to the smaller order."""
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    n = min(a.order, b.order)
    x, y = a.coeffs, b.coeffs
    zero = a.ring.zero()
    out = [zero] * n
    for i in range(n):
        xi = x[i]
        if xi == 0:
            continue
        for j in range(n - i):
            yj = y[j]
            if yj != 0:
                out[i + j] = out[i + j] + xi * yj
    return TruncSeries._raw(out, a.ring)


def series_reciprocal(a: TruncSeries) -> TruncSeries:
    """1/a to the order of ``a``; the constant term must be a unit."""
    if a.order == 0:
        return a
    ring = a.ring
    inv0 = ring.inv(a.coeffs[0])
    out = [inv0]
    for n in range(1, a.order):
        acc = ring.zero()
        for k in range(1, n + 1):
            ak = a.coeffs[k]
            if ak != 0:
                acc = acc + ak * out[n - k]
        out.append(-(acc * inv0))
    return TruncSeries._raw(out, ring)


def series_derivative(a: TruncSeries) -> TruncSeries:
    """Termwise d/dz; the result has order ``a.order - 1``."""
    return TruncSeries._raw([a.coeffs[k] * k for k in range(1, a.order)], a.ring)


def series_antiderivative(a: TruncSeries) -> TruncSeries:
    """Integral from 0 with zero constant term; order grows by one."""
    ring = a.ring
    out = [ring.zero()]
    for k, c in enumerate(a.coeffs):
        out.append(ring.div_int(c, k + 1))
    return TruncSeries._raw(out, ring)


def _sqrt_coefficientwise(a: TruncSeries) -> TruncSeries:
    ring = a.ring
    out = [ring.one()]
    for n in range(1, a.order):
        acc = a.coeffs[n]
        for k in range(1, n):
            acc = acc - out[k] * out[n - k]
        out.append(ring.div_int(acc, 2))
    return TruncSeries._raw(out, ring)


def _sqrt_newton(a: TruncSeries) -> TruncSeries:
    # s <- (s + a/s)/2, doubling the number of correct terms each pass
    s = TruncSeries.constant(a.ring.one(), 1, a.ring)
    prec = 1
    while prec < a.order:
        prec = min(2 * prec, a.order)
        s = TruncSeries._raw(list(s.coeffs) + [a.ring.zero()] * (prec - s.order), a.ring)
        s = (s + a.truncate(prec) / s) / 2
    return s


def series_sqrt(a: TruncSeries, method: str = "coefficientwise") -> TruncSeries:
    """Square root with constant term +1.

    ``method`` is ``"coefficientwise"`` (solve for one coefficient at a time) or
    ``"newton"``; in exact arithmetic both return the same series.
    """
    if a.order == 0:
        return a
    if a.coeffs[0] != a.ring.one():
        raise SeriesError("series_sqrt needs constant term 1")
    if method == "coefficientwise":
        return _sqrt_coefficientwise(a)
    if method == "newton":
        return _sqrt_newton(a)
    raise ValueError(f"unknown sqrt method {method!r}")


def series_compose_transcendental(kind: str, arg: TruncSeries) -> TruncSeries:
    """cosh, sinh or exp of a series with zero constant term.

    Uses the coupled recurrences C' = A' S, S' = A' C, so the argument may
    have coefficients in any ring where integers up to the order are
    invertible (in particular ``QQz``).
    """
    if kind not in ("cosh", "sinh", "exp"):
        raise ValueError(f"unknown transcendental {kind!r}")
    ring = arg.ring
    if arg.order and arg.coeffs[0] != 0:
        raise SeriesError(f"{kind} composition needs a zero constant term")
    n = arg.order
    A = arg.coeffs
    C = [ring.one()]
    S = [ring.zero()]
    for m in range(1, n):
        c = ring.zero()
        s = ring.zero()
        for k in range(1, m + 1):
            if A[k] == 0:
                continue
            kA = A[k] * k
            c = c + kA * S[m - k]
            s = s + kA * C[m - k]
        C.append(ring.div_int(c, m))
        S.append(ring.div_int(s, m))
    C, S = C[:n], S[:n]
    if kind == "cosh":
        return TruncSeries._raw(C, ring)
    if kind == "sinh":
        return TruncSeries._raw(S, ring)
    return TruncSeries._raw([x + y for x, y in zip(C, S)], ring)


def proportional(a: TruncSeries, b: TruncSeries) -> bool:
    """True iff ``a`` is a constant multiple of ``b`` up to the common order.

    Decided by cross-multiplication against the leading coefficients, never by
    series division.
    """
    n = min(a.order, b.order)
    va = next((i for i in range(n) if a.coeffs[i] != 0), None)
    vb = next((i for i in range(n) if b.coeffs[i] != 0), None)
    if vb is None:
        return va is None
    if va is None:
        return True
    if va != vb:
        return False
    la, lb = a.coeffs[va], b.coeffs[vb]
    return all(a.coeffs[i] * lb == b.coeffs[i] * la for i in range(n))


# ------------------------------------------------------------- bivariate series


class TruncSeries2:
    """Bivariate rational series ``sum c[i][j] x**i y**j`` over ``i + j < order``."""

    __slots__ = ("rows", "order")

    def __init__(self, order: int, rows: Sequence[Sequence] | None = None):
        object.__setattr__(self, "order", order)
        if rows is None:
            rows = [[Fraction(0)] * (order - i) for i in range(order)]
        else:
            rows = [
                [Fraction(rows[i][j]) if i < len(rows) and j < len(rows[i]) else Fraction(0)
                 for j in range(order - i)]
                for i in range(order)
            ]
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries2 is immutable")

    def __getitem__(self, ij):
        i, j = ij
        if i + j >= self.order:
            raise IndexError(f"total degree {i + j} is beyond order {self.order}")
        return self.rows[i][j]

    @classmethod
    def outer(cls, a: TruncSeries, b: TruncSeries, order: int | None = None) -> "TruncSeries2":
        """a(x) * b(y)."""
        n = min(a.order, b.order) if order is None else order
        if n > min(a.order, b.order):
            raise SeriesError("factors are not known to the requested order")
        return cls(n, [[a.coeffs[i] * b.coeffs[j] for j in range(n - i)] for i in range(n)])

    @classmethod
    def constant(cls, c, order: int) -> "TruncSeries2":
        rows = [[Fraction(0)] * (order - i) for i in range(order)]
        if order:
            rows[0][0] = Fraction(c)
        return cls(order, rows)

    def _check(self, other):
        if not isinstance(other, TruncSeries2):
            return None
        return min(self.order, other.order)

    def __add__(self, other):
        n = self._check(other)
        if n is None:
            return self + TruncSeries2.constant(other, self.order)
        return TruncSeries2(n, [[self.rows[i][j] + other.rows[i][j] for j in range(n - i)] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries2(self.order, [[-c for c in r] for r in self.rows])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncSeries2(self.order, [[c * other for c in r] for r in self.rows])
        n = self._check(other)
        if n is None:
            return NotImplemented
        out = [[Fraction(0)] * (n - i) for i in range(n)]
        A, B = self.rows, other.rows
        for i1 in range(n):
            for j1 in range(n - i1):
                a = A[i1][j1]
                if a == 0:
                    continue
                for i2 in range(n - i1 - j1):
                    row_b = B[i2]
                    row_o = out[i1 + i2]
                    for j2 in range(n - i1 - j1 - i2):
                        b = row_b[j2]
                        if b:
                            row_o[j1 + j2] += a * b
        return TruncSeries2(n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        n = self._check(other)
        if n is None:
            return NotImplemented
        return all(self.rows[i][:n - i] == other.rows[i][:n - i] for i in range(n))

    __hash__ = None

    def is_zero(self) -> bool:
        return all(c == 0 for r in self.rows for c in r)

    def at_y0(self) -> TruncSeries:
        """Specialisation y = 0 as a univariate series in x."""
        return TruncSeries([r[0] for r in self.rows], QQ)

    def at_x0(self) -> TruncSeries:
        return TruncSeries(list(self.rows[0]) if self.order else [], QQ)

    def nonzero_terms(self):
        return [(i, j, c) for i, r in enumerate(self.rows) for j, c in enumerate(r) if c != 0]

    def __repr__(self):
        return f"TruncSeries2(order={self.order}, nonzero={len(self.nonzero_terms())})"


def substitute_sum(f_coeffs: Sequence, order: int) -> TruncSeries2:
    """f(x + y) for ``f = sum f_coeffs[n] z**n``.

    With EGF coefficients ``f_coeffs[n] = alpha_n / n!`` this gives
    ``c[i][j] = alpha_{i+j} / (i! j!)``.
    """
    if len(f_coeffs) < order:
        raise SeriesError(f"need {order} coefficients, got {len(f_coeffs)}")
    rows = []
    for i in range(order):
        row = []
        for j in range(order - i):
            # [x^i y^j] (x+y)^(i+j) = C(i+j, i)
            row.append(Fraction(f_coeffs[i + j]) * math.comb(i + j, i))
        rows.append(row)
    return TruncSeries2(order, rows)
