"""Exact scalar and polynomial arithmetic.

Integers are Python ints and rationals are :class:`fractions.Fraction`; both
are arbitrary precision and always canonical (a ``Fraction`` is reduced with a
positive denominator), so equality is structural.  On top of those this
module provides dense univariate polynomials over the rationals, integers
modulo ``M`` and a fraction-free determinant.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

__all__ = [
    "AlgebraError",
    "DimensionError",
    "NEG_INF",
    "ModInt",
    "Poly",
    "bareiss_det",
    "det_rational",
    "format_rational",
    "parse_rational",
    "poly_eval",
    "rational_add",
    "rational_div",
    "rational_mul",
]

Scalar = Union[int, Fraction]


class AlgebraError(ArithmeticError):
    """Raised for invalid exact-arithmetic requests (e.g. division by zero)."""


class DimensionError(AlgebraError, ValueError):
    pass


# Degree of the zero polynomial.
NEG_INF = float("-inf")


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def rational_add(a: Scalar, b: Scalar) -> Fraction:
    return _q(a) + _q(b)


def rational_mul(a: Scalar, b: Scalar) -> Fraction:
    return _q(a) * _q(b)


def rational_div(a: Scalar, b: Scalar) -> Fraction:
    b = _q(b)
    if b == 0:
        raise AlgebraError("division by zero")
    return _q(a) / b


def format_rational(x: Scalar) -> str:
    """Decimal ``num/den`` string, or ``num`` when the denominator is 1."""
    return str(_q(x))


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


# ---------------------------------------------------------------- polynomials


class Poly:
    """Dense univariate polynomial with exact rational coefficients.

    ``Poly([1, 0, 2])`` is ``1 + 2*z**2``.  Trailing zeros are stripped, so the
    zero polynomial has an empty coefficient tuple and degree ``NEG_INF``.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # scalar division only; polynomial division is not needed here
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise AlgebraError("division by zero")
            return Poly(c / other for c in self.coeffs)
        return NotImplemented

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise AlgebraError("negative power of a polynomial")
        out, base = Poly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        return poly_eval(self, x)

    def reflect(self) -> "Poly":
        """p(-z)."""
        return Poly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def reciprocal(self, k: int | None = None) -> "Poly":
        """z**k * p(1/z), with ``k`` defaulting to the degree."""
        if k is None:
            k = len(self.coeffs) - 1
        if len(self.coeffs) - 1 > k:
            raise AlgebraError("degree exceeds reversal length")
        cs = list(self.coeffs) + [Fraction(0)] * (k + 1 - len(self.coeffs))
        return Poly(reversed(cs))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def mod(self, m: int) -> "Poly":
        """Reduce integer coefficients into ``[0, m)``."""
        if not self.is_integral():
            raise AlgebraError("modular reduction of a non-integral polynomial")
        return Poly(int(c) % m for c in self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[format_rational(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.to_str()

    def to_str(self, var: str = "z") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(format_rational(c))
                continue
            mono = var if i == 1 else f"{var}^{i}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{format_rational(c)}*{mono}")
        s = " + ".join(terms)
        return s.replace("+ -", "- ")


def poly_eval(p: Poly, x):
    """Horner evaluation; exact for rational ``x``, works for floats too."""
    exact = isinstance(x, (int, Fraction))
    acc = Fraction(0) if exact else 0.0 * x
    for c in reversed(p.coeffs):
        acc = acc * x + (c if exact else float(c))
    return acc


# ------------------------------------------------------------ modular integers


class ModInt:
    """Residue class modulo ``modulus`` (``modulus >= 2``)."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        if modulus < 2:
            raise AlgebraError(f"modulus must be >= 2, got {modulus}")
        object.__setattr__(self, "modulus", int(modulus))
        object.__setattr__(self, "value", int(value) % modulus)

    def __setattr__(self, name, value):
        raise AttributeError("ModInt is immutable")

    def _other(self, other) -> int:
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise AlgebraError("modulus mismatch")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction) and other.denominator == 1:
            return int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModInt(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModInt(self.value - o, self.modulus)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModInt(o - self.value, self.modulus)

    def __neg__(self):
        return ModInt(-self.value, self.modulus)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModInt(self.value * o, self.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "ModInt":
        if math.gcd(self.value, self.modulus) != 1:
            raise AlgebraError(f"{self.value} is not invertible modulo {self.modulus}")
        return ModInt(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * ModInt(o, self.modulus).inverse()

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"ModInt({self.value}, {self.modulus})"

    def __str__(self):
        return str(self.value)


# ----------------------------------------------------------------- determinants


def _check_square(m: Sequence[Sequence]) -> int:
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise DimensionError("determinant needs a non-empty square matrix")
    return n


def bareiss_det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by Bareiss elimination.

    Every intermediate value is an integer (each division is exact).
    """
    n = _check_square(m)
    a = [[int(x) for x in row] for row in m]
    for row, orig in zip(a, m):
        if any(x != y for x, y in zip(row, orig)):
            raise AlgebraError("bareiss_det expects integer entries")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_rational(m: Sequence[Sequence[Scalar]]) -> Fraction:
    """Determinant of a rational matrix: clear denominators row by row, then
    run :func:`bareiss_det` and divide the scale back out."""
    _check_square(m)
    scale = 1
    rows = []
    for row in m:
        qs = [_q(x) for x in row]
        lcm = math.lcm(*(x.denominator for x in qs))
        scale *= lcm
        rows.append([int(x * lcm) for x in qs])
    return Fraction(bareiss_det(rows), scale)
