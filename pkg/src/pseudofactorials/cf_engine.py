"""Jacobi continued fractions: Stieltjes-Rogers decomposition, moment
peeling, convergents and Hankel determinants.

Throughout, a J-fraction is written

    1 / (1 - c_0 z - a_1 z^2 / (1 - c_1 z - a_2 z^2 / (1 - ...)))

with the ``c`` list 0-based and the ``a`` list 1-based (``a[0]`` holds a_1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Poly, bareiss_det, det_rational
from .pseudofact import alpha_seq, egf_f
from .series import SeriesError, TruncSeries, series_reciprocal

__all__ = [
    "ConvergentPair",
    "DecompositionTerminated",
    "DegenerateHankelError",
    "JFraction",
    "SRDecomposition",
    "closed_form_cf_coeffs",
    "convergents",
    "hankel",
    "hankel_closed_form",
    "hankel_matrix",
    "hankel_product",
    "jfraction_from_ogf",
    "jfraction_from_sr",
    "pseudofactorial_jfraction",
    "secant_egf",
    "sr_decompose",
]


class DecompositionTerminated(SeriesError):
    """The Stieltjes-Rogers recursion met a zero weight omega at ``level``."""

    def __init__(self, level: int, partial: "SRDecomposition"):
        super().__init__(f"decomposition terminates at level {level}: omega_{level} = 0")
        self.level = level
        self.partial = partial


class DegenerateHankelError(SeriesError):
    """Peeling met ``a_j = 0``; ``partial`` holds the coefficients found so far."""

    def __init__(self, j: int, partial: "JFraction"):
        super().__init__(f"J-fraction terminates: a_{j} = 0 (degenerate Hankel determinant)")
        self.j = j
        self.partial = partial


@dataclass(frozen=True)
class SRDecomposition:
    """Data of phi(x+y) = sum_l omega_l phi_l(x) phi_l(y).

    ``omegas[l]`` is omega_l with ``omegas[0] == 1``; ``phis[l]`` is phi_l,
    normalised to z^l/l! + O(z^(l+1)).
    """

    omegas: tuple[Fraction, ...]
    phis: tuple[TruncSeries, ...]

    @property
    def depth(self) -> int:
        return len(self.omegas) - 1


@dataclass(frozen=True)
class JFraction:
    c: tuple[Fraction, ...]
    a: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(Fraction(x) for x in self.c))
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))

    @property
    def depth(self) -> int:
        return len(self.a)

    def truncate(self, depth: int) -> "JFraction":
        return JFraction(self.c[:depth], self.a[:depth])

    def to_json(self) -> dict:
        return {
            "c_base": "0",
            "a_base": "1",
            "c": [str(x) for x in self.c],
            "a": [str(x) for x in self.a],
        }


@dataclass(frozen=True)
class ConvergentPair:
    P: Poly
    Q: Poly
    k: int


def secant_egf(order: int) -> TruncSeries:
    """sec(z) = 1/cos(z) to ``order``."""
    cos = []
    for n in range(order):
        cos.append(Fraction(0) if n % 2 else Fraction((-1) ** (n // 2), math.factorial(n)))
    return series_reciprocal(TruncSeries(cos))


def _egf_coeff(s: TruncSeries, k: int) -> Fraction:
    # k! [z^k] s
    return s[k] * math.factorial(k)


def sr_decompose(phi: TruncSeries, depth: int, order: int | None = None) -> SRDecomposition:
    """Stieltjes-Rogers addition decomposition of the EGF ``phi``.

    Differentiating the addition formula ``l`` times in y and setting y=0 gives

        phi^(l)(x) - sum_{j<l} omega_j phi_j(x) phi_j^(l)(0) = omega_l phi_l(x),

    and omega_l is read off the x^l coefficient.  Everything is truncated, so
    the data are only determined to the order of ``phi``; ``order`` (default:
    all of ``phi``) must exceed ``2 * depth``.
    """
    if order is None:
        order = phi.order
    if order > phi.order:
        raise SeriesError(f"phi is only known to order {phi.order}")
    if order <= 2 * depth:
        raise SeriesError(f"order {order} is too small for depth {depth} (need > {2 * depth})")
    phi = phi.truncate(order)
    if phi[0] != 1:
        raise SeriesError("phi must have constant term 1")
    omegas = [Fraction(1)]
    phis = [phi]
    deriv = phi
    for level in range(1, depth + 1):
        deriv = deriv.derivative()
        rest = deriv
        for j in range(level):
            w = _egf_coeff(phis[j], level) if level < phis[j].order else Fraction(0)
            if w:
                rest = rest - phis[j] * (omegas[j] * w)
        if any(c != 0 for c in rest.coeffs[:level]):
            raise SeriesError(f"no addition formula of Stieltjes-Rogers type (level {level})")
        omega = _egf_coeff(rest, level)
        if omega == 0:
            raise DecompositionTerminated(level, SRDecomposition(tuple(omegas), tuple(phis)))
        omegas.append(omega)
        phis.append(rest / omega)
    return SRDecomposition(tuple(omegas), tuple(phis))


def jfraction_from_sr(d: SRDecomposition) -> JFraction:
    """a_j = omega_j / omega_{j-1};  c_j = phi_{j,j+1} - phi_{j-1,j}
    with phi_{j,k} = k! [z^k] phi_j."""
    if d.depth < 1:
        raise SeriesError("decomposition depth must be >= 1")
    a = [d.omegas[j] / d.omegas[j - 1] for j in range(1, d.depth + 1)]
    c = []
    for j in range(d.depth):
        cur = _egf_coeff(d.phis[j], j + 1)
        prev = _egf_coeff(d.phis[j - 1], j) if j >= 1 else Fraction(0)
        c.append(cur - prev)
    return JFraction(tuple(c), tuple(a))


def jfraction_from_ogf(moments: Sequence, depth: int) -> JFraction:
    """J-fraction of ``sum moments[n] z**n`` by repeated peeling.

    With G_0 the OGF: c_k = [z] G_k and a_{k+1} z^2 G_{k+1} = 1 - c_k z - 1/G_k.
    Returns c_0..c_{depth-1} and a_1..a_depth; needs 2*depth+1 moments.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if len(moments) < 2 * depth + 1:
        raise SeriesError(f"need {2 * depth + 1} moments for depth {depth}, got {len(moments)}")
    G = TruncSeries([Fraction(m) for m in moments[: 2 * depth + 1]])
    if G[0] != 1:
        raise SeriesError("moments[0] must be 1")
    c: list[Fraction] = []
    a: list[Fraction] = []
    for k in range(depth):
        ck = G[1]
        c.append(ck)
        R = 1 - TruncSeries([0, ck], order=G.order) - series_reciprocal(G)
        ak = R[2]
        if ak == 0:
            raise DegenerateHankelError(k + 1, JFraction(tuple(c), tuple(a)))
        a.append(ak)
        if k + 1 < depth:
            G = R.shift_down(2) / ak
    return JFraction(tuple(c), tuple(a))


def closed_form_cf_coeffs(j: int) -> tuple[int, int | None]:
    """(c_j, a_j) of the pseudo-factorial J-fraction; a_0 is undefined (None).

    c_j = (-1)^(j-1) (j + (1 + (-1)^j)/2),  a_j = -j^2 (2 - (-1)^j).
    """
    if j < 0:
        raise ValueError("index must be >= 0")
    sign = 1 if j % 2 == 0 else -1
    c = -sign * (j + (1 + sign) // 2)
    a = -j * j * (2 - sign) if j >= 1 else None
    return c, a


def pseudofactorial_jfraction(depth: int) -> JFraction:
    """Closed-form coefficients c_0..c_{depth-1}, a_1..a_depth."""
    return JFraction(
        tuple(closed_form_cf_coeffs(j)[0] for j in range(depth)),
        tuple(closed_form_cf_coeffs(j)[1] for j in range(1, depth + 1)),
    )


def convergents(jf: JFraction, k: int) -> ConvergentPair:
    """P_k/Q_k via Q_k = (1 - c_{k-1} z) Q_{k-1} - a_{k-1} z^2 Q_{k-2},
    with Q_0 = 1, Q_{-1} = 0 and P_0 = 0, P_1 = 1."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if len(jf.c) < k or len(jf.a) < max(k - 1, 0):
        raise SeriesError(f"convergent {k} needs c_0..c_{k - 1} and a_1..a_{k - 1}")
    if k == 0:
        return ConvergentPair(Poly(), Poly.const(1), 0)
    z2 = Poly.monomial(2)
    Q_prev, Q = Poly(), Poly.const(1)
    P_prev, P = Poly.const(1), Poly()  # P_{-1} chosen so that P_1 = 1
    for i in range(1, k + 1):
        lin = Poly([1, -jf.c[i - 1]])
        a_prev = jf.a[i - 2] if i >= 2 else Fraction(0)
        Q, Q_prev = lin * Q - z2 * Q_prev * a_prev, Q
        if i == 1:
            P, P_prev = Poly.const(1), P
        else:
            P, P_prev = lin * P - z2 * P_prev * a_prev, P
    return ConvergentPair(P, Q, k)


def hankel_matrix(moments: Sequence, m: int) -> list[list]:
    if len(moments) < 2 * m - 1:
        raise SeriesError(f"need {2 * m - 1} moments for a {m}x{m} Hankel matrix")
    return [[moments[i + j] for j in range(m)] for i in range(m)]


def hankel(moments: Sequence, m: int):
    """Determinant of the m x m Hankel matrix h_{ij} = moments[i+j]."""
    if m < 1:
        raise ValueError("m must be >= 1")
    mat = hankel_matrix(moments, m)
    if all(isinstance(x, int) for row in mat for x in row):
        return bareiss_det(mat)
    return det_rational(mat)


def hankel_product(jf: JFraction, m: int) -> Fraction:
    """prod_{j=1}^{m-1} a_j^(m-j)."""
    out = Fraction(1)
    for j in range(1, m):
        out *= jf.a[j - 1] ** (m - j)
    return out


def hankel_closed_form(m: int) -> int:
    """Closed-form Hankel determinant of the pseudo-factorials."""
    if m < 1:
        raise ValueError("m must be >= 1")
    sf = 1
    for k in range(1, m):
        sf *= math.factorial(k)
    if m % 2 == 0:
        return (-1) ** (m // 2) * 3 ** (m * m // 4) * sf * sf
    return (-1) ** ((m - 1) // 2) * 3 ** ((m * m - 1) // 4) * sf * sf


def _pf_sr_jfraction(depth: int, order: int) -> JFraction:
    return jfraction_from_sr(sr_decompose(egf_f(order), depth, order))


def _pf_ogf_jfraction(depth: int) -> JFraction:
    return jfraction_from_ogf(alpha_seq(2 * depth + 1), depth)
