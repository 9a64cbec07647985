"""Orthogonal polynomials of the pseudo-factorial J-fraction and their
exponential generating function.

The reciprocal denominators q_k(z) = z^k Q_k(1/z) satisfy

    q_k = (z - c_{k-1}) q_{k-1} - a_{k-1} q_{k-2},   q_{-1} = 0, q_0 = 1

and are formally orthogonal for the moment functional <z^n> = alpha_n.  Their
EGF Upsilon(z, t) = sum q_k(z) t^k/k! has the closed form

    eta(t) cosh(z J(t)) + chi(t) sinh(z J(t))

which :func:`verify_theorem5` checks coefficient by coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import Poly
from .cf_engine import closed_form_cf_coeffs
from .pseudofact import alpha_seq
from .series import (
    QQz,
    SeriesError,
    TruncSeries,
    series_compose_transcendental,
    series_reciprocal,
    series_sqrt,
)

__all__ = [
    "MomentFunctional",
    "Theorem5Bundle",
    "Theorem5Report",
    "bigJ_series",
    "chi_series",
    "curve_param_check",
    "curve_point",
    "eta_equation",
    "eta_series",
    "inner_product",
    "q_family",
    "quartic_series",
    "theorem5_bundle",
    "upsilon_series",
    "verify_theorem5",
]


def q_family(K: int) -> list[Poly]:
    """q_0 .. q_K from the three-term recurrence with closed-form c_j, a_j."""
    if K < 0:
        raise ValueError("K must be >= 0")
    z = Poly.monomial(1)
    qs = [Poly.const(1)]
    prev = Poly()
    for k in range(1, K + 1):
        c, _ = closed_form_cf_coeffs(k - 1)
        a = closed_form_cf_coeffs(k - 1)[1] if k >= 2 else 0
        nxt = (z - c) * qs[-1] - prev * a
        prev = qs[-1]
        qs.append(nxt)
    return qs


@dataclass(frozen=True)
class MomentFunctional:
    """Linear form with <z^n> = moments[n]."""

    moments: tuple

    @classmethod
    def pseudofactorial(cls, count: int) -> "MomentFunctional":
        return cls(tuple(alpha_seq(count)))

    def __call__(self, p: Poly) -> Fraction:
        if len(p) > len(self.moments):
            raise SeriesError(f"need moments up to degree {len(p) - 1}, have {len(self.moments)}")
        return sum((c * self.moments[i] for i, c in enumerate(p.coeffs)), Fraction(0))


def inner_product(p: Poly, q: Poly, mf: MomentFunctional) -> Fraction:
    """<p, q> = <p q>."""
    if p.is_zero() or q.is_zero():
        return Fraction(0)
    need = p.degree + q.degree + 1
    if need > len(mf.moments):
        raise SeriesError(f"inner product needs {need} moments, have {len(mf.moments)}")
    return mf(p * q)


# ------------------------------------------------------------------- the curve


def eta_equation(t, eta):
    """Left side of 2 + 3t + 3t(1+t) eta - 2(1 - 3t^2 + 3t^4) eta^3."""
    return 2 + 3 * t + 3 * t * (1 + t) * eta - 2 * (1 - 3 * t ** 2 + 3 * t ** 4) * eta ** 3


def quartic_series(order: int) -> TruncSeries:
    """1 - 3t^2 + 3t^4."""
    return TruncSeries([1, 0, -3, 0, 3], order=order)


def eta_series(order: int) -> TruncSeries:
    """Branch eta(t) = 1 + t + ... of the cubic curve.

    At t^n the unknown coefficient e_n enters only through -2 * 3 e_n (from
    eta^3), so each coefficient is one linear solve.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    e = [Fraction(1)]
    quartic = [Fraction(1), Fraction(0), Fraction(-3), Fraction(0), Fraction(3)]
    sq = [Fraction(1)]  # eta^2, kept consistent with e
    cube = [Fraction(1)]  # eta^3
    for n in range(1, order):
        # eta^2 and eta^3 at index n with e_n provisionally 0
        sq_n = sum(e[k] * e[n - k] for k in range(1, n))
        cube_n = sum(sq[k] * e[n - k] for k in range(1, n)) + sq_n * e[0]
        # [t^n] of 2 + 3t + 3t(1+t) eta
        lin = (3 if n == 1 else 0) + 3 * e[n - 1] + (3 * e[n - 2] if n >= 2 else 0)
        # [t^n] of -2 quartic eta^3 without the quartic[0]*3 e_n part
        cub = cube_n + sum(quartic[k] * cube[n - k] for k in range(1, min(n, 4) + 1))
        en = (lin - 2 * cub) / 6
        e.append(en)
        sq.append(sq_n + 2 * e[0] * en)
        cube.append(cube_n + 3 * en)
    return TruncSeries(e)


def curve_point(w: Fraction) -> tuple[Fraction, Fraction]:
    """(t, eta) on the curve at parameter ``w``."""
    w = Fraction(w)
    den_t = w * w + 1
    den_e = w ** 4 + 3
    if den_t == 0 or den_e == 0:
        raise ZeroDivisionError("pole of the parametrisation")
    t = Fraction(1, 3) * (w * w + 3) * w / den_t
    eta = 3 * (w + 1) * (w * w + 1) / den_e
    return t, eta


def curve_param_check(w_samples: Sequence, notices: list | None = None) -> bool:
    """Exact substitution of the rational parametrisation into the curve.

    Samples at a pole are skipped and, when ``notices`` is given, recorded there.
    """
    ok = True
    for w in w_samples:
        try:
            t, eta = curve_point(Fraction(w))
        except ZeroDivisionError:
            if notices is not None:
                notices.append(f"w={w}: pole of the parametrisation, skipped")
            continue
        ok &= eta_equation(t, eta) == 0
    return bool(ok)


def chi_series(order: int) -> TruncSeries:
    """sqrt(eta^2 - 2t(1+t)/(1 - 3t^2 + 3t^4))."""
    eta = eta_series(order)
    num = TruncSeries([0, 2, 2], order=order)
    inner = eta * eta - num * series_reciprocal(quartic_series(order))
    return series_sqrt(inner)


def bigJ_series(order: int) -> TruncSeries:
    """J(t) = integral_0^t du / sqrt(1 - 3u^2 + 3u^4)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    integrand = series_reciprocal(series_sqrt(quartic_series(order - 1))) if order > 1 else TruncSeries()
    return integrand.antiderivative()


@dataclass(frozen=True)
class Theorem5Bundle:
    eta: TruncSeries
    chi: TruncSeries
    bigJ: TruncSeries
    upsilon: TruncSeries


def upsilon_series(order: int) -> TruncSeries:
    """eta cosh(zJ) + chi sinh(zJ) as a series in t over QQ[z]."""
    return theorem5_bundle(order).upsilon


def theorem5_bundle(order: int) -> Theorem5Bundle:
    if order < 2:
        raise ValueError("order must be >= 2")
    eta = eta_series(order)
    chi = chi_series(order)
    J = bigJ_series(order)
    z = Poly.monomial(1)
    zJ = TruncSeries([z * c for c in J.coeffs], QQz)
    ch = series_compose_transcendental("cosh", zJ)
    sh = series_compose_transcendental("sinh", zJ)
    lift = lambda s: TruncSeries([Poly.const(c) for c in s.coeffs], QQz)  # noqa: E731
    ups = lift(eta) * ch + lift(chi) * sh
    return Theorem5Bundle(eta, chi, J, ups)


# Polynomials often quoted as the t^2 and t^3 initial conditions of Upsilon.
# They are q_3 and q_4, shifted by one index.
_DISPLAYED_INITIAL = {2: Poly([10, 6, 3, 1]), 3: Poly([24, -8, 24, 0, 1])}


@dataclass
class Theorem5Report:
    K: int
    order: int
    rows: list = field(default_factory=list)  # (k, q_k, k![t^k]Upsilon, equal)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r[3] for r in self.rows)

    def to_json(self) -> dict:
        return {
            "K": str(self.K),
            "order": str(self.order),
            "passed": self.passed,
            "rows": [
                {"k": str(k), "q_k": str(q), "upsilon_k": str(u), "equal": eq}
                for k, q, u, eq in self.rows
            ],
            "notes": self.notes,
        }


def verify_theorem5(K: int, order: int) -> Theorem5Report:
    """Compare k! [t^k] Upsilon against q_k for k = 0..K."""
    if order <= K:
        raise ValueError("order must exceed K")
    qs = q_family(K)
    ups = upsilon_series(order)
    report = Theorem5Report(K, order)
    for k in range(K + 1):
        got = ups[k] * math.factorial(k)
        report.rows.append((k, qs[k], got, got == qs[k]))
    for k, shown in _DISPLAYED_INITIAL.items():
        if k <= K and shown != qs[k]:
            report.notes.append(
                f"{shown}, sometimes quoted as the t^{k}/{k}! coefficient, is q_{k + 1}; "
                f"the recurrence and the closed form both give q_{k} = {qs[k]}"
            )
    return report
