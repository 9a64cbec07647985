"""Pseudo-factorials and the identities satisfied by their EGF.

The pseudo-factorials are the integers defined by

    alpha_0 = 1,   alpha_{n+1} = (-1)**(n+1) * sum_k C(n, k) alpha_k alpha_{n-k}

and ``f(z) = sum alpha_n z**n / n!`` is their exponential generating function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .series import TruncSeries, TruncSeries2, substitute_sum

__all__ = [
    "IdentityCheck",
    "IdentityReport",
    "alpha_seq",
    "check_identities",
    "egf_f",
    "g_series",
    "h_series",
    "pascal_rows",
    "sigma_series",
    "sm_cm_series",
    "verify_addition_formula",
]


def pascal_rows(n: int) -> list[list[int]]:
    """Rows 0..n-1 of Pascal's triangle."""
    rows = [[1]]
    for _ in range(1, n):
        prev = rows[-1]
        rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, len(prev))] + [1])
    return rows[:n]


@lru_cache(maxsize=None)
def _alpha_prefix(count: int) -> tuple[int, ...]:
    binom = pascal_rows(max(count - 1, 1))
    alpha = [1]
    for n in range(count - 1):
        row = binom[n]
        s = sum(row[k] * alpha[k] * alpha[n - k] for k in range(n + 1))
        alpha.append(s if (n + 1) % 2 == 0 else -s)
    return tuple(alpha)


def alpha_seq(count: int) -> list[int]:
    """The first ``count`` pseudo-factorials alpha_0 .. alpha_{count-1}.

    >>> alpha_seq(8)
    [1, -1, -2, 2, 16, -40, -320, 1040]
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    return list(_alpha_prefix(count))


def egf_f(order: int, alphas: Sequence[int] | None = None) -> TruncSeries:
    """f(z) = sum alpha_n z^n/n! + O(z^order)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if alphas is None:
        alphas = alpha_seq(order)
    return TruncSeries.from_egf(alphas, order)


def sigma_series(order: int) -> TruncSeries:
    """sigma(z) = 1 - f(z) f(-z)."""
    f = egf_f(order)
    return 1 - f * f.reflect()


def h_series(order: int) -> TruncSeries:
    """h(z) = f(z) + f'(z)."""
    f = egf_f(order + 1)
    return (f + f.derivative()).truncate(order)


def g_series(order: int) -> TruncSeries:
    """g(z) = -f(z) f(-z), a Weierstrass-type function."""
    f = egf_f(order)
    return -(f * f.reflect())


def sm_cm_series(order: int) -> tuple[TruncSeries, TruncSeries]:
    """Dixonian sm, cm solved term by term from sm' = cm^2, cm' = -sm^2."""
    if order < 1:
        raise ValueError("order must be >= 1")
    sm = [Fraction(0)]
    cm = [Fraction(1)]
    for n in range(order - 1):
        cm2 = sum(cm[k] * cm[n - k] for k in range(n + 1))
        sm2 = sum(sm[k] * sm[n - k] for k in range(n + 1))
        sm.append(cm2 / (n + 1))
        cm.append(-sm2 / (n + 1))
    return TruncSeries(sm), TruncSeries(cm)


@dataclass
class IdentityCheck:
    name: str
    order: int
    passed: bool
    first_failure: int | None = None


@dataclass
class IdentityReport:
    order: int
    checks: list[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "order": str(self.order),
            "passed": self.passed,
            "checks": [
                {
                    "identity": c.name,
                    "order": str(c.order),
                    "passed": c.passed,
                    "first_failure": None if c.first_failure is None else str(c.first_failure),
                }
                for c in self.checks
            ],
        }


def _vanishes(name: str, s: TruncSeries) -> IdentityCheck:
    bad = next((i for i, c in enumerate(s.coeffs) if c != 0), None)
    return IdentityCheck(name, s.order, bad is None, bad)


def check_identities(order: int, alphas: Sequence[int] | None = None) -> IdentityReport:
    """Check the functional identities of f coefficientwise up to ``order``.

    Failures are reported, not raised.  ``alphas`` lets callers substitute a
    (possibly corrupted) sequence.
    """
    if order < 4:
        raise ValueError("order must be >= 4")
    f1 = egf_f(order + 1, None if alphas is None else list(alphas)[: order + 1])
    f = f1.truncate(order)
    fm = f.reflect()
    report = IdentityReport(order)
    report.checks.append(_vanishes("f'(z) + f(-z)^2 = 0", f1.derivative() + fm * fm))
    report.checks.append(_vanishes("f(z)^3 + f(-z)^3 = 2", f ** 3 + fm ** 3 - 2))
    g1 = -(f1 * f1.reflect())
    g = g1.truncate(order)
    dg = g1.derivative()
    report.checks.append(_vanishes("g'(z)^2 = 4 g(z)^3 + 4", dg * dg - 4 * g ** 3 - 4))
    sm, cm = sm_cm_series(order)
    report.checks.append(_vanishes("sm(z)^3 + cm(z)^3 = 1", sm ** 3 + cm ** 3 - 1))
    return report


def verify_addition_formula(order: int, alphas: Sequence[int] | None = None) -> bool:
    """Check the addition formula for f to total degree ``order``.

    The identity

        f(x+y) = (f(x) f(y) - h(x) h(y)/3) / (1 - sigma(x) sigma(y)/3)

    is checked in cross-multiplied form, so no bivariate division occurs.
    """
    if order < 4:
        raise ValueError("order must be >= 4")
    if alphas is None:
        alphas = alpha_seq(order + 1)
    f1 = egf_f(order + 1, list(alphas)[: order + 1])
    f = f1.truncate(order)
    h = (f1 + f1.derivative()).truncate(order)
    sigma = 1 - f * f.reflect()
    lhs = substitute_sum(f.coeffs, order)
    third = Fraction(1, 3)
    num = TruncSeries2.outer(f, f) - TruncSeries2.outer(h, h) * third
    den = 1 - TruncSeries2.outer(sigma, sigma) * third
    return (lhs * den - num).is_zero()
