"""Pseudo-factorials modulo an integer: residue tables, eventual periods and
modular reductions of the J-fraction convergents."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from .algebra import Poly
from .cf_engine import convergents, pseudofactorial_jfraction
from .pseudofact import pascal_rows
from .series import TruncSeries, Zmod, series_reciprocal

__all__ = [
    "ModSeq",
    "alpha_mod",
    "canonical_modulus",
    "check_modular_recurrence",
    "detect_period",
    "figure3_csv",
    "figure3_table",
    "figure3_text",
    "mismatched_cells",
    "modular_convergent",
    "ModularConvergent",
    "REFERENCE_RESIDUES",
    "series_of_convergent",
]


@dataclass(frozen=True)
class ModSeq:
    modulus: int
    values: tuple[int, ...]
    preperiod: int | None = None
    period: int | None = None

    def to_json(self) -> dict:
        return {
            "modulus": str(self.modulus),
            "values": [str(v) for v in self.values],
            "preperiod": None if self.preperiod is None else str(self.preperiod),
            "period": None if self.period is None else str(self.period),
            "status": "observed" if self.period is not None else "undetected",
        }


def alpha_mod(M: int, N: int) -> ModSeq:
    """alpha_0 .. alpha_{N-1} reduced mod M, computed entirely mod M."""
    if M < 2:
        raise ValueError("modulus must be >= 2")
    if N < 1:
        raise ValueError("N must be >= 1")
    binom = [[b % M for b in row] for row in pascal_rows(max(N - 1, 1))]
    a = [1 % M]
    for n in range(N - 1):
        row = binom[n]
        s = sum(row[k] * a[k] * a[n - k] for k in range(n + 1)) % M
        a.append(s if (n + 1) % 2 == 0 else (-s) % M)
    return ModSeq(M, tuple(a))


def detect_period(s: ModSeq, horizon: int | None = None) -> ModSeq:
    """Smallest period (and, for it, smallest preperiod) seen within ``horizon``.

    A candidate period p with preperiod s is accepted only when the repeating
    tail covers at least two full periods and at least half of the horizon;
    otherwise the period is reported as undetected.  Results describe the
    finite horizon only.
    """
    H = len(s.values) if horizon is None else horizon
    if H > len(s.values):
        raise ValueError(f"horizon {H} exceeds the {len(s.values)} available values")
    v = s.values[:H]
    for p in range(1, H // 2 + 1):
        # smallest start such that v[n + p] == v[n] for all n >= start
        start = H - p
        while start > 0 and v[start - 1 + p] == v[start - 1]:
            start -= 1
        if H - start >= 2 * p and start <= H // 2:
            return ModSeq(s.modulus, s.values, start, p)
    return ModSeq(s.modulus, s.values, None, None)


def canonical_modulus(m: int) -> int:
    """|a_1 ... a_m| = 3^ceil(m/2) (m!)^2.

    The product itself has sign (-1)^m, which does not matter for congruences.
    """
    return 3 ** ((m + 1) // 2) * math.factorial(m) ** 2


@dataclass(frozen=True)
class ModularConvergent:
    m: int
    modulus: int
    P: Poly
    Q: Poly
    canonical_modulus: int


def modular_convergent(m: int, M: int | None = None) -> ModularConvergent:
    """P_m and Q_m with coefficients reduced mod M (default: the canonical
    modulus of stage m)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    canon = canonical_modulus(m)
    M = canon if M is None else M
    pair = convergents(pseudofactorial_jfraction(m), m)
    return ModularConvergent(m, M, pair.P.mod(M), pair.Q.mod(M), canon)


def series_of_convergent(mc: ModularConvergent, N: int) -> list[int]:
    """First N coefficients of P_m/Q_m expanded over Z/M."""
    ring = Zmod(mc.modulus)
    P = TruncSeries([int(c) for c in mc.P.coeffs], ring, N)
    Q = TruncSeries([int(c) for c in mc.Q.coeffs], ring, N)
    return [x.value for x in (P * series_reciprocal(Q)).coeffs]


def check_modular_recurrence(m: int, M: int | None = None, N: int = 60) -> bool:
    """Does alpha_n mod M satisfy the recurrence with characteristic
    polynomial Q_m (reduced mod M) for m <= n < N?

    Below n = m the numerator P_m (degree m - 1) still contributes.
    """
    mc = modular_convergent(m, M)
    M = mc.modulus
    vals = alpha_mod(M, N).values
    q = [int(c) for c in mc.Q.coeffs]
    for n in range(m, N):
        if sum(q[i] * vals[n - i] for i in range(min(len(q), n + 1))) % M:
            return False
    return True


def figure3_table(M_max: int = 20, N_max: int = 26) -> list[list[int]]:
    """Rows [alpha_n mod M for n < N_max] for M = 2 .. M_max."""
    return [list(alpha_mod(M, N_max).values) for M in range(2, M_max + 1)]


def figure3_text(M_max: int = 20, N_max: int = 26) -> str:
    rows = figure3_table(M_max, N_max)
    header = ["M"] + [str(n) for n in range(N_max)]
    body = [[str(M)] + [str(x) for x in row] for M, row in zip(range(2, M_max + 1), rows)]
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
    lines = [" ".join(c.rjust(w) for c, w in zip(r, widths)) for r in [header] + body]
    return "\n".join(lines)


def figure3_csv(M_max: int = 20, N_max: int = 26) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(["M"] + [f"n={n}" for n in range(N_max)])
    for M, row in zip(range(2, M_max + 1), figure3_table(M_max, N_max)):
        w.writerow([M] + row)
    return buf.getvalue()


# Reference residues alpha_n mod M for n = 0..25, kept for diffing the table.
REFERENCE_RESIDUES = {
    2: (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    3: (1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2),
    4: (1, 3, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    5: (1, 4, 3, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    6: (1, 5, 4, 2, 4, 2, 4, 2, 4, 2, 4, 2, 4, 2, 4, 2, 4, 2, 4, 2, 4, 2, 4, 2, 4, 2),
    7: (1, 6, 5, 2, 2, 2, 2, 4, 1, 6, 6, 6, 6, 5, 3, 4, 4, 4, 4, 1, 2, 5, 5, 5, 5, 3),
    8: (1, 7, 6, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    9: (1, 8, 7, 2, 7, 5, 4, 5, 1, 8, 1, 2, 7, 2, 4, 5, 4, 8, 1, 8, 7, 2, 7, 5, 4, 5),
    10: (1, 9, 8, 2, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    11: (1, 10, 9, 2, 5, 4, 10, 6, 5, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    12: (1, 11, 10, 2, 4, 8, 4, 8, 4, 8, 4, 8, 4, 8, 4, 8, 4, 8, 4, 8, 4, 8, 4, 8, 4, 8),
    13: (1, 12, 11, 2, 3, 12, 5, 0, 5, 1, 4, 2, 1, 11, 9, 4, 6, 11, 10, 0, 10, 2, 8, 4, 2, 9),
    14: (1, 13, 12, 2, 2, 2, 2, 4, 8, 6, 6, 6, 6, 12, 10, 4, 4, 4, 4, 8, 2, 12, 12, 12, 12, 10),
    15: (1, 14, 13, 2, 1, 5, 10, 5, 10, 5, 10, 5, 10, 5, 10, 5, 10, 5, 10, 5, 10, 5, 10, 5, 10, 5),
    16: (1, 15, 14, 2, 0, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    17: (1, 16, 15, 2, 16, 11, 3, 3, 5, 16, 7, 12, 10, 7, 1, 10, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    18: (1, 17, 16, 2, 16, 14, 4, 14, 10, 8, 10, 2, 16, 2, 4, 14, 4, 8, 10, 8, 16, 2, 16, 14, 4, 14),
    19: (1, 18, 17, 2, 16, 17, 3, 14, 0, 17, 6, 9, 8, 3, 18, 0, 15, 8, 7, 11, 3, 16, 14, 3, 5, 17),
    20: (1, 19, 18, 2, 16, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
}


def mismatched_cells(M_max: int = 20, N_max: int = 26) -> list[tuple[int, int, int, int]]:
    """(M, n, computed, reference) for every cell that disagrees with
    REFERENCE_RESIDUES inside the reference range."""
    bad = []
    for M, row in zip(range(2, M_max + 1), figure3_table(M_max, N_max)):
        ref = REFERENCE_RESIDUES.get(M)
        if ref is None:
            continue
        bad.extend((M, n, x, ref[n]) for n, x in enumerate(row[: len(ref)]) if x != ref[n])
    return bad
