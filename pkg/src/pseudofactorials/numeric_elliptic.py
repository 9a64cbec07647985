"""Floating-point checks of the elliptic-function side of the story.

Everything here works in binary64.  The exact series from
:mod:`pseudofactorials.pseudofact` are evaluated numerically and compared to
independent numerical constructions: a Runge-Kutta solution of the Dixonian
system, a Laurent/addition-theorem evaluator for the Weierstrass function
with invariants (g2, g3) = (0, -4), and a hexagonal lattice sum.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .pseudofact import alpha_seq, egf_f

__all__ = [
    "ConsistencyError",
    "DeviationReport",
    "EllipticConstants",
    "GAMMA_ONE_THIRD",
    "G2",
    "G3",
    "LatticePointError",
    "LatticeSum",
    "NearPoleError",
    "PrecisionWarning",
    "asymptotic_alpha",
    "constants",
    "dixon_sm_cm",
    "lattice_sum",
    "lattice_sum_alpha",
    "pi3_from_quadrature",
    "reduce_to_cell",
    "verify_dixon",
    "verify_pi3",
    "verify_special_values",
    "verify_weierstrass",
    "wp_add",
    "wp_eval",
    "wp_laurent",
    "wp_laurent_coeffs",
]

# Gamma(1/3) to 40 significant digits.
GAMMA_ONE_THIRD = "2.678938534707747633655692940974677644129"

G2 = 0
G3 = -4

CROSS_CHECK_TOL = 1e-11


class ConsistencyError(RuntimeError):
    pass


class NearPoleError(ArithmeticError):
    pass


class LatticePointError(ValueError):
    pass


class PrecisionWarning(RuntimeWarning):
    pass


# ------------------------------------------------------------------ constants


def pi3_from_quadrature(nodes: int = 48) -> float:
    """pi_3 = 3 * integral_0^1 (1 - y^3)^(-2/3) dy.

    With y = 1 - u^3 the endpoint singularity disappears:
    the integral becomes integral_0^1 3 (3 - 3u^3 + u^6)^(-2/3) du,
    which Gauss-Legendre handles to machine precision.
    """
    x, w = np.polynomial.legendre.leggauss(nodes)
    u = 0.5 * (x + 1.0)
    vals = 3.0 * (3.0 - 3.0 * u**3 + u**6) ** (-2.0 / 3.0)
    return 3.0 * 0.5 * math.fsum(w * vals)


@dataclass(frozen=True)
class EllipticConstants:
    pi3: float
    r: float
    rho: float
    zeta12: complex
    pi3_quadrature: float

    @property
    def six_r(self) -> float:
        return 6.0 * self.r

    @property
    def periods(self) -> tuple[complex, complex]:
        """Generators of the period lattice of wp(z; 0, -4)."""
        return (self.rho * self.zeta12, self.rho / self.zeta12)


@lru_cache(maxsize=1)
def constants() -> EllipticConstants:
    gamma = float(GAMMA_ONE_THIRD)
    pi3 = math.sqrt(3.0) / (2.0 * math.pi) * gamma**3
    quad = pi3_from_quadrature()
    if abs(pi3 - quad) > CROSS_CHECK_TOL * pi3:
        raise ConsistencyError(f"pi3 from Gamma(1/3) ({pi3!r}) and quadrature ({quad!r}) disagree")
    r = pi3 * 2.0 ** (-1.0 / 3.0) / 6.0
    rho = 2.0 * r * math.sqrt(3.0)
    return EllipticConstants(pi3, r, rho, cmath.exp(1j * math.pi / 6.0), quad)


# --------------------------------------------------------------- Dixonian sm,cm


def dixon_sm_cm(x: float, h: float = 1e-3) -> tuple[float, float]:
    """(sm(x), cm(x)) by classical RK4 on sm' = cm^2, cm' = -sm^2.

    The step is fixed at about ``h`` (local error O(h^5) ~ 1e-15).
    """
    pi3 = constants().pi3
    if abs(x) > pi3 / 2:
        raise ValueError(f"|x| must be <= pi3/2 = {pi3 / 2:.6f}")
    n = max(1, math.ceil(abs(x) / h))
    step = x / n
    s, c = 0.0, 1.0
    for _ in range(n):
        k1s, k1c = c * c, -s * s
        s2, c2 = s + 0.5 * step * k1s, c + 0.5 * step * k1c
        k2s, k2c = c2 * c2, -s2 * s2
        s3, c3 = s + 0.5 * step * k2s, c + 0.5 * step * k2c
        k3s, k3c = c3 * c3, -s3 * s3
        s4, c4 = s + step * k3s, c + step * k3c
        k4s, k4c = c4 * c4, -s4 * s4
        s += step / 6.0 * (k1s + 2 * k2s + 2 * k3s + k4s)
        c += step / 6.0 * (k1c + 2 * k2c + 2 * k3c + k4c)
        if not (abs(s) < 1e6 and abs(c) < 1e6):
            raise NearPoleError(f"integration blew up before reaching x={x} (pole nearby)")
    return s, c


@dataclass
class DeviationReport:
    name: str
    tol: float
    samples: list = field(default_factory=list)
    deviations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def max_deviation(self) -> float:
        return max(self.deviations, default=0.0)

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tol

    def to_json(self) -> dict:
        def num(z):
            return {"re": z.real, "im": z.imag} if isinstance(z, complex) else z

        return {
            "check": self.name,
            "passed": self.passed,
            "max_deviation": {"value": self.max_deviation, "tol": self.tol},
            "samples": [num(s) for s in self.samples],
            "deviations": self.deviations,
            "notes": self.notes,
        }


DIXON_GRID = [k / 10 for k in range(-4, 5)]


def verify_dixon(z_samples: Iterable[float] = DIXON_GRID, order: int = 60, tol: float = 1e-8) -> DeviationReport:
    """|f(z) - 2^(1/3) sm(pi3/6 - 2^(1/3) z)| with f from its truncated series."""
    f = egf_f(order)
    k = 2.0 ** (1.0 / 3.0)
    pi3 = constants().pi3
    rep = DeviationReport("dixon", tol)
    for z in z_samples:
        z = float(z)
        if abs(z) > 0.5:
            rep.notes.append(f"z={z}: outside |z| <= 0.5, skipped")
            continue
        sm, _ = dixon_sm_cm(pi3 / 6.0 - k * z)
        rep.samples.append(z)
        rep.deviations.append(abs(f.evaluate(z) - k * sm))
    return rep


# -------------------------------------------------------------- Weierstrass wp


@lru_cache(maxsize=None)
def wp_laurent_coeffs(K: int = 60) -> tuple[Fraction, ...]:
    """Exact c_k with wp = z^-2 + sum_{k>=2} c_k z^(2k-2); index 0, 1 unused."""
    c = [Fraction(0)] * (K + 1)
    if K >= 2:
        c[2] = Fraction(G2, 20)
    if K >= 3:
        c[3] = Fraction(G3, 28)
    for k in range(4, K + 1):
        s = sum(c[m] * c[k - m] for m in range(2, k - 1))
        c[k] = Fraction(3, (2 * k + 1) * (k - 3)) * s
    return tuple(c)


def wp_laurent(z: complex, K: int = 60) -> tuple[complex, complex]:
    """(wp(z), wp'(z)) from the Laurent series at 0."""
    cs = [float(x) for x in wp_laurent_coeffs(K)]
    z = complex(z)
    z2 = z * z
    p = 0j
    dp = 0j
    for k in range(K, 1, -1):
        p = p * z2 + cs[k]
        dp = dp * z2 + (2 * k - 2) * cs[k]
    # p currently holds sum c_k z^(2k-4); dp holds sum (2k-2) c_k z^(2k-4)
    wp = 1.0 / z2 + p * z2
    dwp = -2.0 / (z2 * z) + dp * z
    return wp, dwp


def wp_add(u_vals: tuple[complex, complex], v_vals: tuple[complex, complex]) -> tuple[complex, complex]:
    """(wp(u+v), wp'(u+v)) from the values at u and v by the addition theorem."""
    pu, dpu = u_vals
    pv, dpv = v_vals
    lam = (dpu - dpv) / (pu - pv)
    w = 0.25 * lam * lam - pu - pv
    # the third intersection of the chord is -(u+v)
    dw = -dpu - lam * (w - pu)
    return w, dw


def _shortest_period() -> float:
    return constants().rho


def reduce_to_cell(z: complex) -> tuple[complex, complex]:
    """Split ``z = z_red + omega`` with omega the nearest lattice point."""
    w1, w2 = constants().periods
    # real coordinates in the (w1, w2) basis
    m = np.array([[w1.real, w2.real], [w1.imag, w2.imag]])
    s, t = np.linalg.solve(m, [z.real, z.imag])
    best = None
    for a in (math.floor(s), math.ceil(s)):
        for b in (math.floor(t), math.ceil(t)):
            for da in (-1, 0, 1):
                for db in (-1, 0, 1):
                    om = (a + da) * w1 + (b + db) * w2
                    d = abs(z - om)
                    if best is None or d < best[0]:
                        best = (d, om)
    return z - best[1], best[1]


_SPLIT_RATIOS = (0.5, 0.45, 0.55, 0.4, 0.6, 0.35, 0.65)


def wp_eval(z: complex, laurent_fraction: float = 0.6, _depth: int = 0) -> tuple[complex, complex]:
    """(wp(z), wp'(z)) for wp = wp(z; 0, -4).

    The Laurent series at 0 is used while |z| <= ``laurent_fraction`` times
    the shortest period (the distance from 0 to the nearest other pole);
    beyond that z is split as u + v and recombined with the addition theorem,
    recursively.  Points far out are first translated by a period.
    """
    z = complex(z)
    period = _shortest_period()
    red, om = reduce_to_cell(z)
    if abs(red) < 1e-12 * max(1.0, abs(z)):
        raise LatticePointError(f"{z} is a lattice point (pole of wp)")
    if abs(z) > 2 * period:
        z = red
    if abs(z) <= laurent_fraction * period:
        return wp_laurent(z)
    if _depth > 60:
        raise NearPoleError("addition-theorem recursion did not terminate")
    for s in _SPLIT_RATIOS:
        u, v = s * z, (1 - s) * z
        pu = wp_eval(u, laurent_fraction, _depth + 1)
        pv = wp_eval(v, laurent_fraction, _depth + 1)
        if abs(pu[0] - pv[0]) >= 1e-6 * (1.0 + abs(pu[0])):
            return wp_add(pu, pv)
    raise NearPoleError(f"every split of {z} is degenerate")


WEIERSTRASS_GRID = [0.0, 0.2, -0.2, 0.1 + 0.1j, -0.15 + 0.25j]


def verify_weierstrass(z_samples: Iterable[complex] = WEIERSTRASS_GRID, order: int = 60, tol: float = 1e-8) -> DeviationReport:
    """f(i sqrt3 z) against (-wp'(z+3r) - 2 i sqrt3) / (2 i sqrt3 wp(z+3r))."""
    f = egf_f(order)
    r = constants().r
    i3 = 1j * math.sqrt(3.0)
    rep = DeviationReport("weierstrass", tol)
    for z in z_samples:
        z = complex(z)
        if abs(z) > 0.3:
            rep.notes.append(f"z={z}: outside |z| <= 0.3, skipped")
            continue
        p, dp = wp_eval(z + 3 * r)
        rhs = (-dp - 2 * i3) / (2 * i3 * p)
        rep.samples.append(z)
        rep.deviations.append(abs(f.evaluate(i3 * z) - rhs))
    return rep


def verify_special_values(tol: float = 1e-9) -> DeviationReport:
    """wp(3r) = -1, wp'(3r) = 0, wp(2r) = 0, wp'(2r) = -2."""
    r = constants().r
    rep = DeviationReport("wp special values", tol)
    p3, dp3 = wp_eval(3 * r)
    p2, dp2 = wp_eval(2 * r)
    for label, got, want in (
        ("wp(3r)", p3, -1.0),
        ("wp'(3r)", dp3, 0.0),
        ("wp(2r)", p2, 0.0),
        ("wp'(2r)", dp2, -2.0),
    ):
        rep.samples.append(label)
        rep.deviations.append(abs(got - want))
    return rep


def verify_pi3(digits: int = 11) -> DeviationReport:
    """pi3 against 5.2999162508 in its first ``digits`` significant digits.

    The reference is truncated, not rounded (pi3 = 5.29991625085...), so the
    digits agree when 0 <= pi3 - ref < 10^(1 - digits).
    """
    ref = 5.2999162508
    k = constants()
    rep = DeviationReport("pi3", 10.0 ** (1 - digits))
    for label, v in (("gamma", k.pi3), ("quadrature", k.pi3_quadrature)):
        rep.samples.append(label)
        # a value below the truncated reference cannot share its digits
        rep.deviations.append(v - ref if v >= ref else math.inf)
    return rep


# ------------------------------------------------------------------ lattice sum


@dataclass(frozen=True)
class LatticeSum:
    n: int
    cutoff: int
    value: float
    imag_residue: float
    tail_bound: float


def lattice_sum(n: int, cutoff: int = 200) -> LatticeSum:
    """alpha_n = -(n!/rho^(n+1)) sum zeta^(8l+4m) / ((l-1/2) zeta + (m-1/2)/zeta)^(n+1).

    The sum runs over the box |l - 1/2|, |m - 1/2| <= cutoff - 1/2 (which is
    symmetric under w -> -w) and is accumulated with math.fsum.
    """
    if n < 2:
        raise ValueError("the lattice sum represents alpha_n only for n >= 2")
    if cutoff < 10:
        raise ValueError("cutoff must be >= 10")
    k = constants()
    zeta = k.zeta12
    idx = np.arange(-cutoff + 1, cutoff + 1)
    L, M = np.meshgrid(idx, idx, indexing="ij")
    w = (L - 0.5) * zeta + (M - 0.5) / zeta
    phase = np.exp(1j * math.pi / 6.0 * ((8 * L + 4 * M) % 12))
    terms = phase / w ** (n + 1)
    total = complex(math.fsum(terms.real.ravel()), math.fsum(terms.imag.ravel()))
    scale = -math.factorial(n) / k.rho ** (n + 1)
    value = scale * total
    # |w| >= (cutoff - 1/2) * sqrt(3)/2 outside the box; crude integral bound
    rmin = (cutoff - 0.5) * math.sqrt(3.0) / 2.0
    cell = math.sqrt(3.0) / 2.0
    tail = abs(scale) * 2 * math.pi / (cell * (n - 1) * rmin ** (n - 1))
    return LatticeSum(n, cutoff, value.real, abs(value.imag), tail)


def lattice_sum_alpha(n: int, cutoff: int = 200) -> float:
    """Real part of the lattice sum; warns if the imaginary residue is not
    below 1e-9 times the result."""
    res = lattice_sum(n, cutoff)
    if res.imag_residue > 1e-9 * abs(res.value):
        warnings.warn(
            f"lattice sum for n={n}, cutoff={cutoff} has imaginary residue {res.imag_residue:.3e}",
            PrecisionWarning,
            stacklevel=2,
        )
    return res.value


def asymptotic_alpha(n: int) -> float:
    """Leading-pole estimate of alpha_n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    r = constants().r
    nu = n // 2
    if n % 2 == 0:
        lead = (-1) ** nu * 3.0 ** (-nu) * r ** (-2 * nu - 1)
    else:
        lead = (-1) ** (nu + 1) * 3.0 ** (-nu - 1) * r ** (-2 * nu - 2)
    return math.factorial(n) * lead


def exact_alpha_float(n: int) -> float:
    return float(alpha_seq(n + 1)[n])
