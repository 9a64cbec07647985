"""Acceptance criteria 1-11, each checked at its stated tolerance and time limit.

Run under pytest (a summary line per criterion is printed at the end of the
session) or directly with ``python tests/test_acceptance.py``.
"""

import math
import time

import pytest

from pseudofactorials import cf_engine, congruence, numeric_elliptic as ne, orthopoly, pseudofact

RESULTS = {}


def _fresh():
    pseudofact._alpha_prefix.cache_clear()


def criterion_1():
    _fresh()
    t0 = time.perf_counter()
    got = pseudofact.alpha_seq(11)
    elapsed = time.perf_counter() - t0
    want = [1, -1, -2, 2, 16, -40, -320, 1040, 12160, -52480, -742400]
    return got == want, elapsed, 1e-3, "alpha_0..alpha_10"


def criterion_2():
    _fresh()
    t0 = time.perf_counter()
    depth = 31  # j = 0..30
    closed = cf_engine.pseudofactorial_jfraction(depth)
    ogf = cf_engine.jfraction_from_ogf(pseudofact.alpha_seq(2 * depth + 1), depth)
    sr = cf_engine.jfraction_from_sr(cf_engine.sr_decompose(pseudofact.egf_f(70), depth, 70))
    elapsed = time.perf_counter() - t0
    ok = ogf == closed == sr
    ok &= all(closed.c[j] == cf_engine.closed_form_cf_coeffs(j)[0] for j in range(31))
    return ok, elapsed, 5.0, "OGF, SR (order 70) and closed form, j <= 30"


def criterion_3():
    _fresh()
    t0 = time.perf_counter()
    ok = pseudofact.verify_addition_formula(20)
    return ok, time.perf_counter() - t0, 10.0, "total order 20"


def criterion_4():
    _fresh()
    t0 = time.perf_counter()
    report = orthopoly.verify_theorem5(25, 30)
    b = orthopoly.theorem5_bundle(10)
    elapsed = time.perf_counter() - t0
    ok = report.passed and len(report.rows) == 26
    ok &= b.eta.egf_values()[:8] == [1, 1, 2, 10, 24, 280, 400, 12880]
    ok &= b.chi.egf_values()[:7] == [1, 0, 1, -2, 1, -100, -575]
    ok &= b.bigJ.egf_values()[:10] == [0, 1, 0, 3, 0, 45, 0, 1215, 0, 8505]
    return ok, elapsed, 30.0, "k <= 25 at order 30; eta, chi, J expansions"


def criterion_5():
    _fresh()
    t0 = time.perf_counter()
    alphas = pseudofact.alpha_seq(24)
    jf = cf_engine.pseudofactorial_jfraction(12)
    ok = all(
        cf_engine.hankel(alphas, m) == cf_engine.hankel_product(jf, m) == cf_engine.hankel_closed_form(m)
        for m in range(1, 13)
    )
    return ok, time.perf_counter() - t0, 1.0, "m <= 12"


def criterion_6():
    t0 = time.perf_counter()
    ok = not congruence.mismatched_cells()
    p3 = congruence.detect_period(congruence.alpha_mod(3, 200))
    p7 = congruence.detect_period(congruence.alpha_mod(7, 200))
    ok &= p3.period == 2 and p7.period == 36
    ok &= all(v == 0 for v in congruence.alpha_mod(11, 201).values[11:])
    ok &= all(congruence.check_modular_recurrence(m, None, 60) for m in range(1, 8))
    return ok, time.perf_counter() - t0, 1.0, "table M=2..20 x n=0..25, periods 2 and 36, mod 11, m <= 7"


def criterion_7():
    _fresh()
    t0 = time.perf_counter()
    report = pseudofact.check_identities(60)
    return report.passed and len(report.checks) == 4, time.perf_counter() - t0, 2.0, "order 60"


def criterion_8():
    t0 = time.perf_counter()
    rep = ne.verify_dixon(ne.DIXON_GRID, order=60, tol=1e-8)
    digits = ne.verify_pi3(11)
    ok = rep.passed and len(rep.samples) == 9 and digits.passed
    detail = f"max deviation {rep.max_deviation:.1e}, pi3 = {ne.constants().pi3:.12f}"
    return ok, time.perf_counter() - t0, None, detail


def criterion_9():
    t0 = time.perf_counter()
    rep = ne.verify_weierstrass(ne.WEIERSTRASS_GRID, order=60, tol=1e-8)
    special = ne.verify_special_values(1e-9)
    ok = rep.passed and len(rep.samples) == 5 and special.passed
    detail = f"max deviation {rep.max_deviation:.1e}, special values {special.max_deviation:.1e}"
    return ok, time.perf_counter() - t0, None, detail


def criterion_10():
    t0 = time.perf_counter()
    worst = {}
    ok = True
    for n in range(2, 21):
        exact = ne.exact_alpha_float(n)
        rel = abs(ne.lattice_sum(n, 200).value - exact) / abs(exact)
        worst[n] = rel
        ok &= rel <= (1e-6 if n <= 10 else 1e-8)
    ok &= all(
        math.copysign(1, ne.asymptotic_alpha(n)) == math.copysign(1, ne.exact_alpha_float(n)) for n in range(2, 41)
    )
    lo = max(worst[n] for n in range(2, 11))
    hi = max(worst[n] for n in range(11, 21))
    return ok, time.perf_counter() - t0, None, f"max rel. error {lo:.1e} (n<=10), {hi:.1e} (n>=11); signs n<=40"


def criterion_11():
    t0 = time.perf_counter()
    d = cf_engine.sr_decompose(cf_engine.secant_egf(20), 8)
    jf = cf_engine.jfraction_from_sr(d)
    ok = list(d.omegas) == [math.factorial(k) ** 2 for k in range(9)]
    ok &= jf.a == tuple(j * j for j in range(1, 9)) and all(c == 0 for c in jf.c)
    return ok, time.perf_counter() - t0, None, "k, j <= 8"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


def evaluate(i):
    ok, elapsed, limit, detail = CRITERIA[i - 1]()
    in_time = limit is None or elapsed < limit
    limit_txt = "" if limit is None else f" < {limit:g}s"
    line = (
        f"criterion {i:2d}: {'PASS' if ok and in_time else 'FAIL'}  "
        f"{detail}; {elapsed * 1e3:.1f} ms{limit_txt}"
    )
    RESULTS[i] = line
    return ok, in_time, line


@pytest.mark.parametrize("i", range(1, 12))
def test_criterion(i):
    ok, in_time, line = evaluate(i)
    print(line)
    assert ok, line
    assert in_time, line


if __name__ == "__main__":
    failed = 0
    for i in range(1, 12):
        ok, in_time, line = evaluate(i)
        print(line)
        failed += not (ok and in_time)
    raise SystemExit(1 if failed else 0)
