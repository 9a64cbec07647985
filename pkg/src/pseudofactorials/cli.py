"""The ``pf`` command: tables and verification suites.

Exit status is 0 when everything printed checks out, 1 when any check fails
and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import cf_engine, congruence, numeric_elliptic, orthopoly, pseudofact
from .algebra import AlgebraError, format_rational
from .series import TruncSeries

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def env_order(default: int) -> int:
    """PF_ORDER, if set, replaces the default truncation order."""
    raw = os.environ.get("PF_ORDER")
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"PF_ORDER must be an integer, got {raw!r}") from None
    if value < 4:
        raise UsageError("PF_ORDER must be >= 4")
    return value


def jsonable(obj, tol=None):
    """Exact numbers become strings; floats are tagged with ``tol``."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, float):
        value = obj if math.isfinite(obj) else repr(obj)
        return {"value": value, "tol": tol}
    if isinstance(obj, complex):
        return {"re": jsonable(obj.real, tol), "im": jsonable(obj.imag, tol)}
    if isinstance(obj, dict):
        if set(obj) == {"value", "tol"}:  # already tagged
            v = obj["value"]
            return {"value": v if not isinstance(v, float) or math.isfinite(v) else repr(v), "tol": obj["tol"]}
        return {str(k): jsonable(v, tol) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v, tol) for v in obj]
    return str(obj)


def dump_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def fmt_float(x: float) -> str:
    return f"{x:.3e}"


# -------------------------------------------------------------- verification


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    data: dict = field(default_factory=dict)

    def line(self) -> str:
        tag = "NOTE" if self.name == "note" else "PASS" if self.passed else "FAIL"
        if tag == "NOTE":
            return f"NOTE  {self.detail}"
        return f"{tag}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


@dataclass
class Suite:
    name: str
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "seconds": f"{self.seconds:.3f}",
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail, **c.data} for c in self.checks],
        }

    def text(self) -> str:
        head = f"[{self.name}] {'PASS' if self.passed else 'FAIL'} in {self.seconds:.2f}s"
        return "\n".join([head] + ["  " + c.line() for c in self.checks])


PROFILES = {
    # name: identities order, addition order, cf depth, sr order, theorem5 K/order,
    #       hankel m, recurrence m, lattice n-range and cutoff
    "quick": dict(order=20, add=12, depth=8, sr_order=20, K=10, t_order=12, hankel=6, rec=5, lattice=range(4, 11), cutoff=100),
    "default": dict(order=60, add=20, depth=30, sr_order=70, K=25, t_order=30, hankel=12, rec=7, lattice=range(2, 21), cutoff=200),
    "deep": dict(order=100, add=30, depth=45, sr_order=100, K=40, t_order=45, hankel=16, rec=11, lattice=range(2, 31), cutoff=400),
}


def suite_identities(order: int, add_order: int) -> Suite:
    s = Suite("identities")
    rep = pseudofact.check_identities(order)
    for c in rep.checks:
        detail = f"order {c.order}" if c.passed else f"first failure at z^{c.first_failure}"
        s.checks.append(Check(c.name, c.passed, detail))
    ok = pseudofact.verify_addition_formula(add_order)
    s.checks.append(Check("addition formula (cross-multiplied)", ok, f"total order {add_order}"))
    return s


def _agree(x: cf_engine.JFraction, y: cf_engine.JFraction) -> bool:
    return x.c == y.c and x.a == y.a


def suite_cf(depth: int, sr_order: int) -> Suite:
    s = Suite("cf")
    closed = cf_engine.pseudofactorial_jfraction(depth)
    ogf = cf_engine._pf_ogf_jfraction(depth)
    sr = cf_engine._pf_sr_jfraction(depth, max(sr_order, 2 * depth + 1))
    s.checks.append(Check("OGF peeling = closed form", _agree(ogf, closed), f"j < {depth}"))
    s.checks.append(Check("SR decomposition = closed form", _agree(sr, closed), f"j < {depth}"))

    k_max = min(15, depth)
    f = TruncSeries(pseudofact.alpha_seq(2 * k_max + 1))
    ok = True
    for k in range(1, k_max + 1):
        pair = cf_engine.convergents(closed, k)
        Q = TruncSeries(pair.Q.coeffs, order=2 * k)
        P = TruncSeries(pair.P.coeffs, order=2 * k)
        ok &= (Q * f.truncate(2 * k) - P).is_zero()
    s.checks.append(Check("Q_k F - P_k = O(z^(2k))", ok, f"k <= {k_max}"))

    sec = cf_engine.sr_decompose(cf_engine.secant_egf(20), 8)
    jf = cf_engine.jfraction_from_sr(sec)
    ok = all(sec.omegas[k] == math.factorial(k) ** 2 for k in range(9))
    ok &= all(jf.a[j - 1] == j * j for j in range(1, 9)) and all(c == 0 for c in jf.c)
    s.checks.append(Check("secant: omega_k = (k!)^2, a_j = j^2, c_j = 0", ok, "k, j <= 8"))
    return s


def suite_theorem5(K: int, order: int) -> Suite:
    s = Suite("theorem5")
    rep = orthopoly.verify_theorem5(K, order)
    bad = [k for k, _, _, eq in rep.rows if not eq]
    s.checks.append(Check("k! [t^k] Upsilon = q_k", rep.passed, f"k <= {K}" if not bad else f"mismatch at k = {bad}"))
    mf = orthopoly.MomentFunctional.pseudofactorial(2 * min(K, 12) + 1)
    qs = orthopoly.q_family(min(K, 12))
    ok = all(orthopoly.inner_product(qs[m], qs[n], mf) == 0 for n in range(len(qs)) for m in range(n))
    s.checks.append(Check("<q_m, q_n> = 0 for m < n", ok, f"n <= {len(qs) - 1}"))
    jf = cf_engine.pseudofactorial_jfraction(len(qs))
    ok = all(orthopoly.inner_product(q, q, mf) == math.prod(jf.a[:n]) for n, q in enumerate(qs))
    s.checks.append(Check("<q_n, q_n> = a_1 ... a_n", ok, f"n <= {len(qs) - 1}"))
    ok = orthopoly.curve_param_check([Fraction(k, 3) for k in range(-6, 7)])
    s.checks.append(Check("rational parametrisation lies on the eta curve", ok, "13 sample points"))
    for note in rep.notes:
        s.checks.append(Check("note", True, note))
    return s


def suite_hankel(max_m: int) -> Suite:
    s = Suite("hankel")
    alphas = pseudofact.alpha_seq(2 * max_m)
    jf = cf_engine.pseudofactorial_jfraction(max_m)
    bad = []
    for m in range(1, max_m + 1):
        d = cf_engine.hankel(alphas, m)
        if not (d == cf_engine.hankel_product(jf, m) == cf_engine.hankel_closed_form(m)):
            bad.append(m)
    s.checks.append(Check("det = prod a_j^(m-j) = closed form", not bad, f"m <= {max_m}" if not bad else f"m = {bad}"))
    return s


def suite_congruence(rec_m: int) -> Suite:
    s = Suite("congruence")
    bad = congruence.mismatched_cells()
    s.checks.append(Check("residue table M = 2..20, n = 0..25", not bad, f"{len(bad)} mismatched cells"))
    for M, want in ((3, 2), (7, 36), (6, 2)):
        got = congruence.detect_period(congruence.alpha_mod(M, 200))
        s.checks.append(
            Check(f"observed period mod {M}", got.period == want, f"preperiod {got.preperiod}, period {got.period}")
        )
    vals = congruence.alpha_mod(11, 201).values
    s.checks.append(Check("alpha_n = 0 mod 11 for 11 <= n <= 200", all(v == 0 for v in vals[11:]), ""))
    ok = all(congruence.check_modular_recurrence(m, None, 60) for m in range(1, rec_m + 1))
    s.checks.append(Check("recurrence with Q_m mod 3^ceil(m/2) (m!)^2", ok, f"m <= {rec_m}, n < 60"))
    return s


def _read_samples(path: str) -> tuple[list, list]:
    dixon, weier = [], []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2 or parts[0] not in ("dixon", "weierstrass"):
                raise UsageError(f"{path}:{lineno}: expected 'dixon <x>' or 'weierstrass <z>'")
            try:
                z = complex(parts[1].replace("i", "j"))
            except ValueError:
                raise UsageError(f"{path}:{lineno}: bad number {parts[1]!r}") from None
            if parts[0] == "dixon":
                if z.imag:
                    raise UsageError(f"{path}:{lineno}: dixon samples must be real")
                dixon.append(z.real)
            else:
                weier.append(z)
    return dixon, weier


def suite_elliptic(order: int, lattice_ns, cutoff: int, tol: float | None, samples: str | None) -> Suite:
    s = Suite("elliptic")
    ne = numeric_elliptic
    try:
        ne.constants()
    except ne.ConsistencyError as exc:
        s.checks.append(Check("pi3 cross-check", False, str(exc)))
        return s
    dixon, weier = (ne.DIXON_GRID, ne.WEIERSTRASS_GRID) if samples in (None, "default") else _read_samples(samples)
    t = 1e-8 if tol is None else tol
    reports = [
        ne.verify_pi3(),
        ne.verify_dixon(dixon, order=order, tol=t),
        ne.verify_weierstrass(weier, order=order, tol=t),
        ne.verify_special_values(1e-9 if tol is None else tol),
    ]
    for rep in reports:
        s.checks.append(
            Check(
                rep.name,
                rep.passed,
                f"max deviation {fmt_float(rep.max_deviation)} <= {fmt_float(rep.tol)}",
                {"report": jsonable(rep.to_json(), rep.tol)},
            )
        )
        for note in rep.notes:
            s.checks.append(Check("note", True, note))
    worst = {}
    failures = []
    for n in lattice_ns:
        bound = tol if tol is not None else (1e-6 if n <= 10 else 1e-8)
        exact = ne.exact_alpha_float(n)
        rel = abs(ne.lattice_sum(n, cutoff).value - exact) / abs(exact)
        worst[n] = rel
        if rel > bound:
            failures.append(n)
    rng = f"n = {min(lattice_ns)}..{max(lattice_ns)}, cutoff {cutoff}"
    s.checks.append(
        Check(
            "lattice sum relative error",
            not failures,
            rng + (f", max {fmt_float(max(worst.values()))}" if worst else "") + (f", failing n = {failures}" if failures else ""),
            {"relative_errors": {str(n): {"value": v, "tol": tol or (1e-6 if n <= 10 else 1e-8)} for n, v in worst.items()}},
        )
    )
    signs = all(
        math.copysign(1, ne.asymptotic_alpha(n)) == math.copysign(1, ne.exact_alpha_float(n)) for n in range(2, 41)
    )
    s.checks.append(Check("asymptotic sign pattern", signs, "2 <= n <= 40"))
    return s


# ---------------------------------------------------------------- subcommands


def cmd_alpha(args, out) -> int:
    alphas = pseudofact.alpha_seq(args.count)
    if args.json:
        out.write(dump_json({"count": str(args.count), "alpha": [str(a) for a in alphas]}))
    elif args.csv:
        w = csv.writer(out, lineterminator="\r\n")
        w.writerow(["n", "alpha_n"])
        w.writerows(enumerate(alphas))
    else:
        width = len(str(len(alphas) - 1))
        for n, a in enumerate(alphas):
            out.write(f"{n:>{width}}  {a}\n")
    return EXIT_OK


_SOURCES = {
    "ogf": "ogf",
    "recurrence": "ogf",
    "sr": "sr",
    "closed-form": "closed-form",
}


def _cf_by_source(src: str, depth: int, order: int) -> cf_engine.JFraction:
    if src == "ogf":
        return cf_engine._pf_ogf_jfraction(depth)
    if src == "sr":
        return cf_engine._pf_sr_jfraction(depth, order)
    return cf_engine.pseudofactorial_jfraction(depth)


def cmd_cf(args, out) -> int:
    depth = args.depth
    order = args.order or max(env_order(2 * depth + 10), 2 * depth + 1)
    tables = {name: _cf_by_source(name, depth, order) for name in ("ogf", "sr", "closed-form")}
    chosen = tables[_SOURCES[args.source]]
    agree = all(_agree(jf, chosen) for jf in tables.values())
    diffs = [name for name, jf in tables.items() if not _agree(jf, chosen)]
    if args.json:
        payload = {"source": args.source, "depth": str(depth), "jfraction": chosen.to_json(), "all_sources_agree": agree}
        if diffs:
            payload["disagreeing_sources"] = diffs
        out.write(dump_json(payload))
    else:
        rows = [("j", "c_j", "a_j")]
        for j in range(depth):
            a = format_rational(chosen.a[j - 1]) if j >= 1 else "-"
            rows.append((str(j), format_rational(chosen.c[j]), a))
        rows.append((str(depth), "-", format_rational(chosen.a[depth - 1])))
        widths = [max(len(r[i]) for r in rows) for i in range(3)]
        for r in rows:
            out.write("  ".join(x.rjust(w) for x, w in zip(r, widths)) + "\n")
        out.write(f"all sources agree: {'yes' if agree else 'NO (' + ', '.join(diffs) + ')'}\n")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_hankel(args, out) -> int:
    alphas = pseudofact.alpha_seq(2 * args.max_m)
    jf = cf_engine.pseudofactorial_jfraction(args.max_m)
    rows = []
    for m in range(1, args.max_m + 1):
        d = cf_engine.hankel(alphas, m)
        closed = cf_engine.hankel_closed_form(m)
        prod = cf_engine.hankel_product(jf, m)
        rows.append((m, d, prod, closed, d == prod == closed))
    ok = all(r[4] for r in rows)
    if args.json:
        out.write(
            dump_json(
                {
                    "passed": ok,
                    "rows": [
                        {"m": str(m), "det": str(d), "product": format_rational(p), "closed_form": str(c), "equal": e}
                        for m, d, p, c, e in rows
                    ],
                }
            )
        )
    else:
        table = [("m", "det H_m", "closed form", "ok")] + [
            (str(m), str(d), str(c), "yes" if e else "NO") for m, d, _, c, e in rows
        ]
        widths = [max(len(r[i]) for r in table) for i in range(4)]
        for r in table:
            out.write("  ".join(x.rjust(w) for x, w in zip(r, widths)) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_ortho(args, out) -> int:
    qs = orthopoly.q_family(args.max_k)
    if args.json:
        out.write(dump_json({"q": [{"k": str(k), "coeffs": [format_rational(c) for c in q.coeffs]} for k, q in enumerate(qs)]}))
    else:
        for k, q in enumerate(qs):
            out.write(f"q_{k} = {q.to_str('z')}\n")
    return EXIT_OK


def cmd_congruence(args, out) -> int:
    if args.action == "table":
        if args.json:
            rows = congruence.figure3_table(args.max_mod, args.max_n)
            out.write(
                dump_json(
                    {
                        "rows": [
                            {"modulus": str(M), "residues": [str(x) for x in row]}
                            for M, row in zip(range(2, args.max_mod + 1), rows)
                        ]
                    }
                )
            )
        elif args.csv:
            out.write(congruence.figure3_csv(args.max_mod, args.max_n))
        else:
            out.write(congruence.figure3_text(args.max_mod, args.max_n) + "\n")
        return EXIT_OK
    if args.action == "period":
        horizon = args.horizon
        seq = congruence.detect_period(congruence.alpha_mod(args.mod, horizon), horizon)
        if args.json:
            data = seq.to_json()
            data.pop("values")
            data["horizon"] = str(horizon)
            out.write(dump_json(data))
        elif seq.period is None:
            out.write(f"mod {args.mod}: no period observed within {horizon} terms\n")
        else:
            cycle = ",".join(str(x) for x in seq.values[seq.preperiod : seq.preperiod + seq.period])
            out.write(
                f"mod {args.mod}: preperiod {seq.preperiod}, period {seq.period} "
                f"(observed over {horizon} terms)\n"
            )
            if seq.period <= 60:
                out.write(f"cycle: {cycle}\n")
        return EXIT_OK
    # convergent
    mc = congruence.modular_convergent(args.m, args.mod)
    if args.json:
        out.write(
            dump_json(
                {
                    "m": str(mc.m),
                    "modulus": str(mc.modulus),
                    "canonical_modulus": str(mc.canonical_modulus),
                    "P": [str(int(c)) for c in mc.P.coeffs],
                    "Q": [str(int(c)) for c in mc.Q.coeffs],
                }
            )
        )
    else:
        out.write(f"m = {mc.m}, modulus {mc.modulus} (canonical {mc.canonical_modulus})\n")
        out.write(f"P_{mc.m} = {mc.P.to_str('z')}\n")
        out.write(f"Q_{mc.m} = {mc.Q.to_str('z')}\n")
    return EXIT_OK


def cmd_lattice(args, out) -> int:
    ne = numeric_elliptic
    rows = []
    ok = True
    for n in args.n:
        res = ne.lattice_sum(n, args.cutoff)
        row = {"n": n, "value": res.value, "imag_residue": res.imag_residue, "tail_bound": res.tail_bound}
        if args.compare_exact:
            exact = ne.exact_alpha_float(n)
            rel = abs(res.value - exact) / abs(exact)
            bound = args.tol if args.tol is not None else (1e-6 if n <= 10 else 1e-8)
            row.update(exact=pseudofact.alpha_seq(n + 1)[n], rel_error=rel, tol=bound)
            ok &= rel <= bound
        rows.append(row)
    if args.json:
        payload = []
        for r in rows:
            tol = r.get("tol")
            item = {"n": str(r["n"]), "cutoff": str(args.cutoff)}
            for key in ("value", "imag_residue", "tail_bound", "rel_error"):
                if key in r:
                    item[key] = jsonable(r[key], tol)
            if "exact" in r:
                item["exact"] = str(r["exact"])
            payload.append(item)
        out.write(dump_json({"passed": ok, "sums": payload}))
    else:
        for r in rows:
            line = f"n={r['n']:<3} sum={r['value']:.15e}  imag={fmt_float(r['imag_residue'])}"
            if "exact" in r:
                flag = "ok" if r["rel_error"] <= r["tol"] else "FAIL"
                line += f"  exact={r['exact']}  rel.err={fmt_float(r['rel_error'])} (tol {fmt_float(r['tol'])}) {flag}"
            out.write(line + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def run_verify(args) -> list[Suite]:
    profile = PROFILES["quick" if args.quick else "deep" if args.deep else "default"]
    order = args.order or env_order(profile["order"])
    what = args.what
    suites = []

    def timed(fn, *a):
        t0 = time.perf_counter()
        s = fn(*a)
        s.seconds = time.perf_counter() - t0
        suites.append(s)

    if what in ("identities", "all"):
        timed(suite_identities, order, profile["add"])
    if what in ("cf", "all"):
        depth = args.depth or profile["depth"]
        timed(suite_cf, depth, max(profile["sr_order"], 2 * depth + 1))
    if what in ("theorem5", "all"):
        K = args.max_k or profile["K"]
        timed(suite_theorem5, K, args.order or max(profile["t_order"], K + 1))
    if what in ("hankel", "all"):
        timed(suite_hankel, args.max_m or profile["hankel"])
    if what in ("congruence", "all"):
        timed(suite_congruence, profile["rec"])
    if what in ("elliptic", "all"):
        # the Dixon grid reaches |z| = 0.4, which needs about 60 terms
        timed(suite_elliptic, max(order, 60), profile["lattice"], profile["cutoff"], args.tol, args.samples)
    return suites


def cmd_verify(args, out) -> int:
    suites = run_verify(args)
    ok = all(s.passed for s in suites)
    if args.json:
        out.write(dump_json({"passed": ok, "suites": [s.to_json() for s in suites]}))
    else:
        for s in suites:
            out.write(s.text() + "\n")
        out.write(f"overall: {'PASS' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_FAIL


# -------------------------------------------------------------------- parsing


def _positive(name, lo=1):
    def conv(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"{name} must be >= {lo}")
        return v

    return conv


def _tolerance(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError("tolerance must be a number") from None
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write to this file instead of standard output")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="pf", description="Pseudo-factorial tables and verifications.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    a = sub.add_parser("alpha", parents=[common], help="the sequence alpha_n")
    a.add_argument("--count", type=_positive("count"), default=11)
    a.add_argument("--csv", action="store_true")
    a.set_defaults(func=cmd_alpha)

    c = sub.add_parser("cf", parents=[common], help="J-fraction coefficients")
    c.add_argument("--depth", type=_positive("depth"), default=30)
    c.add_argument("--source", choices=sorted(_SOURCES), default="closed-form")
    c.add_argument("--order", type=_positive("order", 3), help="truncation order for the SR route")
    c.set_defaults(func=cmd_cf)

    h = sub.add_parser("hankel", parents=[common], help="Hankel determinants")
    h.add_argument("--max-m", type=_positive("max-m"), default=12)
    h.set_defaults(func=cmd_hankel)

    o = sub.add_parser("ortho", parents=[common], help="orthogonal polynomials q_k")
    o.add_argument("--max-k", type=_positive("max-k", 0), default=6)
    o.set_defaults(func=cmd_ortho)

    g = sub.add_parser("congruence", help="residues modulo M")
    gsub = g.add_subparsers(dest="action", metavar="ACTION")
    gsub.required = True
    gt = gsub.add_parser("table", parents=[common])
    gt.add_argument("--max-mod", type=_positive("max-mod", 2), default=20)
    gt.add_argument("--max-n", type=_positive("max-n"), default=26)
    gt.add_argument("--csv", action="store_true")
    gp = gsub.add_parser("period", parents=[common])
    gp.add_argument("--mod", type=_positive("mod", 2), required=True)
    gp.add_argument("--horizon", type=_positive("horizon", 2), default=200)
    gc = gsub.add_parser("convergent", parents=[common])
    gc.add_argument("--m", type=_positive("m"), required=True)
    gc.add_argument("--mod", type=_positive("mod", 2), help="default: 3^ceil(m/2) (m!)^2")
    g.set_defaults(func=cmd_congruence)

    lat = sub.add_parser("lattice", parents=[common], help="hexagonal lattice sums")
    lat.add_argument("--n", type=_positive("n", 2), nargs="+", default=list(range(2, 21)))
    lat.add_argument("--cutoff", type=_positive("cutoff", 10), default=200)
    lat.add_argument("--compare-exact", action="store_true")
    lat.add_argument("--tol", type=_tolerance, help="relative tolerance for --compare-exact")
    lat.set_defaults(func=cmd_lattice)

    v = sub.add_parser("verify", parents=[common], help="verification suites")
    v.add_argument("what", choices=["identities", "cf", "theorem5", "hankel", "congruence", "elliptic", "all"])
    prof = v.add_mutually_exclusive_group()
    prof.add_argument("--quick", action="store_true", help="small orders, a few seconds")
    prof.add_argument("--deep", action="store_true", help="large orders, minutes")
    v.add_argument("--order", type=_positive("order", 4))
    v.add_argument("--depth", type=_positive("depth"))
    v.add_argument("--max-k", type=_positive("max-k"))
    v.add_argument("--max-m", type=_positive("max-m"))
    v.add_argument("--samples", help="sample file for the elliptic checks, or 'default'")
    v.add_argument("--tol", type=_tolerance, help="override numeric tolerances")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except UsageError as exc:
        print(f"pf: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, AlgebraError, OSError) as exc:
        print(f"pf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE if isinstance(exc, (ValueError, OSError)) else EXIT_FAIL
    except numeric_elliptic.ConsistencyError as exc:
        print(f"pf: consistency check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = buf.getvalue()
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
