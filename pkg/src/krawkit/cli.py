"""Command line interface.

Subcommands:
  eval    print one exactly-computed quantity (optionally with a term trace)
  table   emit a full Krawtchouk value grid as csv or json
  verify  sweep identity suites, stream one jsonl report per parameter point
  bench   time two routes to the same quantity over a parameter ramp

Exit codes: 0 success, 1 verification found an unexpected failure, 2 bad
parameters or selectors, 3 internal invariant violation.  All numeric output
is exact decimal.  Environment: KRAWKIT_THREADS sizes the verify worker pool,
KRAWKIT_TERM_CAP caps retained trace terms.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import catalan_numbers as cat
from . import central as cen
from . import characters as ch
from . import polynomials as kw
from . import reduction as red
from . import verify as vf
from .binomial_identities import pochhammer_binomial
from .errors import InvariantViolationError, ParameterError


def _two_adic_split(value: int) -> tuple[int, int]:
    exponent = 0
    while value % 2 == 0 and value > 0:
        value >>= 1
        exponent += 1
    return exponent, value


def _eval_kraw(args) -> int:
    n, p, x = args.n, args.p, args.x
    if args.route == "direct":
        value = kw.krawtchouk(n, p, x)
    elif args.route == "halving":
        if n % 2 or x % 2:
            raise ParameterError("the halving route needs even order and argument")
        value = red.halve_order(n // 2, p, x // 2)
    elif args.route == "character":
        if n % 2 or x % 2:
            raise ParameterError("the character route needs even order and argument")
        value = ch.exterior_character(n // 2, p, x // 2)
    elif args.route == "multi":
        r, m = _two_adic_split(n)
        if r < 1:
            raise ParameterError("the multi route needs an even order")
        if x == 0:
            s, j = r, 0
        else:
            s, j = _two_adic_split(x)
            if s < 1:
                raise ParameterError("the multi route needs an even argument")
        trace = red.power_reduce(m, p, r, s, j)
        if args.explain:
            for term in trace.terms:
                chain = ",".join(str(c) for c in term.chain)
                print(
                    f"chain=({chain}) power=2^{term.power} coeff={term.coefficient} "
                    f"leaf=K_{term.chain[-1]}^{trace.leaf_order}({trace.leaf_argument})"
                    f"={term.leaf} value={term.value}"
                )
            if trace.term_count > len(trace.terms):
                print(f"... {trace.term_count - len(trace.terms)} more terms (capped)")
        value = trace.total
    else:
        raise ParameterError(f"unknown route {args.route!r}")
    print(value)
    return 0


def _eval_binom(args) -> int:
    if args.route == "direct":
        print(kw.binomial(args.x, args.k))
        return 0
    if args.route == "pochhammer":
        x, k = args.x, args.k
        if x < 0 or k < 0:
            raise ParameterError("the pochhammer route needs nonnegative arguments")
        print(pochhammer_binomial(x // 2, k // 2, x % 2, k % 2))
        return 0
    raise ParameterError(f"unknown route {args.route!r}")


_CENTRAL_ROUTES = ("direct", "sum", "half", "doubling", "weighted", "self-even", "self-odd", "kraw")


def _eval_central(args) -> int:
    m, route = args.m, args.route
    if route == "direct":
        value = cen.central_direct(m)
    elif route == "sum":
        value = cen.central_sum(m)
    elif route == "half":
        value = cen.central_half_recursion(m // 2, "odd" if m % 2 else "even")
    elif route == "doubling":
        if m % 2:
            raise ParameterError("the doubling route produces even indices only")
        value = cen.central_double(m // 2)
    elif route == "weighted":
        value = cen.central_alt_recursion(m // 2, "odd" if m % 2 else "even")
    elif route == "self-even":
        value = cen.central_self_recursion(m, "even_binomials")
    elif route == "self-odd":
        value = cen.central_self_recursion(m, "odd_binomials")
    elif route == "kraw":
        if m % 2 == 0:
            raise ParameterError("the Krawtchouk route recovers odd indices only")
        value = cen.central_krawtchouk_sum(m)
    else:
        raise ParameterError(f"unknown route {route!r}")
    print(value)
    return 0


def _eval_catalan(args) -> int:
    print(cat.catalan(args.n, args.route))
    return 0


def _eval_motzkin(args) -> int:
    print(cat.motzkin(args.n))
    return 0


def _cmd_table(args) -> int:
    if args.n > args.cap:
        raise ParameterError(f"order {args.n} exceeds the cap {args.cap}")
    table = kw.build_table(args.n)
    if args.format == "csv":
        for row in table.values:
            print(",".join(str(v) for v in row))
    else:
        print(json.dumps({"order": table.order, "values": [list(r) for r in table.values]},
                         separators=(",", ":")))
    return 0


def _cmd_verify(args) -> int:
    if args.list:
        checks = vf.checks_for(args.suite)
        for chk in checks:
            tag = " [expected-fail]" if chk.expect_fail else ""
            print(f"{chk.identity}  ({chk.suite}){tag}  {chk.summary}")
        print(f"total: {len(checks)} identities")
        return 0
    bounds = {
        "m_max": args.m_max,
        "sym_n": args.sym_max,
        "char_m": args.char_m_max,
        "multi_m": args.multi_m_max,
        "rs_max": args.rs_max,
        "binom_m": args.binom_max,
        "cong_m": args.cong_m_max,
        "cong_r": args.r_max,
        "central_max": args.n_max,
        "catalan_max": args.n_max,
        "kraw_q": args.q_max,
        "cong_n": args.cong_max,
        "parity_n": args.parity_max,
        "motzkin_n": args.motzkin_max,
    }
    if args.identity:
        checks = [vf.check_by_identity(args.identity)]
    else:
        checks = vf.checks_for(args.suite)
    out = sys.stdout
    close = False
    if args.out and args.out != "-":
        out = open(args.out, "w")
        close = True
    summary_stream = sys.stderr if out is sys.stdout else sys.stdout
    try:
        results = vf.run_checks(checks, bounds, threads=args.threads, sink=out)
    finally:
        if close:
            out.close()
    failures = 0
    for r in results:
        verdict = "ok" if r.ok else "FAIL"
        expectation = " (expected-fail)" if r.expect_fail else ""
        line = f"{r.identity}: {r.points} points, {r.fails} fail, {r.skips} skipped{expectation} -> {verdict}"
        if not r.ok:
            failures += 1
            if r.first_fail is not None:
                line += f" first-fail={r.first_fail}"
        print(line, file=summary_stream)
    code = vf.exit_code(results)
    print(f"suite {args.suite}: {'OK' if code == 0 else 'FAIL'}", file=summary_stream)
    return code


_BENCH = {
    ("kraw", "direct-vs-thm1"): (
        "m",
        lambda m: kw._kraw_raw.__wrapped__(2 * m, m, m - m % 2),
        lambda m: red.halve_order(m, m, (m - m % 2) // 2),
    ),
    ("catalan", "direct-vs-touchard"): (
        "n",
        lambda n: cen.CACHE.catalan(n),
        lambda n: cat.catalan(n, "touchard"),
    ),
    ("binom", "direct-vs-pochhammer"): (
        "m",
        lambda m: kw.binomial(2 * m, 2 * (m // 2)),
        lambda m: pochhammer_binomial(m, m // 2),
    ),
}


def _cmd_bench(args) -> int:
    key = (args.quantity, args.pair)
    if key not in _BENCH:
        known = ", ".join(f"{q} {p}" for q, p in _BENCH)
        raise ParameterError(f"unknown bench pair; known: {known}")
    name, route_a, route_b = _BENCH[key]
    top = args.max
    if top < 1:
        raise ParameterError("the range bound must be >= 1")
    points = sorted({max(1, top // 8), max(1, top // 4), max(1, top // 2), top})
    print(f"{name},route_a_seconds,route_b_seconds")
    for value in points:
        t0 = time.perf_counter()
        a = route_a(value)
        ta = time.perf_counter() - t0
        t0 = time.perf_counter()
        b = route_b(value)
        tb = time.perf_counter() - t0
        if a != b:
            raise InvariantViolationError(f"bench routes disagree at {name}={value}")
        print(f"{value},{ta:.6f},{tb:.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="krawkit",
        description="exact Krawtchouk / binomial / Catalan identities, cross-validated",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one quantity")
    q = p_eval.add_subparsers(dest="quantity", required=True)

    p_kraw = q.add_parser("kraw", help="Krawtchouk value K_p^n(x)")
    p_kraw.add_argument("--n", type=int, required=True)
    p_kraw.add_argument("--p", type=int, required=True)
    p_kraw.add_argument("--x", type=int, required=True)
    p_kraw.add_argument("--route", default="direct",
                        choices=("direct", "halving", "multi", "character"))
    p_kraw.add_argument("--explain", action="store_true",
                        help="print the reduction terms (multi route)")
    p_kraw.set_defaults(fn=_eval_kraw)

    p_binom = q.add_parser("binom", help="generalized binomial C(x, k)")
    p_binom.add_argument("--x", type=int, required=True)
    p_binom.add_argument("--k", type=int, required=True)
    p_binom.add_argument("--route", default="direct", choices=("direct", "pochhammer"))
    p_binom.set_defaults(fn=_eval_binom)

    p_central = q.add_parser("central", help="central binomial c_m")
    p_central.add_argument("--m", type=int, required=True)
    p_central.add_argument("--route", default="direct", choices=_CENTRAL_ROUTES)
    p_central.set_defaults(fn=_eval_central)

    p_catalan = q.add_parser("catalan", help="Catalan number C_n")
    p_catalan.add_argument("--n", type=int, required=True)
    p_catalan.add_argument("--route", default="direct", choices=cat.ROUTES)
    p_catalan.set_defaults(fn=_eval_catalan)

    p_motzkin = q.add_parser("motzkin", help="Motzkin number M_n")
    p_motzkin.add_argument("--n", type=int, required=True)
    p_motzkin.set_defaults(fn=_eval_motzkin)

    p_table = sub.add_parser("table", help="emit a Krawtchouk value grid")
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--format", default="csv", choices=("csv", "json"))
    p_table.add_argument("--cap", type=int, default=256, help="largest allowed order")
    p_table.set_defaults(fn=_cmd_table)

    p_verify = sub.add_parser("verify", help="run identity sweeps")
    p_verify.add_argument("--suite", default="all", help="suite name or 'all'")
    p_verify.add_argument("--identity", help="run a single registered identity")
    p_verify.add_argument("--out", help="jsonl path ('-' for stdout)")
    p_verify.add_argument("--list", action="store_true", help="list identities and exit")
    p_verify.add_argument("--threads", type=int, default=None)
    p_verify.add_argument("--m-max", dest="m_max", type=int, default=None)
    p_verify.add_argument("--sym-max", dest="sym_max", type=int, default=None)
    p_verify.add_argument("--char-m-max", dest="char_m_max", type=int, default=None)
    p_verify.add_argument("--multi-m-max", dest="multi_m_max", type=int, default=None)
    p_verify.add_argument("--rs-max", dest="rs_max", type=int, default=None)
    p_verify.add_argument("--binom-max", dest="binom_max", type=int, default=None)
    p_verify.add_argument("--cong-m-max", dest="cong_m_max", type=int, default=None)
    p_verify.add_argument("--r-max", dest="r_max", type=int, default=None)
    p_verify.add_argument("--n-max", dest="n_max", type=int, default=None)
    p_verify.add_argument("--q-max", dest="q_max", type=int, default=None)
    p_verify.add_argument("--cong-max", dest="cong_max", type=int, default=None)
    p_verify.add_argument("--parity-max", dest="parity_max", type=int, default=None)
    p_verify.add_argument("--motzkin-max", dest="motzkin_max", type=int, default=None)
    p_verify.set_defaults(fn=_cmd_verify)

    p_bench = sub.add_parser("bench", help="time two routes to the same quantity")
    p_bench.add_argument("quantity", choices=sorted({q for q, _ in _BENCH}))
    p_bench.add_argument("pair", help="route pair, e.g. direct-vs-thm1")
    p_bench.add_argument("--m", "--n", dest="max", type=int, required=True,
                         help="largest parameter value on the ramp")
    p_bench.set_defaults(fn=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolationError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
