"""Command-line front end: ``hyperforest <subcommand> ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 a resource
cap was exceeded.  Exact numbers are printed as decimal strings (``p/q`` for
non-integers), in JSON too; only ``asym`` emits floats.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import asymptotics as asym
from .egf import tree_series, unrooted_series
from .errors import ResourceLimitError
from .forest_counts import rooted_counts, unrooted_counts
from .hypergraph import DEFAULT_MAX_EDGES, Hypergraph
from .verification import grassmann_checks, scalar_product_checks, oeis_checks, oracle_checks
from .weights import WeightSpec, format_rational, parse_rational

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _weights(text):
    try:
        return WeightSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _emit(out, fmt, header, rows, obj, scalar=None):
    """Write ``rows`` as a table or CSV, or ``obj`` as JSON; ``scalar`` short-circuits the table."""
    if fmt == "json":
        out.write(json.dumps(obj, ensure_ascii=False, separators=(",", ":")) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        out.write(buf.getvalue())
    elif scalar is not None:
        out.write(f"{scalar}\n")
    else:
        widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
        for row in [header, *rows]:
            out.write("  ".join(str(x).rjust(wd) for x, wd in zip(row, widths)).rstrip() + "\n")


def _table_cmd(args, out, kind):
    n = args.n
    if kind == "rooted":
        table, sym, idx = rooted_counts(n, args.weights), "t", args.r
    else:
        table, sym, idx = unrooted_counts(n, args.weights), "u", args.p
    label = "r" if kind == "rooted" else "p"
    if idx is not None:
        if not 0 <= idx <= n:
            raise UsageError(f"--{label} must lie in 0..{n}")
        val = format_rational(table[idx])
        _emit(out, args.format, [label, sym], [[idx, val]], {"n": n, label: idx, sym: val}, scalar=val)
    else:
        vals = [format_rational(v) for v in table]
        _emit(out, args.format, [label, sym], [[i, v] for i, v in enumerate(vals)], {"n": n, sym: vals})
    return EXIT_OK


def cmd_total(args, out):
    kind = "rooted" if args.rooted else "unrooted"
    table = rooted_counts(args.n, args.weights) if args.rooted else unrooted_counts(args.n, args.weights)
    val = format_rational(table.total)
    _emit(out, args.format, ["n", "kind", "total"], [[args.n, kind, val]],
          {"n": args.n, "kind": kind, "total": val}, scalar=val)
    return EXIT_OK


def cmd_egf(args, out):
    series = (tree_series if args.which == "rooted" else unrooted_series)(args.weights, args.order)
    vals = [format_rational(c) for c in series.egf_coeffs()]
    _emit(out, args.format, ["n", "coefficient"], [[i, v] for i, v in enumerate(vals)],
          {"which": args.which, "order": args.order, "coefficients": vals})
    return EXIT_OK


def _report(out, fmt, title, checks):
    failures = [c for c in checks if not c.ok]
    if fmt == "json":
        out.write(json.dumps({
            "check": title,
            "passed": not failures,
            "results": [{"name": c.name, "ok": c.ok} for c in checks],
            "counterexample": None if not failures else {"name": failures[0].name, "detail": failures[0].detail},
        }, ensure_ascii=False, separators=(",", ":")) + "\n")
    elif fmt == "csv":
        _emit(out, "csv", ["name", "ok"], [[c.name, "pass" if c.ok else "fail"] for c in checks], None)
    else:
        for c in checks:
            out.write(f"{'PASS' if c.ok else 'FAIL'}  {c.name}\n")
        out.write(f"{len(checks) - len(failures)}/{len(checks)} passed\n")
    if failures:
        sys.stderr.write(f"counterexample: {failures[0].name}: {failures[0].detail}\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify_grassmann(args, out):
    lam = None if args.lam == "symbolic" else parse_rational(args.lam)
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            G = Hypergraph.from_json(json.load(fh))
        complete_w = None
    else:
        if args.n is None or args.weights is None:
            raise UsageError("verify grassmann needs --n and --weights, or --input FILE")
        G = Hypergraph.complete(args.n, args.weights)
        complete_w = args.weights
    checks = grassmann_checks(G, complete_w, lam=lam, max_edges=args.max_edges)
    checks += scalar_product_checks(seed=args.seed, instances=args.instances, max_n=max(1, min(G.n, 5)))
    return _report(out, args.format, "grassmann", checks)


def cmd_verify_oracle(args, out):
    return _report(out, args.format, "oracle", oracle_checks(args.n, args.weights, args.max_edges))


def cmd_verify_oeis(args, out):
    try:
        checks = oeis_checks(args.id, args.terms)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _report(out, args.format, "oeis", checks)


def _ladder(n, p, k, rungs):
    ns = []
    cur = n
    for _ in range(rungs):
        while (cur - p) % (k - 1):
            cur += 1
        ns.append(cur)
        cur *= 2
    return ns


def cmd_asym(args, out):
    n, p, k = args.n, args.p, args.k
    if k < 2 or not 1 <= p <= n:
        raise UsageError("need --k >= 2 and 1 <= --p <= --n")
    if not args.ladder and (n - p) % (k - 1):
        raise UsageError(f"(k-1)={k - 1} must divide n-p={n - p}")
    ns = _ladder(n, p, k, args.rungs) if args.ladder else [n]
    header = ["n", "log_exact", "log_approx", "rel_error"]
    rows, records = [], []
    for m in ns:
        exact = unrooted_counts(m, WeightSpec.uniform(k))[p]
        le = asym.log_abs(exact)
        la = asym.log_unrooted_uniform_asymptotic(m, p, k)
        err = math.expm1(la - le)
        rows.append([m, f"{le:.12g}", f"{la:.12g}", f"{err:.6e}"])
        records.append({"n": m, "log_exact": le, "log_approx": la, "rel_error": err})
    _emit(out, args.format, header, rows, {"p": p, "k": k, "rows": records})
    return EXIT_OK


def build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["table", "csv", "json"], default="table")

    parser = argparse.ArgumentParser(
        prog="hyperforest",
        description="Exact counts of spanning hyperforests on complete hypergraphs.",
        epilog="weight SPEC: uniform:K | ones | map:2=1,3=1/2",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rooted", parents=[fmt], help="rooted forest weights t(n,r)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--weights", type=_weights, required=True)
    p.set_defaults(func=lambda a, o: _table_cmd(a, o, "rooted"))

    p = sub.add_parser("unrooted", parents=[fmt], help="unrooted forest weights u(n,p)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--weights", type=_weights, required=True)
    p.set_defaults(func=lambda a, o: _table_cmd(a, o, "unrooted"))

    p = sub.add_parser("total", parents=[fmt], help="E_n (rooted) or F_n (unrooted) at weight 1 per tree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weights", type=_weights, required=True)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--rooted", action="store_true")
    kind.add_argument("--unrooted", action="store_true")
    p.set_defaults(func=cmd_total)

    p = sub.add_parser("egf", parents=[fmt], help="n![z^n] of the rooted or unrooted tree EGF")
    p.add_argument("--which", choices=["rooted", "unrooted"], required=True)
    p.add_argument("--order", type=_positive, required=True)
    p.add_argument("--weights", type=_weights, required=True)
    p.set_defaults(func=cmd_egf)

    p = sub.add_parser("verify", help="cross-check the independent computations")
    vsub = p.add_subparsers(dest="target", required=True)

    v = vsub.add_parser("grassmann", parents=[fmt], help="Grassmann engine vs enumeration vs closed form")
    v.add_argument("--n", type=int)
    v.add_argument("--weights", type=_weights)
    v.add_argument("--input", metavar="FILE", help="hypergraph JSON instead of a complete hypergraph")
    v.add_argument("--lambda", dest="lam", default="symbolic", help="'symbolic' or an exact rational (write --lambda=-1/2 for negatives)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--instances", type=int, default=10, help="random scalar-product identity instances")
    v.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    v.set_defaults(func=cmd_verify_grassmann)

    v = vsub.add_parser("oracle", parents=[fmt], help="closed forms vs EGF vs enumeration")
    v.add_argument("--n", type=_positive, required=True)
    v.add_argument("--weights", type=_weights, required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    v.set_defaults(func=cmd_verify_oracle)

    v = vsub.add_parser("oeis", parents=[fmt], help="compare a prefix with an OEIS entry")
    v.add_argument("--id", required=True)
    v.add_argument("--terms", type=_positive, default=6)
    v.set_defaults(func=cmd_verify_oeis)

    p = sub.add_parser("asym", parents=[fmt], help="exact u(n,p) on k-uniform vs its large-n form")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ladder", action="store_true", help="also n doubled repeatedly")
    p.add_argument("--rungs", type=_positive, default=4)
    p.set_defaults(func=cmd_asym)
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "n", None) is not None and args.n < 0:
        parser.print_usage(sys.stderr)
        sys.stderr.write("error: --n must be >= 0\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ResourceLimitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_RESOURCE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
