"""Command-line front end.

Subcommands: inspect, construct, bh, hunt, census, scan, verify, bench.
Every command supports --format table|json|csv where it makes sense; json
output is JSON-lines.  Exit codes: 0 success, 2 invalid input, 3 when a
scan finds violations (so pipelines notice), 1 on internal mismatch.

Thread count comes from --threads, else NSG_THREADS, else the available
parallelism.  Labels on the command line use the surface syntax
"<14,22,23>_56"; a JSON object {"generators": [...], "truncation": t}
is accepted anywhere a semigroup is expected.  In CSV output the label's
generators are ';'-separated so cells stay atomic.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import bench as bench_mod
from . import explorer
from .catalog import TABLE1_COLUMNS, verify_table1
from .constructions import (
    construct_bh,
    construct_consecutive,
    construct_pair,
    construct_translated,
    explicit_family,
    verify_construction,
)
from .errors import NsgError
from .semigroup import from_generators, parse_semigroup_input
from .sumsets import (
    IntSet,
    geometric_bh_family,
    greedy_bh,
    h_fold_sumset,
    is_bh,
    pairwise_distinct_union,
)
from .wilf import CSV_HEADER, wilf_report

HUNT_CSV_HEADER = "S,m,P,L,g,W0,W"
MINIMA_CSV_HEADER = "m,n,min_w0_minus_rho,count,label,genus,cond1,cond2,cond3,all_flagged"


def _int_set(text: str) -> IntSet:
    try:
        return IntSet(tuple(int(p) for p in text.split(",") if p.strip() != ""))
    except ValueError as e:
        raise NsgError(str(e)) from None


def _report_lines(report, fmt):
    if fmt == "json":
        return [report.to_json()]
    if fmt == "csv":
        return [CSV_HEADER, report.to_csv_row()]
    obj = json.loads(report.to_json())
    width = max(len(k) for k in obj)
    return [f"{k:<{width}}  {v}" for k, v in obj.items()]


def _hunt_csv_row(rec):
    r = rec.report
    return ",".join(str(v) for v in (
        r.csv_label, r.m, r.p_total, r.l_count, r.genus, r.w0, r.w))


def _emit(lines, out):
    for line in lines:
        print(line, file=out)


def cmd_inspect(args, out):
    S = from_generators(parse_semigroup_input(args.semigroup))
    _emit(_report_lines(wilf_report(S), args.format), out)
    return 0


def cmd_construct(args, out):
    if args.recipe == "pair":
        result = construct_pair(args.m, args.a, args.b)
    elif args.recipe == "consecutive":
        result = construct_consecutive(args.m, args.k)
    elif args.recipe == "bh":
        result = construct_bh(args.m, _int_set(args.set))
    elif args.recipe == "translated":
        result = construct_translated(_int_set(args.base), args.k, args.m)
    else:
        result = explicit_family(args.n, args.k)
    verification = verify_construction(result)
    if args.format == "json":
        _emit([result.to_json(), verification.to_json()], out)
    elif args.format == "csv":
        _emit([CSV_HEADER, result.computed.to_csv_row()], out)
    else:
        _emit([f"recipe     {result.recipe}",
               f"params     {result.params}",
               f"semigroup  {result.computed.label}"], out)
        _emit(_report_lines(result.computed, "table"), out)
        _emit(["checks:"], out)
        for item in verification.checks:
            mark = "ok " if item.ok else "FAIL"
            _emit([f"  [{mark}] {item.name}: expected {item.expected}, got {item.actual}"], out)
    return 0 if verification.ok else 1


def cmd_bh(args, out):
    if args.action == "check":
        A = _int_set(args.set)
        if args.mod:
            result = is_bh(IntSet(A.elements, args.mod), args.h)
        else:
            result = is_bh(A, args.h)
        _emit([json.dumps(result)], out)
    elif args.action == "sumset":
        A = _int_set(args.set)
        if args.mod:
            A = IntSet(A.elements, args.mod)
        _emit([json.dumps(list(h_fold_sumset(A, args.h).elements))], out)
    elif args.action == "distinct":
        _emit([json.dumps(pairwise_distinct_union(_int_set(args.set), args.h, args.mod))], out)
    elif args.action == "greedy":
        _emit([json.dumps(list(greedy_bh(args.h, args.size).elements))], out)
    else:
        A = geometric_bh_family(args.h, args.count, args.zero_based)
        _emit([json.dumps(list(A.elements))], out)
    return 0


def _run_kwargs(args):
    kw = {"threads": args.threads}
    if getattr(args, "backend", None):
        from ._kernel import get_kernel

        kw["kernel"] = get_kernel(args.backend)
    if getattr(args, "checkpoint", None):
        kw["checkpoint_path"] = args.checkpoint
        kw["checkpoint_interval"] = args.checkpoint_interval
    if getattr(args, "resume", None):
        kw["resume_path"] = args.resume
    return kw


def cmd_hunt(args, out):
    m_range = None
    if args.m_min is not None or args.m_max is not None:
        m_range = (args.m_min or 0, args.m_max or (1 << 30))
    records = explorer.hunt_near_misses(args.g_max, q=args.q, m_range=m_range,
                                        **_run_kwargs(args))
    if args.format == "json":
        _emit([rec.to_json() for rec in records], out)
    elif args.format == "csv":
        _emit([HUNT_CSV_HEADER] + [_hunt_csv_row(r) for r in records], out)
    else:
        _emit([f"near-misses with genus <= {args.g_max}: {len(records)}"], out)
        for rec in records:
            r = rec.report
            _emit([f"  {rec.label}  m={r.m} P={r.p_total} L={r.l_count} "
                   f"g={r.genus} W0={r.w0} W={r.w}"], out)
    return 0


def cmd_census(args, out):
    counts = explorer.census(args.g_max, **_run_kwargs(args))
    if args.format == "json":
        _emit([json.dumps({"genus": g, "count": n}) for g, n in enumerate(counts)], out)
    else:
        _emit(["genus,count"] + [f"{g},{n}" for g, n in enumerate(counts)], out)
    return 0


def cmd_scan(args, out):
    if args.what == "bound":
        records = explorer.scan_conjecture_bound(args.g_max, **_run_kwargs(args))
        if args.format == "json":
            _emit([rec.to_json() for rec in records], out)
        elif args.format == "csv":
            _emit([HUNT_CSV_HEADER] + [_hunt_csv_row(r) for r in records], out)
        else:
            _emit([f"violations of W0 >= -C(n,3) with genus <= {args.g_max}: "
                   f"{len(records)}"], out)
            for rec in records:
                _emit([f"  {rec.label}  {rec.to_json()}"], out)
        return 3 if records else 0
    entries = explorer.scan_conjecture_minima(args.g_max, m_filter=args.m,
                                              threads=args.threads)
    if args.format == "json":
        _emit([e.to_json() for e in entries], out)
    else:
        rows = [MINIMA_CSV_HEADER]
        for e in entries:
            rows.append(",".join(str(v) for v in (
                e.m, e.n, e.min_value, e.count, e.label.replace(",", ";"),
                e.genus, *e.flags, e.all_flagged)))
        _emit(rows, out)
    return 0


def cmd_verify(args, out):
    rows, ok = verify_table1()
    if args.format == "json":
        _emit([json.dumps(r) for r in rows], out)
    else:
        _emit([",".join(TABLE1_COLUMNS)], out)
        for r in rows:
            label = r["label"].replace(",", ";")
            _emit([",".join([label] + [str(v) for v in r["computed"]])], out)
    if not ok:
        print("table1 verification FAILED", file=sys.stderr)
        return 1
    if args.format == "table":
        _emit([f"all {len(rows)} rows match"], out)
    return 0


def cmd_bench(args, out):
    results = bench_mod.run_benchmark(args.g_max, args.threads)
    for r in results:
        line = (f"{r['backend']:3} g_max={r['g_max']} threads={r['threads']} "
                f"nodes={r['nodes']} time={r['seconds']:.3f}s "
                f"rate={r['nodes_per_sec']:,.0f}/s")
        if "speedup_vs_py" in r:
            line += f" speedup={r['speedup_vs_py']:.1f}x"
        _emit([line], out)
    return 0


def _add_format(p, default="table", choices=("table", "json", "csv")):
    p.add_argument("--format", choices=choices, default=default)


def _add_run_flags(p, checkpointable=True):
    p.add_argument("--g-max", type=int, required=True)
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: NSG_THREADS or all cores)")
    p.add_argument("--backend", choices=("py", "cy"), default=None)
    if checkpointable:
        p.add_argument("--checkpoint", metavar="FILE")
        p.add_argument("--checkpoint-interval", type=float, default=300.0)
        p.add_argument("--resume", metavar="FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nsg",
        description="Numerical semigroups: Wilf invariants, near-miss "
                    "constructions, and genus-tree exploration.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", help="Wilf report of one semigroup")
    p.add_argument("semigroup", help='label like "<14,22,23>_56" or JSON')
    _add_format(p)
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("construct", help="build a near-miss family member")
    recipes = p.add_subparsers(dest="recipe", required=True)
    pr = recipes.add_parser("pair")
    pr.add_argument("--m", type=int, required=True)
    pr.add_argument("--a", type=int, required=True)
    pr.add_argument("--b", type=int, required=True)
    pc = recipes.add_parser("consecutive")
    pc.add_argument("--m", type=int, required=True)
    pc.add_argument("--k", type=int, required=True)
    pb = recipes.add_parser("bh")
    pb.add_argument("--m", type=int, required=True)
    pb.add_argument("--set", required=True, help="comma-separated generators above m")
    pt = recipes.add_parser("translated")
    pt.add_argument("--base", required=True, help="B3 set containing 0, comma-separated")
    pt.add_argument("--k", type=int, required=True)
    pt.add_argument("--m", type=int, required=True)
    pf = recipes.add_parser("family")
    pf.add_argument("--n", type=int, required=True)
    pf.add_argument("--k", type=int, required=True)
    for rp in (pr, pc, pb, pt, pf):
        _add_format(rp)
        rp.set_defaults(func=cmd_construct)

    p = sub.add_parser("bh", help="sumset and B_h utilities")
    actions = p.add_subparsers(dest="action", required=True)
    ck = actions.add_parser("check")
    ck.add_argument("--set", required=True)
    ck.add_argument("--h", type=int, required=True)
    ck.add_argument("--mod", type=int, default=None)
    ss = actions.add_parser("sumset")
    ss.add_argument("--set", required=True)
    ss.add_argument("--h", type=int, required=True)
    ss.add_argument("--mod", type=int, default=None)
    di = actions.add_parser("distinct")
    di.add_argument("--set", required=True)
    di.add_argument("--h", type=int, required=True)
    di.add_argument("--mod", type=int, required=True)
    gr = actions.add_parser("greedy")
    gr.add_argument("--h", type=int, required=True)
    gr.add_argument("--size", type=int, required=True)
    fa = actions.add_parser("family")
    fa.add_argument("--h", type=int, required=True)
    fa.add_argument("--count", type=int, required=True)
    fa.add_argument("--zero-based", action="store_true")
    for ap in (ck, ss, di, gr, fa):
        ap.set_defaults(func=cmd_bh)

    p = sub.add_parser("hunt", help="find all near-misses up to a genus")
    _add_run_flags(p)
    p.add_argument("--q", type=int, default=None, help="restrict to one q value")
    p.add_argument("--m-min", type=int, default=None)
    p.add_argument("--m-max", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("census", help="count semigroups per genus")
    _add_run_flags(p)
    _add_format(p, default="csv", choices=("csv", "json"))
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("scan", help="conjecture evidence scans over q = 4")
    what = p.add_subparsers(dest="what", required=True)
    sb = what.add_parser("bound", help="violations of W0 >= -C(n,3)")
    _add_run_flags(sb)
    _add_format(sb)
    sm = what.add_parser("minima", help="minima of W0 - rho per (m, n)")
    sm.add_argument("--g-max", type=int, required=True)
    sm.add_argument("--threads", type=int, default=None)
    sm.add_argument("--m", type=int, default=None, help="single multiplicity")
    _add_format(sm, default="csv", choices=("csv", "json"))
    for wp in (sb, sm):
        wp.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="recompute published reference values")
    p.add_argument("what", choices=("table1",))
    _add_format(p, default="table", choices=("table", "json"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="compare the enumeration kernels")
    p.add_argument("--g-max", type=int, default=22)
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args, sys.stdout)
    except NsgError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OverflowError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
