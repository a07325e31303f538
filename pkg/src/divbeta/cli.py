"""Command-line interface: ``divbeta {enumerate,compute,eisenstein,reproduce}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .betafamily import enumerate_j, is_order_p
from .closedform import theorem_form
from .conditions import check_all
from .level1 import eisenstein_rep_mod_p, format_e4e6, to_e4e6
from .level2 import CACHE_ENV, eisenstein_level2
from .reproduce import ITEMS, run_items, select
from .search import NoSolution, PostconditionFailure, SearchProblem, solve

SCHEMA = 1


def _emit(record: dict, fmt: str, table_lines):
    if fmt == "json":
        print(json.dumps({"schema": SCHEMA, **record}, indent=2, default=str))
    else:
        for line in table_lines():
            print(line)


def _terms(f):
    return [{"delta_exp": a, "e4_exp": b, "coeff": c} for a, b, c in f.terms()]


def cmd_enumerate(args) -> int:
    js = enumerate_j(args.prime, args.i)
    _emit({"prime": args.prime, "i": args.i, "j": js}, args.format, lambda: map(str, js))
    return 0


def cmd_compute(args) -> int:
    p, i, j = args.prime, args.i, args.j
    if p != 5 and args.method != "theorem":
        print("error: the coefficient search is only available at p = 5", file=sys.stderr)
        return 2
    if not args.allow_nonfamily and not is_order_p(p, i, j):
        print(f"error: ({i}, {j}) is not an order-{p} family index (use --allow-nonfamily)", file=sys.stderr)
        return 2
    t0 = time.perf_counter()
    forms = {}
    try:
        if args.method in ("theorem", "both"):
            forms["theorem"] = theorem_form(p, i, j, args.allow_nonfamily, args.conjecture)
        if args.method in ("search", "both"):
            forms["search"] = solve(SearchProblem(i, j, args.allow_nonfamily)).form
    except (ValueError, NoSolution, PostconditionFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    f = forms["theorem"] if "theorem" in forms else forms["search"]
    report = check_all(f, p, i, j)
    record = {
        "prime": p,
        "i": i,
        "j": j,
        "weight": f.weight,
        "method": args.method,
        "basis_terms": _terms(f),
        "conditions": report.to_dict(),
    }
    if args.method == "both":
        record["search_terms"] = _terms(forms["search"])
        record["agree_mod_p"] = forms["theorem"].reduce(p) == forms["search"].reduce(p)
    record["timing"] = round(time.perf_counter() - t0, 4)

    def table():
        yield f"f_{{{i}/{j}}} at p={p}, weight {f.weight}:"
        yield f"  {f}"
        if "agree_mod_p" in record:
            yield f"  search: {forms['search']}"
            yield f"  agree mod {p}: {record['agree_mod_p']}"
        yield f"  C1={report.c1} C2={report.c2} C3={report.c3} C4@2={report.c4_at_2}"
        yield "  PASS" if report.passed else f"  FAIL at {report.failed_stage}"

    _emit(record, args.format, table)
    ok = report.passed and record.get("agree_mod_p", True)
    return 0 if ok else 1


def cmd_eisenstein(args) -> int:
    p = args.prime
    rep = eisenstein_rep_mod_p(p)
    level1 = format_e4e6(to_e4e6(rep.inner, p), rep.e6_parity)
    record = {"prime": p, "weight": p - 1, "level1": level1}
    E = None
    if args.level2:
        E = eisenstein_level2(p, args.cache_dir)
        record["level2"] = {
            "delta_parity": E.delta_parity,
            "terms": [{"mu_exp": a, "eps_exp": b, "coeff": c} for a, b, c in E.terms()],
        }

    def table():
        yield f"E_{p - 1} = {level1}  (mod {p})"
        if E is not None:
            yield f"level 2: {E}"

    _emit(record, args.format, table)
    return 0


def cmd_reproduce(args) -> int:
    if args.list:
        for name, (_, tier) in ITEMS.items():
            print(f"{name:18s} {tier}")
        return 0
    try:
        names = select(args.items, args.tier)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    results = run_items(names, args.jobs)
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        print(f"{status}  {res.item:18s} {len(res.checks):4d} checks  {res.seconds:7.2f}s")
        if res.error:
            print(f"      error: {res.error}")
        for label, ok in res.checks:
            if not ok:
                print(f"      failed: {label}")
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="divbeta", description=__doc__)
    parser.add_argument("--cache-dir", help=f"Eisenstein cache directory (default: ${CACHE_ENV} or ~/.cache/divbeta)")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("json", "table"), default="table")

    p = sub.add_parser("enumerate", help="list the j with (i, j) of order p")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("compute", help="compute f_{i/j} and check its conditions")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--method", choices=("theorem", "search", "both"), default="theorem")
    p.add_argument("--allow-nonfamily", action="store_true")
    p.add_argument("--conjecture", action="store_true", help="allow pure Delta powers at any prime")
    fmt(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("eisenstein", help="E_{p-1} mod p at level 1 and level 2")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--level2", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_eisenstein)

    p = sub.add_parser("reproduce", help="run golden reproduction checks")
    p.add_argument("items", nargs="*")
    p.add_argument("--tier", choices=("default", "long"), default="default")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.cache_dir:
        os.environ[CACHE_ENV] = args.cache_dir
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
