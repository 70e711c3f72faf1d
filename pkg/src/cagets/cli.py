"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 requested data not
available, 3 internal inconsistency (a construction failed its own check).
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import bounds, constructions, registry
from .errors import (InternalInconsistencyError, MalformedInputError, NotAvailableError,
                     ParityError, PreconditionError)
from .graph import format_graph, graph_to_dot
from .tanner import Category, check_degree_profile, classify, parse_tanner, tanner_to_dot

EXIT_OK, EXIT_USAGE, EXIT_UNAVAILABLE, EXIT_INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _category(text: str) -> Category:
    try:
        return Category(text.upper())
    except ValueError:
        raise argparse.ArgumentTypeError("class must be lets, etsl or nets") from None


def _profile(values) -> str:
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    return " ".join(f"{d}x{c}" for d, c in sorted(counts.items()))


# -- subcommands -------------------------------------------------------------

def run_cage(args) -> int:
    rec = registry.cage_record(args.r, args.g)
    if args.info:
        size = "unknown" if rec.n is None else str(rec.n)
        print(f"n({args.r};{args.g}) {size}")
        if args.g >= 3 and args.r >= 2:
            print(f"moore bound {registry.moore_bound(args.r, args.g)}")
        print(f"availability {rec.availability.value}")
        return EXIT_OK
    g = registry.get_cage(args.r, args.g)
    if args.format == "dot":
        sys.stdout.write(graph_to_dot(g, f"cage_{args.r}_{args.g}"))
    else:
        sys.stdout.write(format_graph(g, [f"({args.r};{args.g})-cage"]))
    return EXIT_OK


def _build(cat: Category, dv: int, g: int, b: int, rule: str | None):
    if not any(bounds.class_exists(dv, a, b) for a in (1, 2)):
        raise ParityError(f"no (a,{b}) trapping set exists for dv={dv}")
    if rule:
        return constructions.build_rule(rule, dv, g, b)
    return constructions.build_witness(cat, dv, g, b)


def run_construct(args) -> int:
    w = _build(args.cls, args.dv, args.g, args.b, args.rule)
    text = w.to_text()
    if args.out:
        Path(args.out).write_text(text)
        print(w.certificate)
    else:
        sys.stdout.write(text)
        print(w.certificate, file=sys.stderr)
    if args.dot:
        Path(args.dot).write_text(tanner_to_dot(w.graph))
    return EXIT_OK


def run_classify(args) -> int:
    text = sys.stdin.read() if args.path == "-" else Path(args.path).read_text()
    t = parse_tanner(text)
    cl = classify(t)
    print(cl)
    print(f"variable degrees {_profile(cl.dv_profile)}")
    print(f"check degrees {_profile(check_degree_profile(t))}")
    return EXIT_OK


def run_bounds(args) -> int:
    cat, dv, g, b = args.cls, args.dv, args.g, args.b
    lo = bounds.lower_bound(cat, dv, g, b)
    raw = "" if lo.raw == lo.value else f" (raw {lo.raw})"
    print(f"lower {lo}{raw} via {lo.provenance}" + (f" [{lo.note}]" if lo.note else ""))
    if cat is Category.ETSL and dv % 2 and b == dv - 1:
        print(f"improved lower {bounds.etsl_improved_lower(dv, g)} via leaf-improvement")
    for r in bounds.upper_rules(cat, dv, g, b):
        print(f"upper {r} via {r.provenance}" + (f" [{r.note}]" if r.note else ""))
    best = bounds.best_upper(cat, dv, g, b)
    print(f"best upper {best}" + (f" [{best.note}]" if best.note else ""))
    ex = bounds.exact_value(cat, dv, g, b)
    print(f"exact {'--' if ex is None else ex}")
    return EXIT_OK


def _verify_cell(job):
    cat, dv, g, b, rule, value = job
    try:
        w = constructions.build_rule(rule, dv, g, b)
    except NotAvailableError:
        return "n/a"
    except Exception as exc:  # reported per cell, never hides the table
        return f"FAIL ({type(exc).__name__}: {exc})"
    return "PASS" if w.claimed_a == value and w.claimed_category is cat else "FAIL"


def run_table(args) -> int:
    rows = bounds.table(args.cls, args.dv, args.b, bounds.parse_g_range(args.g))
    if args.format == "csv":
        sys.stdout.write(bounds.format_csv(rows))
    else:
        sys.stdout.write(bounds.format_text(rows))
    if not args.verify:
        return EXIT_OK
    jobs = [(args.cls, args.dv, r.g, args.b, r.provenance, r.upper)
            for r in rows if r.upper is not None]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            marks = list(pool.map(_verify_cell, jobs))
    else:
        marks = [_verify_cell(j) for j in jobs]
    failed = False
    for job, mark in zip(jobs, marks):
        print(f"verify g={job[2]} upper={job[5]} via {job[4]}: {mark}")
        failed |= mark.startswith("FAIL")
    return EXIT_INTERNAL if failed else EXIT_OK


def run_validate(args) -> int:
    if args.r is not None and args.g is not None:
        cells = [(args.r, args.g)]
    else:
        cells = [(r, g) for r in range(3, 8) for g in range(3, 13)
                 if registry.cage_record(r, g).materializable]
    bad = 0
    for r, g in cells:
        rec = registry.cage_record(r, g)
        report = registry.validate_cage(registry.get_cage(r, g), r, g, rec.n)
        print(f"({r};{g}) n={rec.n} {rec.availability.value}: {'PASS' if report.ok else 'FAIL'} ({report})")
        bad += not report.ok
    if args.r is None:
        for rec in registry.good_graph_records():
            if rec.materializable:
                registry.get_good_graph(rec.r, rec.s, rec.g_cage)
                print(f"({rec.r},{rec.s};{rec.g_cage}) n'={rec.n_prime} t={rec.t}: PASS")
    return EXIT_INTERNAL if bad else EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cagets", description="Cages, trapping-set constructions and bounds.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("cage", help="print a cage or its size")
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--g", type=int, required=True)
    c.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")
    c.add_argument("--info", action="store_true", help="print size and availability only")
    c.set_defaults(func=run_cage)

    def cell_args(sp, need_b=True):
        sp.add_argument("--class", dest="cls", type=_category, required=True)
        sp.add_argument("--dv", type=int, required=True)
        sp.add_argument("--b", type=int, required=need_b, default=0)

    k = sub.add_parser("construct", help="build a trapping-set witness")
    cell_args(k)
    k.add_argument("--g", type=int, required=True)
    k.add_argument("--rule", help="force a construction id (default: smallest available)")
    k.add_argument("--out", help="write the Tanner edge list here instead of stdout")
    k.add_argument("--dot", help="also write DOT to this path")
    k.set_defaults(func=run_construct)

    s = sub.add_parser("classify", help="classify a Tanner edge-list file ('-' for stdin)")
    s.add_argument("path")
    s.set_defaults(func=run_classify)

    bd = sub.add_parser("bounds", help="all bounds for one cell")
    cell_args(bd)
    bd.add_argument("--g", type=int, required=True)
    bd.set_defaults(func=run_bounds)

    t = sub.add_parser("table", help="bound table over a girth range")
    cell_args(t)
    t.add_argument("--g", default="6:16", help="girth range start:end (step 2)")
    t.add_argument("--format", choices=("text", "csv"), default="text")
    t.add_argument("--verify", action="store_true", help="materialize and check witnesses")
    t.add_argument("--jobs", type=int, default=1)
    t.set_defaults(func=run_table)

    v = sub.add_parser("validate", help="validate embedded and generated cages")
    v.add_argument("--r", type=int)
    v.add_argument("--g", type=int)
    v.set_defaults(func=run_validate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotAvailableError as exc:
        print(f"not available: {exc}", file=sys.stderr)
        return EXIT_UNAVAILABLE
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ParityError as exc:
        print(f"parity error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MalformedInputError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
