"""Command-line front end.

Subcommands: gen, diam, rn-exact, bound, label, validate, verify,
compare. Results go to stdout or ``--out``; errors go to stderr. Exit
codes: 0 success, 1 failed validation or runtime error, 2 usage error.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import claims, formulas
from .formats import (
    format_labeling,
    format_product_graph,
    parse_graph,
    parse_labeling,
    read_text,
    write_text,
)
from .graphs import (
    InvalidParameterError,
    all_pairs_distances,
    build_mesh,
    build_path,
    build_star,
)
from .labeling import LabelingContractError, validate
from .orderings import build_construction_labeling
from .product import CellIndexing, ProductParams, build_product_graph
from .search import RnStatus, SearchBudget, exact_rn


def _indexing(value: str) -> CellIndexing:
    return CellIndexing(value)


def _emit(args, text: str) -> None:
    if args.out:
        write_text(args.out, text)
    else:
        sys.stdout.write(text)


def _budget(args) -> SearchBudget:
    return SearchBudget(time_limit_s=args.budget_ms / 1000.0)


def _fraction_str(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def cmd_gen(args) -> int:
    pg = build_product_graph(ProductParams(args.m, args.n), args.indexing)
    _emit(args, format_product_graph(pg))
    return 0


def cmd_diam(args) -> int:
    params = ProductParams(args.m, args.n)
    pg = build_product_graph(params)
    dm = all_pairs_distances(pg.graph)
    observed = dm.diameter
    claimed = 2 * params.m
    if args.format == "csv":
        _emit(args, f"m,n,bfs_diameter,claimed\n{args.m},{args.n},{observed},{claimed}\n")
        return 0
    note = "" if observed == claimed else f"  (claimed {claimed}: DEVIATION)"
    _emit(args, f"diameter of product m={args.m} n={args.n}: {observed}{note}\n")
    return 0


def _family_graph(args):
    family = args.family
    if family == "path":
        if args.m is None:
            raise InvalidParameterError("--family path needs --m")
        return build_path(args.m), f"path m={args.m}"
    if family == "star":
        if args.n is None:
            raise InvalidParameterError("--family star needs --n")
        return build_star(args.n), f"star n={args.n}"
    if family == "mesh":
        if args.m is None:
            raise InvalidParameterError("--family mesh needs --m")
        return build_mesh(args.m), f"mesh m={args.m}"
    if args.m is None or args.n is None:
        raise InvalidParameterError("--family product needs --m and --n")
    pg = build_product_graph(ProductParams(args.m, args.n), args.indexing)
    return pg.graph, f"product m={args.m} n={args.n}"


def cmd_rn_exact(args) -> int:
    if args.infile:
        graph, _coords = parse_graph(read_text(args.infile))
        name = args.infile
    else:
        graph, name = _family_graph(args)
    result = exact_rn(graph, budget=_budget(args))
    if args.format == "csv":
        _emit(args, f"graph,value,status,nodes\n{name},{result.value},{result.status.value},{result.nodes}\n")
    else:
        qualifier = "" if result.status is RnStatus.EXACT else f" ({result.status.value}, best found)"
        _emit(args, f"rn({name}) = {result.value}{qualifier}\n")
    return 0


def cmd_bound(args) -> int:
    params = ProductParams(args.m, args.n)
    value = formulas.combined_bound(params)
    if args.format == "csv":
        _emit(args, formulas.bounds_table_csv(formulas.bounds_table(params)))
        return 0
    _emit(args, f"combined span bound for m={args.m} n={args.n}: {_fraction_str(value)}\n")
    return 0


def cmd_label(args) -> int:
    params = ProductParams(args.m, args.n)
    built = build_construction_labeling(params, args.indexing)
    bound = formulas.combined_bound(params)
    if args.out:
        write_text(args.out, format_labeling(built.greedy))
    lines = [
        f"construction labeling for m={args.m} n={args.n} indexing={args.indexing.value}",
        f"greedy span: {built.greedy_span} (valid)",
        f"consecutive-only span: {built.consecutive_span} "
        f"({'valid' if built.consecutive_valid else 'invalid'})",
        f"claimed bound: {_fraction_str(bound)}",
    ]
    if args.format == "csv":
        sys.stdout.write(
            "m,n,indexing,greedy_span,consecutive_span,consecutive_valid,bound\n"
            f"{args.m},{args.n},{args.indexing.value},{built.greedy_span},"
            f"{built.consecutive_span},{str(built.consecutive_valid).lower()},"
            f"{_fraction_str(bound)}\n"
        )
    else:
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_validate(args) -> int:
    if args.graph:
        graph, _coords = parse_graph(read_text(args.graph))
    elif args.m is not None and args.n is not None:
        graph = build_product_graph(ProductParams(args.m, args.n), args.indexing).graph
    else:
        raise InvalidParameterError("validate needs --graph FILE or --m/--n")
    labeling = parse_labeling(read_text(args.labeling))
    dm = all_pairs_distances(graph)
    report = validate(graph, dm, labeling)
    if args.format == "csv":
        sys.stdout.write("valid,span,violations\n")
        sys.stdout.write(
            f"{str(report.valid).lower()},{labeling.span},{len(report.violations)}\n"
        )
        return 0 if report.valid else 1
    if report.valid:
        sys.stdout.write(f"valid labeling, span {labeling.span}\n")
        return 0
    sys.stdout.write(f"INVALID labeling: {len(report.violations)} violating pairs\n")
    for v in report.violations[:20]:
        sys.stdout.write(f"  ({v.u}, {v.v}) needs gap {v.required}, has {v.actual}\n")
    if len(report.violations) > 20:
        sys.stdout.write(f"  ... {len(report.violations) - 20} more\n")
    return 1


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def cmd_verify(args) -> int:
    config = claims.VerifyConfig(
        even_m=_int_list(args.even_m),
        odd_m=_int_list(args.odd_m),
        ns=_int_list(args.ns),
        indexings=tuple(CellIndexing(s) for s in args.schemes.split(",")),
        budget_ms=args.budget_ms,
    )
    rows = claims.run_verification(config)
    if args.format == "csv":
        _emit(args, claims.verdicts_to_csv(rows))
    else:
        _emit(args, claims.verdicts_to_text(rows))
    return 0


def cmd_compare(args) -> int:
    lo, _, hi = args.m_range.partition(":")
    m_values = list(range(int(lo), int(hi or lo) + 1))
    rows = formulas.vertex_count_comparison(m_values, args.n)
    lines = ["m,n,product_vertices,star_path_vertices,ratio"]
    for row in rows:
        lines.append(
            f"{row.m},{row.n},{row.product_vertices},{row.star_path_vertices},{row.ratio}"
        )
    out = "\n".join(lines) + "\n"
    if args.with_bounds:
        out += "m,n,bound_num,bound_den,greedy_span\n"
        for m in m_values:
            params = ProductParams(m, args.n)
            bound = formulas.combined_bound(params)
            built = build_construction_labeling(params)
            out += f"{m},{args.n},{bound.numerator},{bound.denominator},{built.greedy_span}\n"
    _emit(args, out)
    return 0


def _add_common(parser, m=False, n=False, indexing=False, out=False, fmt=False, budget=False):
    if m:
        parser.add_argument("--m", type=int, required=True, help="mesh order (>= 2)")
    if n:
        parser.add_argument("--n", type=int, required=True, help="star leaf count (>= 1)")
    if indexing:
        parser.add_argument(
            "--indexing",
            type=_indexing,
            default=CellIndexing.ROW_MAJOR,
            choices=list(CellIndexing),
            metavar="{row-major,col-major,serpentine}",
        )
    if out:
        parser.add_argument("--out", default=None, help="output path (default: stdout)")
    if fmt:
        parser.add_argument("--format", choices=("text", "csv"), default="text")
    if budget:
        parser.add_argument("--budget-ms", type=int, default=60_000, dest="budget_ms")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radiomesh",
        description="Radio labeling toolkit for mesh-by-star product networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a product graph file")
    _add_common(p, m=True, n=True, indexing=True, out=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("diam", help="BFS diameter of a product graph")
    _add_common(p, m=True, n=True, out=True, fmt=True)
    p.set_defaults(func=cmd_diam)

    p = sub.add_parser("rn-exact", help="exact radio number by search")
    p.add_argument("--family", choices=("path", "star", "mesh", "product"), default="product")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--in", dest="infile", default=None, help="graph file instead of a family")
    _add_common(p, indexing=True, out=True, fmt=True, budget=True)
    p.set_defaults(func=cmd_rn_exact)

    p = sub.add_parser("bound", help="closed-form span bound(s) at (m, n)")
    _add_common(p, m=True, n=True, out=True, fmt=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("label", help="build the construction labeling")
    _add_common(p, m=True, n=True, indexing=True, fmt=True)
    p.add_argument("--out", default=None, help="write the greedy labeling file here")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("validate", help="validate a labeling file against a graph")
    p.add_argument("--labeling", required=True, help="labeling file")
    p.add_argument("--graph", default=None, help="graph file")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    _add_common(p, indexing=True, fmt=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("verify", help="adjudicate the claims catalog over a grid")
    p.add_argument("--even-m", default="2,4,6", dest="even_m")
    p.add_argument("--odd-m", default="3,5", dest="odd_m")
    p.add_argument("--ns", default="1,2,3")
    p.add_argument(
        "--schemes", default="row-major,col-major,serpentine", help="comma-separated schemes"
    )
    _add_common(p, out=True, fmt=True, budget=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", help="vertex-count comparison table")
    p.add_argument("--m-range", default="2:6", dest="m_range", help="inclusive range, e.g. 2:6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--with-bounds", action="store_true", dest="with_bounds")
    _add_common(p, out=True, fmt=True)
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParameterError, LabelingContractError) as exc:
        print(f"radiomesh: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"radiomesh: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"radiomesh: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
