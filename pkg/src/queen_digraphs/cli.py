"""Command-line front end.

Exit status: 0 on success or a valid verdict, 1 on an invalid verdict,
2 on usage errors and malformed input files.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd

from . import constructions as cons
from .digraph import DigraphError, LabeledDigraph, cycle_type, is_one_regular
from .documents import (
    DocumentError,
    PlacementDocument,
    dump_digraph,
    dump_placement,
    load_any,
    load_assignment,
    load_digraph,
    render_ascii,
)
from .enumeration import (
    achievable_cycle_types,
    count_modular,
    count_standard,
    enumerate_modular,
    enumerate_standard,
    modular_bound_check,
    shared_set_family,
)
from .labeling import (
    Placement,
    diff_multiset,
    from_placement,
    sum_multiset,
    to_placement,
    verify_modular_queen,
    verify_placement,
    verify_queen,
)
from .product import FamilyAssignment, ProductError, oh_product, product_preserves_modular, product_preserves_queen

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, text: str, payload: dict):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _write_document(args, text: str):
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report_payload(report) -> dict:
    return {
        "valid": report.is_valid,
        "failures": [
            {
                "tag": f.tag,
                "where": f.where or None,
                "witness": [list(a) for a in f.witness] if f.witness else None,
                "value": f.value,
                "detail": f.detail or None,
            }
            for f in report.failures
        ],
    }


def cmd_solve(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be positive")
    if args.count:
        count = (count_modular if args.modular else count_standard)(args.n)
        _emit(args, str(count), {"n": args.n, "modular": args.modular, "count": count})
        return EXIT_OK
    stream = (enumerate_modular if args.modular else enumerate_standard)(args.n, args.limit)
    solutions = [P.columns() for P in stream]
    _emit(
        args,
        "\n".join(" ".join(map(str, cols)) for cols in solutions),
        {"n": args.n, "modular": args.modular, "solutions": solutions},
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = load_any(args.input)
    if isinstance(doc, PlacementDocument):
        modular = args.modular or bool(doc.modular)
        report = verify_placement(doc.placement, modular=modular)
    else:
        modular = args.modular
        report = (verify_modular_queen if modular else verify_queen)(doc)
    kind = "modular queen" if modular else "queen"
    text = f"{kind}: {report.summary()}"
    _emit(args, text, {"modular": modular, **_report_payload(report)})
    return EXIT_OK if report.is_valid else EXIT_INVALID


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--method {args.method} needs --{name}")


def cmd_construct(args) -> int:
    method = args.method
    try:
        if method == "doubling":
            _need(args, "p")
            text = dump_digraph(cons.polya_doubling(args.p))
        elif method == "jacobsthal":
            _need(args, "n")
            text = dump_digraph(cons.jacobsthal_digraph(args.n))
        elif method == "strong-cycle":
            _need(args, "k")
            text = dump_digraph(cons.strong_cycle(args.k))
        elif method == "three-cycles":
            _need(args, "m")
            text = dump_placement(cons.three_cycles_placement(args.m), modular=False)
        else:
            _need(args, "m", "n")
            if gcd(args.n, 6) != 1:
                raise UsageError(f"polya-composite needs gcd(n, 6) = 1, got n={args.n}")
            standard = list(enumerate_standard(args.m))
            pi = [int(x) for x in args.pi.split(",")] if args.pi else [0] * args.n
            g = to_placement(cons.polya_doubling(args.n))
            text = dump_placement(cons.polya_composite(standard, pi, g), modular=False)
    except cons.ConstructionError as exc:
        raise UsageError(str(exc)) from None
    _write_document(args, text)
    return EXIT_OK


def cmd_product(args) -> int:
    D = load_digraph(args.d)
    gamma = [load_digraph(path) for path in args.family]
    try:
        if args.assign:
            fa = load_assignment(args.assign, D, gamma)
        elif len(gamma) == 1:
            fa = FamilyAssignment.constant(D, gamma[0])
        else:
            raise UsageError("--assign is required when the family has more than one member")
        product = oh_product(D, fa)
    except ProductError as exc:
        raise UsageError(str(exc)) from None
    _write_document(args, dump_digraph(product))
    if not args.check_conditions:
        return EXIT_OK
    check = product_preserves_modular if args.modular else product_preserves_queen
    report = check(D, fa)
    print(("modular " if args.modular else "") + "product check: " + report.summary(), file=sys.stderr)
    return EXIT_OK if report.is_valid else EXIT_INVALID


def _as_digraph(doc) -> LabeledDigraph:
    if isinstance(doc, PlacementDocument):
        try:
            return from_placement(doc.placement)
        except DigraphError as exc:
            raise UsageError(str(exc)) from None
    return doc


def cmd_analyze(args) -> int:
    D = _as_digraph(load_any(args.input))
    sums, diffs = sum_multiset(D), diff_multiset(D)
    regular = is_one_regular(D)
    info = {
        "n": D.n,
        "arcs": len(D.arcs),
        "one_regular": regular,
        "cycle_type": list(cycle_type(D).lengths) if regular else None,
        "sums": sums,
        "diffs": diffs,
        "sum_total": sum(sums),
        "diff_total": sum(diffs),
        "expected_sum_total": D.n * (D.n + 1) if regular else None,
        "queen": verify_queen(D).is_valid,
        "modular_queen": verify_modular_queen(D).is_valid,
    }
    lines = [
        f"order: {D.n}, arcs: {len(D.arcs)}, 1-regular: {regular}",
        f"cycle type: {cycle_type(D) if regular else 'n/a'}",
        f"sums: {sums}",
        f"diffs: {diffs}",
        f"sum of sums: {sum(sums)}" + (f" (n(n+1) = {D.n * (D.n + 1)})" if regular else ""),
        f"sum of diffs: {sum(diffs)}",
        f"queen labeling: {info['queen']}",
        f"modular queen labeling: {info['modular_queen']}",
    ]
    _emit(args, "\n".join(lines), info)
    return EXIT_OK


def cmd_types(args) -> int:
    if not 1 <= args.n <= 12:
        raise UsageError("--n must lie in [1, 12]")
    types = sorted(achievable_cycle_types(args.n), reverse=True)
    _emit(args, "\n".join(str(t) for t in types), {"n": args.n, "cycle_types": [list(t.lengths) for t in types]})
    return EXIT_OK


def cmd_render(args) -> int:
    doc = load_any(args.input)
    P = doc.placement if isinstance(doc, PlacementDocument) else to_placement(doc)
    _emit(args, render_ascii(P), {"n": P.n, "rows": render_ascii(P).split("\n")})
    return EXIT_OK


def cmd_bound(args) -> int:
    try:
        family = shared_set_family(args.n, args.restricted) if args.restricted else None
        report = modular_bound_check(args.m, args.n, family=family, samples=args.samples, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = (
        f"{report.mode}: {report.generated} products of modular {args.m}- and {args.n}-solutions, "
        f"{report.invalid} not modular, distinct: {report.distinct}, bound: {report.bound}"
    )
    _emit(args, text, report.__dict__ | {"ok": report.ok})
    return EXIT_OK if report.all_valid and report.distinct else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="queen-digraphs", description="Queen labelings of digraphs and n-queens solutions.")
    parser.add_argument("--json", action="store_true", help="print results as a single JSON document")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="enumerate or count n-queens solutions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--modular", action="store_true")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--count", action="store_true")
    group.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a digraph or placement document")
    p.add_argument("--input", required=True)
    p.add_argument("--modular", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build one of the explicit solution families")
    p.add_argument("--method", required=True,
                   choices=["doubling", "jacobsthal", "three-cycles", "strong-cycle", "polya-composite"])
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--pi", help="comma-separated 0-based solution indices, one per row block")
    p.add_argument("--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("product", help="h-product of a digraph with a family")
    p.add_argument("--d", required=True)
    p.add_argument("--family", nargs="+", required=True)
    p.add_argument("--assign")
    p.add_argument("--modular", action="store_true")
    p.add_argument("--check-conditions", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("analyze", help="cycle type, sums, differences and identities")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("types", help="cycle types of all n-queens solutions")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_types)

    p = sub.add_parser("render", help="draw a placement as ASCII")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bound", help="check products behind the modular counting bound")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--restricted", type=int, metavar="K", help="use K modular n-solutions sharing sum and difference sets")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bound)
    return parser


def dispatch(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (DocumentError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(dispatch())
