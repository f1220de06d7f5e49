"""Command-line surface: reproducible experiments, text or JSON reports.

Exit codes: 0 success (an Inconclusive verdict is success), 1 usage
error, 2 computation error (bad group file, sift failure, crossing
limit, singular presentation).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .alexander import alexander_poly, is_symmetric
from .bracket import jones
from .diagram import Diagram, table_lookup, table_names
from .homsearch import SearchSpec, count_homs, invertibility_test
from .permgroup import PermGroup, Permutation, builtin_group, find_class_rep, parse_cycles
from .wirtinger import format_presentation, presentation, validate


class _UsageError(Exception):
    pass


def _base_report(args: argparse.Namespace) -> dict:
    return {
        "tool": "knotinvert",
        "version": __version__,
        "command": args.command,
    }


def _emit(report: dict, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _knot(args: argparse.Namespace) -> Diagram:
    return table_lookup(args.knot)


def _group(args: argparse.Namespace) -> PermGroup:
    return builtin_group(args.group)


def _class_rep(args: argparse.Namespace, group: PermGroup) -> Permutation:
    if getattr(args, "class_rep", None):
        return parse_cycles(args.class_rep, group.degree)
    if getattr(args, "class_order", None):
        rep = find_class_rep(group, args.class_order)
        if rep is None:
            raise ValueError(
                f"group {group.name or args.group} has no element of order {args.class_order}"
            )
        return rep
    raise _UsageError("one of --class-order or --class-rep is required")


def cmd_knots(args: argparse.Namespace) -> int:
    names = table_names()
    report = _base_report(args)
    report["knots"] = names
    _emit(report, args.json, names)
    return 0


def cmd_info(args: argparse.Namespace) -> int:
    d = _knot(args)
    p = presentation(d)
    report = _base_report(args)
    report["inputs"] = {"knot": args.knot, "pd": d.pd_text()}
    report["crossings"] = len(d.crossings)
    report["writhe"] = d.writhe()
    report["arc_count"] = p.arc_count
    _emit(
        report,
        args.json,
        [
            f"knot:      {args.knot}",
            f"pd:        {d.pd_text() or '(empty: unknot)'}",
            f"crossings: {len(d.crossings)}",
            f"writhe:    {d.writhe()}",
            f"arcs:      {p.arc_count}",
        ],
    )
    return 0


def cmd_wirtinger(args: argparse.Namespace) -> int:
    d = _knot(args)
    p = presentation(d)
    checks = validate(p)
    report = _base_report(args)
    report["inputs"] = {"knot": args.knot}
    report["presentation"] = format_presentation(p)
    report["checks"] = {c.name: c.passed for c in checks}
    lines = format_presentation(p).splitlines()
    lines.append("checks:")
    lines.extend(f"  {c.name}: {'pass' if c.passed else 'FAIL ' + c.detail}" for c in checks)
    _emit(report, args.json, lines)
    return 0 if all(c.passed for c in checks) else 2


def cmd_alexander(args: argparse.Namespace) -> int:
    d = _knot(args)
    poly = alexander_poly(presentation(d))
    symmetric = is_symmetric(poly)
    report = _base_report(args)
    report["inputs"] = {"knot": args.knot}
    report["alexander"] = str(poly)
    report["symmetric"] = symmetric
    _emit(
        report,
        args.json,
        [f"alexander: {poly}", f"symmetric: {str(symmetric).lower()}"],
    )
    return 0


def cmd_jones(args: argparse.Namespace) -> int:
    d = _knot(args)
    v = jones(d)
    report = _base_report(args)
    report["inputs"] = {"knot": args.knot}
    report["jones"] = str(v)
    lines = [f"jones: {v}"]
    if args.check_inverse:
        v_rev = jones(d.reverse())
        report["jones_reversed"] = str(v_rev)
        report["equal_under_reversal"] = v == v_rev
        lines.append(f"jones(reverse): {v_rev}")
        lines.append(f"equal under reversal: {str(v == v_rev).lower()}")
    _emit(report, args.json, lines)
    return 0


def _report_counts(rep) -> dict:
    out = {
        "meridian_image": rep.meridian_image.cycle_string(),
        "hom_count": rep.hom_count,
        "epi_count": rep.epi_count,
        "orbit_count": rep.orbit_count,
        "nodes_visited": rep.nodes_visited,
        "elapsed_ms": round(rep.elapsed * 1000, 3),
    }
    if rep.longitude_breakdown is not None:
        out["longitude_breakdown"] = {
            h.cycle_string(): c for h, c in rep.longitude_breakdown.items()
        }
    return out


def cmd_homcount(args: argparse.Namespace) -> int:
    d = _knot(args)
    group = _group(args)
    x = _class_rep(args, group)
    spec = SearchSpec(
        presentation(d),
        group,
        x,
        epi_only=args.epi_only,
        collect_longitudes=args.longitudes,
        threads=args.threads,
    )
    rep = count_homs(spec)
    report = _base_report(args)
    report["inputs"] = {
        "knot": args.knot,
        "group": args.group,
        "group_order": group.order(),
        "class_rep": x.cycle_string(),
        "class_size": len(group.conjugacy_class(x)),
    }
    report["counts"] = _report_counts(rep)
    lines = [
        f"knot:        {args.knot}",
        f"group:       {args.group} (order {group.order()})",
        f"meridian ->  {x.cycle_string()} (class size {len(group.conjugacy_class(x))})",
        f"hom_count:   {rep.hom_count}",
        f"epi_count:   {rep.epi_count}",
        f"orbit_count: {rep.orbit_count}",
        f"nodes:       {rep.nodes_visited}",
        f"elapsed:     {rep.elapsed * 1000:.1f} ms",
    ]
    if args.longitudes and rep.longitude_breakdown is not None:
        lines.append("longitude breakdown:")
        lines.extend(
            f"  {h.cycle_string()}: {c}" for h, c in rep.longitude_breakdown.items()
        )
    _emit(report, args.json, lines)
    return 0


def cmd_invert_test(args: argparse.Namespace) -> int:
    d = _knot(args)
    group = _group(args)
    x = _class_rep(args, group)
    t0 = time.perf_counter()
    result = invertibility_test(presentation(d), group, x, threads=args.threads)
    elapsed = time.perf_counter() - t0
    report = _base_report(args)
    report["inputs"] = {
        "knot": args.knot,
        "group": args.group,
        "group_order": group.order(),
        "class_rep": x.cycle_string(),
    }
    report["verdict"] = result.verdict.value
    report["reasons"] = result.reasons
    report["forward"] = _report_counts(result.forward)
    report["backward"] = _report_counts(result.backward)
    report["elapsed_ms"] = round(elapsed * 1000, 3)
    lines = [
        f"knot:    {args.knot}",
        f"group:   {args.group} (order {group.order()})",
        f"meridian -> {x.cycle_string()} and inverse",
        f"counts:  hom {result.forward.hom_count}/{result.backward.hom_count}, "
        f"epi {result.forward.epi_count}/{result.backward.epi_count}",
        f"verdict: {result.verdict.value}",
    ]
    lines.extend(f"  reason: {r}" for r in result.reasons)
    _emit(report, args.json, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotinvert",
        description="Knot invertibility via homomorphism counts onto finite groups",
    )
    parser.add_argument("--version", action="version", version=f"knotinvert {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("knots", help="list table knots")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_knots)

    for name, func in (
        ("info", cmd_info),
        ("wirtinger", cmd_wirtinger),
        ("alexander", cmd_alexander),
    ):
        p = sub.add_parser(name)
        p.add_argument("knot")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("jones")
    p.add_argument("knot")
    p.add_argument("--check-inverse", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_jones)

    p = sub.add_parser("homcount")
    p.add_argument("knot")
    p.add_argument("--group", required=True)
    p.add_argument("--class-order", type=int)
    p.add_argument("--class-rep")
    p.add_argument("--epi-only", action="store_true")
    p.add_argument("--longitudes", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_homcount)

    p = sub.add_parser("invert-test")
    p.add_argument("knot")
    p.add_argument("--group", required=True)
    p.add_argument("--class-order", type=int)
    p.add_argument("--class-rep")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invert_test)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage problems; our contract says 1
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # computation errors: bad files, sifts, limits
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
