"""Command-line interface.

Subcommands: ``classify`` runs one classification and reports every moduli
component with its homology; ``reproduce`` re-runs a reference table row by
row and compares against the published values; ``groups`` lists the built-in
catalog.  Output is plain text, JSON (stable key order, byte-reproducible) or
TSV.  Exit codes: 0 success, 2 usage, 3 invalid data, 4 resource cap,
5 reproduction mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import catalog as catalog_mod
from .classify import classify
from .errors import ResourceLimitError, ValidationError
from .groups import FiniteGroup, format_cycles, load_group_file
from .homology import AbelianInvariants
from .tables import REFERENCE_TABLES
from .vectors import curve_genus, parse_signature, surface_invariants

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_RESOURCE = 4
EXIT_MISMATCH = 5


def _resolve_group(spec: str, element_cap: int) -> tuple[str, FiniteGroup]:
    if spec.startswith("@"):
        G = load_group_file(spec[1:], element_cap=element_cap)
        return spec[1:], G
    return spec, catalog_mod.build_group(spec)


def _rep_cycles(G: FiniteGroup, vec) -> list[str]:
    return [format_cycles(G.elements[e]) for e in vec]


def _report_dict(name, G, t1, t2, records) -> dict:
    def maybe(fn):
        try:
            return fn()
        except ValidationError:
            return None

    inv = maybe(lambda: surface_invariants(G.order, t1, t2))
    report = {
        "group": name,
        "order": G.order,
        "t1": list(t1),
        "t2": list(t2),
        "genus1": maybe(lambda: curve_genus(G.order, t1)),
        "genus2": maybe(lambda: curve_genus(G.order, t2)),
        "chi": inv.chi if inv else None,
        "pg": inv.pg if inv else None,
        "q": inv.q if inv else None,
        "dimension": inv.dimension if inv else None,
        "euler": inv.euler if inv else None,
        "n_components": len(records),
        "components": [
            {
                "rep1": _rep_cycles(G, r.rep1),
                "rep2": _rep_cycles(G, r.rep2),
                "homology": {
                    "rank": r.homology.rank,
                    "torsion_chain": list(r.homology.torsion),
                    "rendered": r.homology.rendered(),
                },
            }
            for r in records
        ],
    }
    return report


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2)


def render_text(report: dict) -> str:
    lines = [
        f"group        {report['group']} (order {report['order']})",
        f"signatures   {report['t1']} x {report['t2']}",
    ]
    if report["chi"] is not None:
        lines.append(
            f"invariants   g1={report['genus1']} g2={report['genus2']} "
            f"chi={report['chi']} pg={report['pg']} q={report['q']} "
            f"D={report['dimension']} e={report['euler']}")
    lines.append(f"components   N = {report['n_components']}")
    for i, comp in enumerate(report["components"], start=1):
        h = comp["homology"]
        lines.append(f"  [{i}] H1 = {h['rendered']}   "
                     f"chain {h['torsion_chain']}")
        lines.append(f"      V1: {'; '.join(comp['rep1'])}")
        lines.append(f"      V2: {'; '.join(comp['rep2'])}")
    return "\n".join(lines)


def render_tsv(report: dict) -> str:
    cols = ["group", "t1", "t2", "component", "n_components", "genus1",
            "genus2", "chi", "pg", "q", "dimension", "euler", "h1",
            "torsion_chain", "rep1", "rep2"]
    rows = ["\t".join(cols)]
    sig1 = ",".join(str(m) for m in report["t1"])
    sig2 = ",".join(str(m) for m in report["t2"])
    fixed = [report["group"], sig1, sig2]
    tail = [report["genus1"], report["genus2"], report["chi"], report["pg"],
            report["q"], report["dimension"], report["euler"]]
    if not report["components"]:
        rows.append("\t".join(str(x) for x in
                              fixed + [0, 0] + tail + ["", "", "", ""]))
    for i, comp in enumerate(report["components"], start=1):
        h = comp["homology"]
        rows.append("\t".join(str(x) for x in fixed + [
            i, report["n_components"], *tail, h["rendered"],
            ",".join(str(d) for d in h["torsion_chain"]),
            " ".join(comp["rep1"]), " ".join(comp["rep2"])]))
    return "\n".join(rows)


def cmd_classify(args) -> int:
    try:
        name, G = _resolve_group(args.group, args.element_cap)
    except (KeyError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        t1 = parse_signature(args.t1)
        t2 = parse_signature(args.t2)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        records = classify(G, t1, t2, orbit_cap=args.orbit_cap,
                           threads=args.threads)
    except ValidationError as exc:
        print(f"invalid data: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    report = _report_dict(name, G, t1, t2, records)
    renderer = {"text": render_text, "json": render_json,
                "tsv": render_tsv}[args.format]
    print(renderer(report))
    return EXIT_OK


def _homology_counter(pairs) -> Counter:
    return Counter({chain: count for chain, count in pairs})


def cmd_reproduce(args) -> int:
    rows = REFERENCE_TABLES.get(args.table)
    if rows is None:
        print(f"error: no reference table {args.table}", file=sys.stderr)
        return EXIT_USAGE
    failures = 0
    skips = 0
    for row in rows:
        label = (f"table {args.table}  {row.group:12s} "
                 f"{','.join(map(str, row.t1)):12s} "
                 f"{','.join(map(str, row.t2)):12s}")
        if row.slow and not args.slow:
            print(f"{label} SKIPPED (pass --slow to run)")
            skips += 1
            continue
        try:
            G = catalog_mod.build_group(row.group)
        except KeyError:
            print(f"{label} SKIPPED (group not in catalog)")
            skips += 1
            continue
        records = classify(G, row.t1, row.t2, threads=args.threads)
        problems = []
        if len(records) != row.n:
            problems.append(f"N={len(records)} expected {row.n}")
        got = Counter(r.homology.torsion for r in records)
        want = _homology_counter(row.homology)
        if got != want:
            got_str = {AbelianInvariants(0, c).rendered(): k
                       for c, k in got.items()}
            problems.append(f"H1={got_str}")
        if row.dim is not None and records:
            dims = {r.invariants.dimension for r in records}
            if dims != {row.dim}:
                problems.append(f"D={dims} expected {row.dim}")
        if row.chi is not None and records:
            chis = {r.invariants.chi for r in records}
            if chis != {row.chi}:
                problems.append(f"chi={chis} expected {row.chi}")
        if problems:
            failures += 1
            print(f"{label} FAIL ({'; '.join(problems)})")
        else:
            expected = " + ".join(
                (f"{k} x " if k > 1 else "") +
                AbelianInvariants(0, chain).rendered()
                for chain, k in row.homology)
            print(f"{label} PASS (N={row.n}, H1={expected})")
    if failures:
        print(f"{failures} row(s) FAILED")
        return EXIT_MISMATCH
    print(f"all rows pass ({skips} skipped)" if skips
          else "all rows pass")
    return EXIT_OK


def cmd_groups(args) -> int:
    for e in catalog_mod.list_entries():
        gid = f"<{e.small_group_id[0]},{e.small_group_id[1]}>" \
            if e.small_group_id else "-"
        print(f"{e.name:14s} order {e.order:4d}  {gid:10s} "
              f"degree {e.degree:3d}  {e.description}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isoprod",
        description="Classify regular surfaces isogenous to a higher "
                    "product of curves and compute their first homology.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser(
        "classify", help="classify one (group, signature, signature) input")
    p_classify.add_argument("--group", required=True,
                            help="catalog name, or @file for a group "
                                 "definition file")
    p_classify.add_argument("--t1", required=True,
                            help="first signature, e.g. 2,5,5")
    p_classify.add_argument("--t2", required=True,
                            help="second signature, e.g. 3,3,3,3")
    p_classify.add_argument("--format", choices=("text", "json", "tsv"),
                            default="text")
    p_classify.add_argument("--threads", type=int, default=1)
    p_classify.add_argument("--element-cap", type=int, default=100_000)
    p_classify.add_argument("--orbit-cap", type=int, default=10_000_000)
    p_classify.set_defaults(func=cmd_classify)

    p_rep = sub.add_parser(
        "reproduce", help="re-run a reference table and compare")
    p_rep.add_argument("--table", type=int, required=True, choices=(1, 2, 3, 4))
    p_rep.add_argument("--slow", action="store_true",
                       help="include the long-running order-720 rows")
    p_rep.add_argument("--threads", type=int, default=1)
    p_rep.set_defaults(func=cmd_reproduce)

    p_groups = sub.add_parser("groups", help="list the built-in catalog")
    p_groups.set_defaults(func=cmd_groups)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
