"""Command-line front end: ``powerline {group,graph,classify,verify}``.

Exit codes: 0 agreement, 1 theorem/oracle disagreement, 2 usage error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .classify import (
    CatalogEntry,
    OracleSplitError,
    SweepOptions,
    default_catalog,
    family_catalog,
    group_record,
    verify_sweep,
)
from .graphs import GraphSizeError, to_dot, to_edge_list
from .groups import (
    FiniteGroup,
    GroupError,
    OrderCapError,
    group_from_json,
    make_cyclic,
    make_dihedral,
    make_generalized_quaternion,
    make_heisenberg,
    make_modular_maximal_cyclic,
    product_of_cyclics,
)
from .linegraphs import PATTERN_CAP
from .power import proper_power_graph

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
FAMILIES = ("cyclic", "dihedral", "quaternion", "heisenberg", "modular", "product", "custom")


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def parse_product_spec(spec: str) -> list[int]:
    """``"2x4"`` or ``"2 x 4 x 3"`` -> [2, 4, 3]."""
    try:
        sizes = [int(s) for s in spec.replace(" ", "").split("x")]
    except ValueError:
        raise UsageError(f"bad product spec {spec!r}; expected e.g. 2x4") from None
    if not sizes or min(sizes) < 1:
        raise UsageError(f"bad product spec {spec!r}")
    return sizes


def build_from_args(args) -> FiniteGroup:
    cap = args.max_order
    fam = args.family

    def need(name):
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"--family {fam} needs --{name}")
        return v

    if fam == "cyclic":
        return make_cyclic(need("n"), max_order=cap)
    if fam == "dihedral":
        return make_dihedral(need("n"), max_order=cap)
    if fam == "quaternion":
        return make_generalized_quaternion(need("n"), max_order=cap)
    if fam == "heisenberg":
        return make_heisenberg(need("p"), max_order=cap)
    if fam == "modular":
        return make_modular_maximal_cyclic(need("p"), max_order=cap)
    if fam == "product":
        return product_of_cyclics(parse_product_spec(need("spec")), max_order=cap)
    doc = json.loads(Path(need("input")).read_text())
    return group_from_json(doc, max_order=cap)


def _group_id(g: FiniteGroup, args) -> str:
    fam = args.family
    return {
        "cyclic": lambda: f"Z{args.n}",
        "dihedral": lambda: f"D{args.n}",
        "quaternion": lambda: f"Q{2 ** args.n}",
        "heisenberg": lambda: f"Heis{args.p}",
        "modular": lambda: f"Mod{args.p}",
        "product": lambda: "x".join(f"Z{k}" for k in parse_product_spec(args.spec)),
    }.get(fam, lambda: g.family)()


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# -- subcommands ---------------------------------------------------------


def cmd_group(args) -> int:
    g = build_from_args(args)
    _emit(json.dumps(g.to_json(), sort_keys=True) + "\n", args.output)
    return EXIT_OK


def cmd_graph(args) -> int:
    g = build_from_args(args)
    graph = proper_power_graph(g).graph(args.kind)
    if args.format == "dot":
        text = to_dot(graph, f"{args.kind}({g.family})")
    elif args.format == "edges":
        text = to_edge_list(graph)
    else:
        text = _dump({"n": graph.n, "labels": [graph.label(v) for v in range(graph.n)], "edges": graph.edges()})
    _emit(text, args.output)
    return EXIT_OK


def cmd_classify(args) -> int:
    g = build_from_args(args)
    gid = _group_id(g, args)
    options = SweepOptions(pattern_cap=args.pattern_cap, max_order=args.max_order)
    record = group_record(CatalogEntry(gid, g.family, g.order), options, group=g)
    verdict = record["graphs"][args.kind]
    record["kind"] = args.kind
    record["line"] = verdict["line"]
    record["witness"] = verdict["witness"]
    _emit(_dump(record), args.output)
    return EXIT_OK if record["ok"] else EXIT_DISAGREE


def cmd_verify(args) -> int:
    if args.only:
        catalog = family_catalog(args.only, args.max_n)
    else:
        catalog = default_catalog()
    if args.max_order_filter is not None:
        catalog = [e for e in catalog if e.order <= args.max_order_filter]
    options = SweepOptions(pattern_cap=args.pattern_cap, jobs=args.jobs or os.cpu_count() or 1)
    try:
        report = verify_sweep(catalog, options)
    except OracleSplitError as err:
        dump = Path(args.dump_dir)
        dump.mkdir(parents=True, exist_ok=True)
        for name, text in err.artifacts().items():
            (dump / name).write_text(text)
        print(f"error: {err}; artifacts written to {dump}", file=sys.stderr)
        return EXIT_DISAGREE
    Path(args.report).write_text(report.to_jsonl())
    sys.stdout.write(report.summary_table())
    for r in report.disagreements:
        print(f"disagreement: {r['id']}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_DISAGREE


# -- parser --------------------------------------------------------------


def _group_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, help="cyclic order, dihedral rotation count, or quaternion exponent")
    p.add_argument("--p", type=int, help="prime for heisenberg/modular")
    p.add_argument("--spec", help="product of cyclics, e.g. 2x4")
    p.add_argument("--input", help="group JSON file for --family custom")
    p.add_argument("--max-order", type=_positive, default=None, help="construction cap (default POWERLINE_MAX_ORDER or 512)")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="powerline", description="Power graphs of finite groups and line-graph checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="emit a group as JSON")
    _group_flags(p)

    p = sub.add_parser("graph", help="emit P, P* or P** of a group")
    _group_flags(p)
    p.add_argument("--kind", choices=("power", "deleted", "proper"), default="power")
    p.add_argument("--format", choices=("dot", "edges", "json"), default="edges")

    p = sub.add_parser("classify", help="theorem predictions against both line-graph deciders")
    _group_flags(p)
    p.add_argument("--kind", choices=("power", "proper"), default="proper")
    p.add_argument("--pattern-cap", type=_positive, default=PATTERN_CAP)

    p = sub.add_parser("verify", help="sweep a catalog and report agreement")
    p.add_argument("--only", choices=("cyclic", "abelian", "dihedral", "quaternion", "heisenberg", "modular", "product"))
    p.add_argument("--max-n", type=_positive, help="largest family parameter with --only")
    p.add_argument("--max-order", dest="max_order_filter", type=_positive, help="keep catalog groups up to this order")
    p.add_argument("--pattern-cap", type=_positive, default=PATTERN_CAP)
    p.add_argument("--jobs", type=_positive, default=None, help="worker processes (default: all cores)")
    p.add_argument("--report", default="verify-report.jsonl", help="JSON-lines report path")
    p.add_argument("--dump-dir", default="oracle-split", help="where to write artifacts if the deciders disagree")
    return parser


COMMANDS = {"group": cmd_group, "graph": cmd_graph, "classify": cmd_classify, "verify": cmd_verify}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except OrderCapError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CAP
    except GraphSizeError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CAP
    except (GroupError, UsageError, OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
