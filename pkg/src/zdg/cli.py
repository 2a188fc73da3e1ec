"""Command line entry point.

Subcommands: realize, props, boolean-ring, family, fixture, theorems,
oracle.  Results go to stdout, diagnostics to stderr.  Exit codes: 0 for a
successful computation (an empty realization list is a success), 1 when a
check subcommand answers no (theorem counterexample, failed boolean-graph
conditions), 2 for usage or file errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import boolean_algebra as BA
from . import families
from . import graph as G
from . import realize as RZ
from . import semigroup as SG
from . import theorems as TH
from .errors import FormatError, TooLargeError


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    json_output: bool
    threads: int
    max_n: int


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(path: str) -> G.Graph:
    return G.parse_graph(_read_text(path))


def _load_table(path: str) -> SG.MulTable:
    return SG.parse_table(_read_text(path))


def _emit_json(payload: dict):
    print(json.dumps(payload, indent=2, sort_keys=False))


def _render_report(report: RZ.RealizationReport, names) -> str:
    lines = [
        f"mode: {report.mode}",
        f"labeled tables: {report.labeled_count}"
        + (" (truncated)" if report.truncated else ""),
        f"iso classes: {report.iso_class_count}",
        f"status: {report.status}",
    ]
    for i, t in enumerate(report.tables, start=1):
        lines.append(f"table {i}:")
        lines.append(SG.render_table(t, names).rstrip("\n"))
    return "\n".join(lines) + "\n"


def _cmd_realize(args, oracle: bool = False) -> int:
    g = _load_graph(args.graph)
    mode = RZ.BOOLEAN if args.boolean else RZ.PLAIN
    if oracle:
        report = RZ.brute_force_realize(g, mode)
    else:
        report = RZ.realize_all(
            g, mode, limit=args.limit, max_n=args.max_n, threads=args.threads
        )
    if args.json:
        _emit_json(report.to_dict())
    else:
        sys.stdout.write(_render_report(report, g.names))
    return 0


def _cmd_oracle(args) -> int:
    return _cmd_realize(args, oracle=True)


def _cmd_props(args) -> int:
    g = _load_graph(args.graph)
    props = G.graph_props(g)
    payload = {
        "n": g.n,
        "connected": props.connected,
        "diameter": props.diameter,
        "has_cycle": props.has_cycle,
        "core_vertices": sorted(props.core_vertices),
        "core_edges": [list(e) for e in sorted(props.core_edges)],
        "end_vertices": sorted(props.end_vertices),
        "uniquely_determined": G.is_uniquely_determined(g),
        "complemented": G.is_complemented(g),
        "uniquely_complemented": G.is_uniquely_complemented(g),
        "meet_closed": G.neighborhood_meet_closed(g),
    }
    if args.json:
        _emit_json(payload)
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")
    return 0


def _cmd_boolean_ring(args) -> int:
    g = _load_graph(args.graph)
    conditions = BA.check_boolean_graph_conditions(g, max_n=args.max_n)
    if args.check_only or not conditions.all_hold:
        if args.json:
            _emit_json(conditions.to_dict())
        else:
            for key, value in conditions.to_dict().items():
                print(f"{key}: {value}")
        return 0 if conditions.all_hold else 1
    ring = BA.ring_from_graph(g, max_n=args.max_n)
    if args.emit_tables:
        _write_text(args.emit_tables, BA.format_ring(ring))
    if args.json:
        payload = {
            "conditions": conditions.to_dict(),
            "elements": ring.size,
            "names": [ring.name_of(e) for e in range(ring.size)],
            "add": [list(ring.add[i][i:]) for i in range(ring.size)],
            "mul": [list(ring.mul[i][i:]) for i in range(ring.size)],
        }
        _emit_json(payload)
    else:
        print(f"boolean ring with {ring.size} elements")
        sys.stdout.write(BA.format_ring(ring))
    return 0


_FAMILIES = {
    "complete": (families.complete, 1),
    "complete-bipartite": (families.complete_bipartite, 2),
    "complete-multipartite": (families.complete_multipartite, None),
    "m-nk": (families.m_nk, 2),
    "fig1": (families.fig1, 2),
    "fig2": (families.fig2, 1),
    "fig3": (families.fig3, 1),
    "fig4": (families.fig4, 3),
    "two-star": (families.two_star, 2),
}


def _cmd_family(args) -> int:
    if args.name not in _FAMILIES:
        print(f"unknown family {args.name!r}; choose from "
              + ", ".join(sorted(_FAMILIES)), file=sys.stderr)
        return 2
    fn, arity = _FAMILIES[args.name]
    params = args.params
    if arity is not None and len(params) != arity:
        print(f"family {args.name} takes {arity} parameter(s)", file=sys.stderr)
        return 2
    g = fn(params) if arity is None else fn(*params)
    _write_text(args.output, G.format_graph(g))
    return 0


def _cmd_fixture(args) -> int:
    t = families.fixture_table(args.k)
    _write_text(args.output, SG.format_table(t))
    return 0


def _cmd_theorems(args) -> int:
    verdicts: list[TH.TheoremVerdict] = []
    if args.sweep:
        g = _load_graph(args.sweep)
        mode = RZ.BOOLEAN if args.boolean else RZ.PLAIN
        report = RZ.realize_all(g, mode, max_n=args.max_n, threads=args.threads)
        for t in report.tables:
            verdicts.extend(TH.all_verdicts(t))
    else:
        t = _load_table(args.table)
        bad = SG.check_axioms(t)
        if bad:
            print(f"table violates axioms: {bad[0].describe()}", file=sys.stderr)
            return 2
        SG.zero_divisor_graph(t)  # raises if some element never hits zero
        verdicts = TH.all_verdicts(t)
    counter = TH.counterexamples(verdicts)
    if args.json:
        _emit_json({
            "verdicts": [v.to_dict() for v in verdicts],
            "counterexamples": len(counter),
        })
    else:
        for v in verdicts:
            if v.is_counterexample:
                tag = "COUNTEREXAMPLE"
            elif not v.hypotheses_met:
                tag = "n/a"
            else:
                tag = "ok"
            line = f"[{tag}] {v.instance}"
            if v.witness:
                line += f" ({v.witness})"
            print(line)
        print(f"counterexamples: {len(counter)}")
    return 1 if counter else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zdg",
        description="zero-divisor graphs of finite commutative semigroups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, threads=True):
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--max-n", type=int, default=RZ.DEFAULT_MAX_N,
                       help="size guard for searches")
        if threads:
            p.add_argument("--threads", type=int, default=1,
                           help="top-level search branches in parallel")

    p = sub.add_parser("realize", help="enumerate semigroups realizing a graph")
    p.add_argument("graph")
    p.add_argument("--boolean", action="store_true", help="idempotent tables only")
    p.add_argument("--limit", type=int, default=None, help="cap on labeled tables")
    p.add_argument("--oracle", action="store_true",
                   help="use the brute-force oracle (n <= 4)")
    common(p)
    p.set_defaults(fn=lambda a: _cmd_realize(a, oracle=a.oracle))

    p = sub.add_parser("oracle", help="brute-force realization (n <= 4)")
    p.add_argument("graph")
    p.add_argument("--boolean", action="store_true")
    common(p)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("props", help="structural properties of a graph")
    p.add_argument("graph")
    common(p, threads=False)
    p.set_defaults(fn=_cmd_props)

    p = sub.add_parser("boolean-ring", help="reconstruct the boolean ring of a graph")
    p.add_argument("graph")
    p.add_argument("--check-only", action="store_true",
                   help="only evaluate the four conditions")
    p.add_argument("--emit-tables", metavar="FILE", default=None,
                   help="write the ring tables to FILE")
    common(p, threads=False)
    p.set_defaults(fn=_cmd_boolean_ring)

    p = sub.add_parser("family", help="generate a named graph family")
    p.add_argument("name")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=_cmd_family)

    p = sub.add_parser("fixture", help="emit a built-in reference table")
    p.add_argument("k", type=int)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=_cmd_fixture)

    p = sub.add_parser("theorems", help="verify the structural claims on a table")
    p.add_argument("table", nargs="?", default=None)
    p.add_argument("--sweep", metavar="GRAPH", default=None,
                   help="realize GRAPH and verify every table")
    p.add_argument("--boolean", action="store_true")
    common(p)
    p.set_defaults(fn=_cmd_theorems)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "theorems" and not args.sweep and not args.table:
        print("theorems needs a table file or --sweep GRAPH", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TooLargeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
