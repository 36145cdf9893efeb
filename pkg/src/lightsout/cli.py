"""Command-line front end.

Exit codes: 0 success, 1 domain error or failed verification, 2 usage
error.  `--json` switches every subcommand to its JSON document form.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, edgecalc, oracle
from .errors import LightsOutError
from .gf2 import BitVector
from .graph import (
    Graph,
    StarSpec,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_labeled_graphs,
    grid_graph,
    load_graphs,
    path_graph,
    to_graph6,
    toggle_edge,
)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except LightsOutError as exc:
        _fail(args, type(exc).__name__, str(exc))
        return 1
    except BrokenPipeError:
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lightsout",
        description="Lights Out nullity calculus: solvability, activation classes, edge edits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_opts(p: argparse.ArgumentParser) -> None:
        source = p.add_mutually_exclusive_group(required=True)
        source.add_argument("--graph", metavar="PATH", help="graph file: JSON document or graph6 line")
        source.add_argument(
            "--gen",
            metavar="SPEC",
            help="generated graph, e.g. cycle:5, path:4, complete:3, empty:2, grid:2x3, "
            "or a union like complete:2+complete:2",
        )
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")

    p = sub.add_parser("analyze", help="nullity, solvability, vertex classes")
    graph_opts(p)
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("solve", help="solve a configuration")
    graph_opts(p)
    p.add_argument("--config", required=True, metavar="BITS", help="configuration bitstring")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("classify", help="classify a vertex set")
    graph_opts(p)
    p.add_argument("--set", required=True, metavar="CSV", help="vertex set, e.g. 0,2,5")
    p.add_argument("--config", metavar="BITS", help="configuration bitstring (default all-ones)")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("star", help="analyze a star edit between two sets")
    graph_opts(p)
    p.add_argument("--a1", required=True, metavar="CSV")
    p.add_argument("--a2", required=True, metavar="CSV")
    p.set_defaults(handler=_cmd_star)

    p = sub.add_parser("whatif", help="effect of toggling one edge")
    graph_opts(p)
    p.add_argument("--u", required=True, type=int)
    p.add_argument("--v", required=True, type=int)
    p.add_argument("--strict-type6", action="store_true", help="literal half-activated pair reading")
    p.set_defaults(handler=_cmd_whatif)

    p = sub.add_parser("search", help="find a guaranteed edit or witness")
    graph_opts(p)
    p.add_argument(
        "--find",
        required=True,
        choices=["removal", "addition", "drop2", "witness"],
        help="removal: nullity-decreasing edge; addition: nullity-increasing non-edge; "
        "drop2: edit with nullity change -2; witness: characterization witness",
    )
    p.add_argument("--strict-type6", action="store_true")
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser("verify", help="exhaustive lemma and theorem sweeps")
    p.add_argument("--max-n", required=True, type=int, metavar="N")
    p.add_argument(
        "--table-max-n",
        type=int,
        default=None,
        metavar="N",
        help="cap for the star prediction sweep (default min(max-n, 5))",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("enumerate", help="stream all labeled graphs of an order")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--stop", type=int, default=None)
    p.add_argument("--format", choices=["g6", "json"], default="g6")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("serve", help="run the JSON-over-HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--max-vertices", type=int, default=64)
    p.add_argument("--static", metavar="DIR", help="also serve this directory at /")
    p.set_defaults(handler=_cmd_serve)

    return parser


# -- input helpers -------------------------------------------------------

def _get_graph(args) -> Graph:
    if args.graph:
        graphs = load_graphs(args.graph)
        if len(graphs) != 1:
            raise LightsOutError(
                f"{args.graph} holds {len(graphs)} graphs; this command needs exactly one"
            )
        return graphs[0]
    return _parse_gen_spec(args.gen)


def _parse_gen_spec(spec: str) -> Graph:
    from .errors import InputError

    parts = []
    for chunk in spec.split("+"):
        kind, _, params = chunk.partition(":")
        kind = kind.strip()
        try:
            if kind == "grid":
                rows, _, cols = params.partition("x")
                parts.append(grid_graph(int(rows), int(cols)))
            elif kind in ("path", "cycle", "complete", "empty"):
                builder = {
                    "path": path_graph,
                    "cycle": cycle_graph,
                    "complete": complete_graph,
                    "empty": empty_graph,
                }[kind]
                parts.append(builder(int(params)))
            else:
                raise InputError(f"unknown generator {kind!r} in {spec!r}")
        except ValueError as exc:
            raise InputError(f"bad generator parameters in {chunk!r}: {exc}") from exc
    return parts[0] if len(parts) == 1 else disjoint_union(*parts)


def _parse_vertex_csv(text: str) -> list[int]:
    from .errors import InputError

    if not text.strip():
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise InputError(f"vertex set must be comma-separated integers, got {text!r}") from exc


def _emit(args, doc: dict, text_lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(text_lines))


def _fail(args, code: str, message: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps({"error": {"code": code, "message": message}}), file=sys.stderr)
    else:
        print(f"error: {message}", file=sys.stderr)


# -- subcommands ----------------------------------------------------------

def _cmd_analyze(args) -> int:
    from .service import analyze_response

    graph = _get_graph(args)
    doc = analyze_response(graph)
    _emit(
        args,
        doc,
        [
            f"vertices: {graph.n}",
            f"edges: {graph.edge_count()}",
            f"nullity: {doc['nullity']}",
            f"always solvable: {'yes' if doc['alwaysSolvable'] else 'no'}",
            "vertex classes: " + " ".join(doc["vertexClasses"]),
            f"odd dominating patterns: {doc['oddDominatingCount']}",
            "example pattern: "
            + analysis.odd_dominating_patterns(graph).particular.to01(),
        ],
    )
    return 0


def _cmd_solve(args) -> int:
    from .service import solve_response

    graph = _get_graph(args)
    config = BitVector.parse(args.config)
    doc = solve_response(graph, config)
    if doc["solvable"]:
        lines = [
            "solvable: yes",
            f"pattern: {doc['pattern']}",
            f"solutions: {doc['solutionCount']}",
        ]
    else:
        lines = [
            "solvable: no",
            f"certificate null pattern: {doc['certificate']}",
        ]
    _emit(args, doc, lines)
    return 0


def _cmd_classify(args) -> int:
    graph = _get_graph(args)
    vertex_set = _parse_vertex_csv(args.set)
    config = BitVector.parse(args.config) if args.config else None
    verdict = analysis.classify_set(graph, vertex_set, config)
    doc = {
        "set": sorted(vertex_set),
        "config": verdict.relative_to.to01(),
        "tag": verdict.tag,
    }
    _emit(args, doc, [f"class of {sorted(vertex_set)} relative to {doc['config']}: {verdict.tag}"])
    return 0


def _cmd_star(args) -> int:
    graph = _get_graph(args)
    spec = StarSpec(_parse_vertex_csv(args.a1), _parse_vertex_csv(args.a2))
    report = edgecalc.analyze_star(graph, spec)
    doc = report.to_json_dict()
    _emit(
        args,
        doc,
        [
            f"a1 {list(report.a1)}: {report.before_a1}   a2 {list(report.a2)}: {report.before_a2}",
            f"aux: {doc['before']['aux']}",
            f"predicted: delta nu {report.predicted.delta_nu}, classes -> "
            f"({report.predicted.class_a1_after}, {report.predicted.class_a2_after})",
            f"actual: nullity {report.nullity_before} -> {report.nullity_after} "
            f"(delta {report.actual_delta_nu}), classes -> ({report.after_a1}, {report.after_a2})",
            f"agrees: {'yes' if report.agrees else 'NO'}",
        ],
    )
    return 0


def _cmd_whatif(args) -> int:
    graph = _get_graph(args)
    report = edgecalc.analyze_toggle(graph, args.u, args.v, strict_type6=args.strict_type6)
    doc = report.to_json_dict()
    lines = [
        f"action: {report.action} ({args.u},{args.v})",
        f"delta nu: {report.delta_nu} (nullity {report.nullity_before} -> {report.nullity_after})",
        f"classes before: u={report.before_u} v={report.before_v}",
        f"classes after:  u={report.after_u} v={report.after_v}",
    ]
    if report.addition_type is not None:
        lines.append(f"addition type: {report.addition_type}")
    _emit(args, doc, lines)
    return 0


def _cmd_search(args) -> int:
    graph = _get_graph(args)
    nu = analysis.nullity(graph)
    if args.find == "removal":
        u, v = edgecalc.find_nullity_decreasing_edge(graph)
        after = analysis.nullity(toggle_edge(graph, u, v))
        doc = {"kind": "removal", "edge": [u, v], "nullity_before": nu, "nullity_after": after}
        lines = [f"remove edge ({u},{v}): nullity {nu} -> {after}"]
    elif args.find == "addition":
        pair = edgecalc.find_nullity_increasing_addition(graph)
        if pair is None:
            doc = {"kind": "addition", "edge": None, "nullity_before": nu}
            lines = ["no nullity-increasing addition exists"]
        else:
            u, v = pair
            after = analysis.nullity(toggle_edge(graph, u, v))
            doc = {"kind": "addition", "edge": [u, v], "nullity_before": nu, "nullity_after": after}
            lines = [f"add edge ({u},{v}): nullity {nu} -> {after}"]
    elif args.find == "drop2":
        edit = edgecalc.find_delta_minus2_edit(graph)
        doc = edit.to_json_dict() | {"kind": "drop2", "nullity_before": nu, "nullity_after": nu - 2}
        lines = [f"{edit.action} edge ({edit.u},{edit.v}): nullity {nu} -> {nu - 2}"]
    else:
        witness = edgecalc.verify_characterization(graph, strict_type6=args.strict_type6)
        ok = edgecalc.replay_witness(graph, witness)
        doc = witness.to_json_dict() | {"replay_valid": ok}
        lines = [f"witness kind {witness.kind}: edge {list(witness.edge)} is a {witness.type_tag} addition"]
        if witness.kind == "B":
            lines.append(
                f"inner edge {list(witness.inner_edge)} is a {witness.inner_type_tag} addition"
            )
        lines.append(f"replay valid: {'yes' if ok else 'NO'}")
    _emit(args, doc, lines)
    return 0


def _cmd_verify(args) -> int:
    lemmas = oracle.verify_lemma_suite(args.max_n)
    table_max = args.table_max_n if args.table_max_n is not None else min(args.max_n, 5)
    table = edgecalc.verify_star_table(table_max)
    theorems = edgecalc.verify_theorem_suite(args.max_n)
    all_passed = lemmas.all_passed and table.all_passed and theorems.all_passed
    doc = {
        "max_n": args.max_n,
        "all_passed": all_passed,
        "lemmas": lemmas.to_json_dict(),
        "star_table": table.to_json_dict(),
        "theorems": theorems.to_json_dict(),
    }
    lines = [f"lemma sweep (n <= {args.max_n}):"]
    lines += ["  " + s for s in lemmas.summary_lines()]
    lines.append(f"star prediction sweep (n <= {table_max}):")
    lines += ["  " + s for s in table.summary_lines()]
    lines.append(f"theorem sweep (n <= {args.max_n}):")
    lines += ["  " + s for s in theorems.summary_lines()]
    lines.append(f"all passed: {'yes' if all_passed else 'NO'}")
    _emit(args, doc, lines)
    return 0 if all_passed else 1


def _cmd_enumerate(args) -> int:
    for graph in enumerate_labeled_graphs(args.n, args.start, args.stop):
        if args.format == "g6":
            print(to_graph6(graph))
        else:
            print(json.dumps(graph.to_json_dict()))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(max_vertices=args.max_vertices, static_dir=args.static)
    try:
        uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    except OSError as exc:
        print(f"error: could not bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
