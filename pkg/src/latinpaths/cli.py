"""Command-line front end.

Commands: paths, circuits, hamiltonian, count, optimal, matrix, words.
Exit codes: 0 success (an empty enumeration is an answer), 2 usage or
parse error, 3 resource-guard abort.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bruteforce, enumeration
from .graph import (
    DirectedGraph,
    GraphParseError,
    PathError,
    VertexPath,
    parse_graph,
    path_cost,
)
from .words import (
    Alphabet,
    AlphabetError,
    EnumerationCapError,
    enumerate_distinguished,
    sigma_count,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    common.add_argument(
        "--engine",
        choices=("lcdl", "oracle"),
        default="lcdl",
        help="lcdl: latin-matrix powers; oracle: brute-force DFS reference",
    )
    common.add_argument(
        "--limit",
        type=int,
        default=enumeration.DEFAULT_WORD_LIMIT,
        help="stored-word guard for latin powers",
    )
    common.add_argument("--dot", metavar="PATH", help="write a DOT rendering with results highlighted")

    parser = argparse.ArgumentParser(
        prog="latinpaths",
        description="Enumerate elementary paths and circuits of a directed graph",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("paths", parents=[common], help="elementary paths of a given length")
    p.add_argument("file")
    p.add_argument("-i", required=True, metavar="SOURCE")
    p.add_argument("-j", required=True, metavar="TARGET")
    p.add_argument("-k", required=True, type=int, metavar="LENGTH")

    p = sub.add_parser("circuits", parents=[common], help="elementary circuits of a given length")
    p.add_argument("file")
    p.add_argument("-i", required=True, metavar="START")
    p.add_argument("-k", required=True, type=int, metavar="LENGTH")

    p = sub.add_parser("hamiltonian", parents=[common], help="all Hamiltonian paths or circuits")
    p.add_argument("file")
    p.add_argument("--kind", choices=("path", "circuit"), required=True)

    p = sub.add_parser("count", parents=[common], help="count all paths of a given length")
    p.add_argument("file")
    p.add_argument("-i", required=True, metavar="SOURCE")
    p.add_argument("-j", required=True, metavar="TARGET")
    p.add_argument("-k", required=True, type=int, metavar="LENGTH")

    p = sub.add_parser("optimal", parents=[common], help="cost-optimal Hamiltonian path or circuit")
    p.add_argument("file")
    p.add_argument("--kind", choices=("path", "circuit"), required=True)
    p.add_argument("--objective", choices=("min", "max"), default="min")
    p.add_argument("--from", dest="start", metavar="VERTEX")
    p.add_argument("--to", dest="end", metavar="VERTEX")

    p = sub.add_parser("matrix", parents=[common], help="print a latin-matrix power")
    p.add_argument("file")
    p.add_argument("-k", required=True, type=int, metavar="POWER")

    p = sub.add_parser("words", parents=[common], help="distinguished words over an alphabet")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("-n", type=int, help="alphabet size; symbols are 1..n")
    group.add_argument("--alphabet", help="comma-separated symbols")
    p.add_argument("--count-only", action="store_true")

    return parser


def _load_graph(path: str) -> DirectedGraph:
    with open(path, encoding="utf-8") as handle:
        return parse_graph(handle.read())


def _item_json(graph: DirectedGraph, path: VertexPath) -> dict:
    cost = path_cost(graph, path) if graph.costs is not None else None
    return {"vertices": list(path.vertices), "length": path.length, "cost": cost}


def _emit_result(graph, query: dict, items: list[VertexPath], args) -> str:
    if args.format == "json":
        payload = {
            "query": query,
            "items": [_item_json(graph, p) for p in items],
            "count": len(items),
        }
        return json.dumps(payload, indent=2) + "\n"
    lines = []
    for p in items:
        if graph.costs is not None:
            lines.append(f"{p.render()} cost={_fmt_cost(path_cost(graph, p))}")
        else:
            lines.append(p.render())
    return "".join(line + "\n" for line in lines)


def _fmt_cost(cost: float) -> str:
    return str(int(cost)) if float(cost).is_integer() else repr(cost)


def _canonical(graph: DirectedGraph, paths) -> list[VertexPath]:
    return sorted(paths, key=lambda p: tuple(graph.index(v) for v in p.vertices))


def _oracle_hamiltonian(graph: DirectedGraph, kind: str) -> list[VertexPath]:
    if kind == "path" and graph.n < 2:
        raise ValueError("Hamiltonian paths need at least 2 vertices")
    everything = bruteforce.enumerate_all_elementary(graph)
    found = []
    for (source, target, k), seqs in everything.items():
        if kind == "path" and source != target and k == graph.n - 1:
            found.extend(VertexPath(s) for s in seqs)
        if kind == "circuit" and source == target and k == graph.n:
            found.extend(VertexPath(s) for s in seqs)
    return _canonical(graph, found)


def _write_dot(path: str, graph: DirectedGraph, items: list[VertexPath]):
    highlighted = set()
    for p in items:
        highlighted.update(zip(p.vertices, p.vertices[1:]))
    lines = ["digraph G {"]
    for v in graph.vertices:
        lines.append(f'  "{v}";')
    for idx, (u, v) in enumerate(graph.arcs):
        attrs = []
        if graph.costs is not None:
            attrs.append(f'label="{_fmt_cost(graph.costs[idx])}"')
        if (u, v) in highlighted:
            attrs.append('color="red"')
            attrs.append("penwidth=2")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f'  "{u}" -> "{v}"{suffix};')
    lines.append("}")
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")


def _run_paths(args) -> str:
    graph = _load_graph(args.file)
    if args.engine == "oracle":
        result = bruteforce.dfs_elementary_paths(graph, args.i, args.j, args.k)
    else:
        powers = enumeration.latin_powers(graph, args.limit)
        result = enumeration.elementary_paths(graph, args.i, args.j, args.k, powers)
    items = list(result.items)
    query = {"command": "paths", "source": args.i, "target": args.j, "length": args.k}
    if args.dot:
        _write_dot(args.dot, graph, items)
    return _emit_result(graph, query, items, args)


def _run_circuits(args) -> str:
    graph = _load_graph(args.file)
    if args.engine == "oracle":
        result = bruteforce.dfs_elementary_circuits(graph, args.i, args.k)
    else:
        powers = enumeration.latin_powers(graph, args.limit)
        result = enumeration.elementary_circuits(graph, args.i, args.k, powers)
    items = list(result.items)
    query = {"command": "circuits", "start": args.i, "length": args.k}
    if args.dot:
        _write_dot(args.dot, graph, items)
    return _emit_result(graph, query, items, args)


def _run_hamiltonian(args) -> str:
    graph = _load_graph(args.file)
    if args.engine == "oracle":
        items = _oracle_hamiltonian(graph, args.kind)
    else:
        powers = enumeration.latin_powers(graph, args.limit)
        if args.kind == "path":
            items = enumeration.hamiltonian_paths(graph, powers)
        else:
            items = enumeration.hamiltonian_circuits(graph, powers)
    query = {"command": "hamiltonian", "kind": args.kind}
    if args.dot:
        _write_dot(args.dot, graph, items)
    return _emit_result(graph, query, items, args)


def _run_count(args) -> str:
    graph = _load_graph(args.file)
    if args.engine == "oracle":
        value = bruteforce.dfs_count_all_paths(graph, args.i, args.j, args.k)
    else:
        value = enumeration.count_paths(graph, args.i, args.j, args.k)
    if args.format == "json":
        payload = {
            "query": {"command": "count", "source": args.i, "target": args.j, "length": args.k},
            "value": value,
        }
        return json.dumps(payload, indent=2) + "\n"
    return f"{value}\n"


def _run_optimal(args) -> str:
    graph = _load_graph(args.file)
    candidates = None
    if args.engine == "oracle":
        candidates = _oracle_hamiltonian(graph, args.kind)
    best = enumeration.optimal_hamiltonian(
        graph,
        args.kind,
        objective=args.objective,
        start=args.start,
        end=args.end,
        candidates=candidates,
    )
    query = {
        "command": "optimal",
        "kind": args.kind,
        "objective": args.objective,
        "from": args.start,
        "to": args.end,
    }
    items = [best[0]] if best is not None else []
    if args.dot:
        _write_dot(args.dot, graph, items)
    if args.format == "json":
        payload = {
            "query": query,
            "items": [_item_json(graph, p) for p in items],
            "count": len(items),
        }
        return json.dumps(payload, indent=2) + "\n"
    if best is None:
        return "none\n"
    return f"{best[0].render()} cost={_fmt_cost(best[1])}\n"


def _run_matrix(args) -> str:
    graph = _load_graph(args.file)
    if not 1 <= args.k <= graph.n:
        raise ValueError(f"power {args.k} out of range 1..{graph.n}")
    powers = enumeration.latin_powers(graph, args.limit)
    rendered = [
        [entry.render() for entry in row] for row in powers.power(args.k).rows
    ]
    if args.format == "json":
        payload = {"query": {"command": "matrix", "k": args.k}, "rows": rendered}
        return json.dumps(payload, indent=2) + "\n"
    widths = [max(len(r[j]) for r in rendered) for j in range(graph.n)]
    lines = [
        "  ".join(cell.ljust(widths[j]) for j, cell in enumerate(row)).rstrip()
        for row in rendered
    ]
    return "".join(line + "\n" for line in lines)


def _run_words(args) -> str:
    if args.n is not None:
        if args.n < 1:
            raise ValueError("alphabet size must be positive")
        symbols = tuple(str(i) for i in range(1, args.n + 1))
    else:
        symbols = tuple(s for s in args.alphabet.split(",") if s)
    alphabet = Alphabet(symbols)
    sigma = sigma_count(alphabet.n)
    rendered = None
    if not args.count_only:
        all_words = enumerate_distinguished(alphabet)
        rendered = [
            w.render(alphabet)
            for w in sorted(all_words, key=lambda w: (len(w.indices), w.indices))
        ]
    if args.format == "json":
        payload = {"query": {"command": "words", "alphabet": list(symbols)}, "sigma": sigma}
        if rendered is not None:
            payload["words"] = rendered
        return json.dumps(payload, indent=2) + "\n"
    if args.count_only:
        return f"{sigma}\n"
    return f"sigma: {sigma}\n" + "".join(w + "\n" for w in rendered)


_RUNNERS = {
    "paths": _run_paths,
    "circuits": _run_circuits,
    "hamiltonian": _run_hamiltonian,
    "count": _run_count,
    "optimal": _run_optimal,
    "matrix": _run_matrix,
    "words": _run_words,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        output = _RUNNERS[args.command](args)
    except enumeration.WordLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (
        GraphParseError,
        PathError,
        AlphabetError,
        EnumerationCapError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
