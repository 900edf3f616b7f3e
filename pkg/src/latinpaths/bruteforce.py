"""Brute-force reference enumeration by depth-first search.

This module deliberately shares nothing with the matrix-power engine beyond
the graph type: results produced here are used as independent ground truth
in the test suite and behind the CLI's --engine oracle flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import DirectedGraph, VertexPath


@dataclass(frozen=True, slots=True)
class OracleResult:
    kind: str
    source: str
    target: str
    length: int
    items: tuple[VertexPath, ...]


def _successors(graph: DirectedGraph) -> dict[str, list[str]]:
    succ: dict[str, list[str]] = {v: [] for v in graph.vertices}
    for u, v in graph.arcs:
        succ[u].append(v)
    index = {v: i for i, v in enumerate(graph.vertices)}
    for u in succ:
        succ[u].sort(key=index.__getitem__)
    return succ


def _simple_paths_from(graph, source, max_len):
    """Yield every simple path (as a vertex tuple) from source with arc-length
    between 1 and max_len."""
    succ = _successors(graph)
    path = [source]
    on_path = {source}

    def walk():
        if len(path) - 1 >= max_len:
            return
        for nxt in succ[path[-1]]:
            if nxt in on_path:
                continue
            path.append(nxt)
            on_path.add(nxt)
            yield tuple(path)
            yield from walk()
            on_path.discard(nxt)
            path.pop()

    yield from walk()


def dfs_elementary_paths(
    graph: DirectedGraph, source: str, target: str, k: int
) -> OracleResult:
    graph.index(source), graph.index(target)
    if source == target:
        raise ValueError("source equals target; use dfs_elementary_circuits")
    if not 1 <= k <= graph.n - 1:
        raise ValueError(f"path length {k} out of range 1..{graph.n - 1}")
    hits = [
        p for p in _simple_paths_from(graph, source, k)
        if len(p) - 1 == k and p[-1] == target
    ]
    hits.sort(key=lambda p: tuple(graph.index(v) for v in p))
    return OracleResult(
        "path", source, target, k, tuple(VertexPath(p) for p in hits)
    )


def dfs_elementary_circuits(graph: DirectedGraph, start: str, k: int) -> OracleResult:
    graph.index(start)
    if not 1 <= k <= graph.n:
        raise ValueError(f"circuit length {k} out of range 1..{graph.n}")
    arcs = graph.arc_set()
    hits: list[tuple[str, ...]] = []
    if k == 1:
        if (start, start) in arcs:
            hits.append((start, start))
    else:
        for p in _simple_paths_from(graph, start, k - 1):
            if len(p) - 1 == k - 1 and (p[-1], start) in arcs:
                hits.append(p + (start,))
    hits.sort(key=lambda p: tuple(graph.index(v) for v in p))
    return OracleResult(
        "circuit", start, start, k, tuple(VertexPath(p) for p in hits)
    )


def dfs_count_all_paths(graph: DirectedGraph, source: str, target: str, k: int) -> int:
    """Count all walks of length k from source to target by recursive
    expansion (memoized on (vertex, remaining steps))."""
    if k < 1:
        raise ValueError("path length must be at least 1")
    graph.index(source), graph.index(target)
    succ = _successors(graph)

    @lru_cache(maxsize=None)
    def count(v: str, remaining: int) -> int:
        if remaining == 0:
            return 1 if v == target else 0
        return sum(count(u, remaining - 1) for u in succ[v])

    return count(source, k)


def enumerate_all_elementary(
    graph: DirectedGraph,
) -> dict[tuple[str, str, int], set[tuple[str, ...]]]:
    """Every elementary path and anchored circuit in one sweep, keyed by
    (source, target, arc-length).  One DFS per source vertex."""
    arcs = graph.arc_set()
    out: dict[tuple[str, str, int], set[tuple[str, ...]]] = {}
    for source in graph.vertices:
        if (source, source) in arcs:
            out.setdefault((source, source, 1), set()).add((source, source))
        for p in _simple_paths_from(graph, source, graph.n - 1):
            k = len(p) - 1
            out.setdefault((source, p[-1], k), set()).add(p)
            if (p[-1], source) in arcs:
                out.setdefault((source, source, k + 1), set()).add(p + (source,))
    return out
