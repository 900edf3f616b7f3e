"""Directed graphs with optional arc costs, and their two companion matrices.

The edge-list text format: comment lines start with '#'; the first
non-comment line is "vertices: v1 v2 ... vn"; every following line is
"u v" or "u v cost".  Vertex declaration order fixes matrix indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from functools import reduce

from .semiring import NATURALS, SemiringMatrix, language_semiring
from .words import Alphabet, DistinguishedWord, WordKind


class GraphParseError(ValueError):
    """Malformed graph input; message carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class PathError(ValueError):
    """A vertex sequence is not a valid path in the graph."""


@dataclass(frozen=True, slots=True)
class DirectedGraph:
    vertices: tuple[str, ...]
    arcs: tuple[tuple[str, str], ...]
    costs: tuple[float, ...] | None = None  # parallel to arcs

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex names must be distinct")
        known = set(self.vertices)
        seen = set()
        for u, v in self.arcs:
            if u not in known or v not in known:
                raise ValueError(f"arc ({u}, {v}) references an undeclared vertex")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc ({u}, {v})")
            seen.add((u, v))
        if self.costs is not None and len(self.costs) != len(self.arcs):
            raise ValueError("every arc needs exactly one cost")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, name: str) -> int:
        try:
            return self.vertices.index(name)
        except ValueError:
            raise ValueError(f"unknown vertex {name!r}") from None

    def has_arc(self, u: str, v: str) -> bool:
        return (u, v) in set(self.arcs)

    def arc_set(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.arcs)

    def cost_of(self, u: str, v: str) -> float:
        if self.costs is None:
            raise ValueError("graph has no arc costs")
        return self.costs[self.arcs.index((u, v))]


@dataclass(frozen=True, slots=True)
class VertexPath:
    """Sequence of at least two vertices; arc-length is one less than the
    vertex count."""

    vertices: tuple[str, ...]

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise PathError("a path needs at least two vertices")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def is_elementary_path(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def is_elementary_circuit(self) -> bool:
        interior = self.vertices[:-1]
        return self.vertices[0] == self.vertices[-1] and len(set(interior)) == len(
            interior
        )

    def render(self) -> str:
        return "-".join(self.vertices)


def validate_path(graph: DirectedGraph, path: VertexPath):
    arcs = graph.arc_set()
    for u, v in zip(path.vertices, path.vertices[1:]):
        if (u, v) not in arcs:
            raise PathError(f"({u}, {v}) is not an arc of the graph")


def parse_graph(text: str) -> DirectedGraph:
    vertices: tuple[str, ...] | None = None
    arcs: list[tuple[str, str]] = []
    costs: list[float] = []
    arc_lines: dict[tuple[str, str], int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if vertices is None:
            if not line.startswith("vertices:"):
                raise GraphParseError(line_no, "expected a 'vertices:' declaration")
            names = line[len("vertices:"):].split()
            if not names:
                raise GraphParseError(line_no, "vertex list is empty")
            if len(set(names)) != len(names):
                raise GraphParseError(line_no, "duplicate vertex name")
            vertices = tuple(names)
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise GraphParseError(line_no, f"malformed arc line {line!r}")
        u, v = parts[0], parts[1]
        for name in (u, v):
            if name not in vertices:
                raise GraphParseError(line_no, f"unknown vertex {name!r}")
        if (u, v) in arc_lines:
            raise GraphParseError(
                line_no, f"duplicate arc ({u}, {v}), first seen on line {arc_lines[(u, v)]}"
            )
        arc_lines[(u, v)] = line_no
        arcs.append((u, v))
        if len(parts) == 3:
            try:
                # Decimal validates the syntax; the value is kept as float.
                costs.append(float(Decimal(parts[2])))
            except InvalidOperation:
                raise GraphParseError(line_no, f"invalid cost {parts[2]!r}") from None
        else:
            costs.append(math.nan)
    if vertices is None:
        raise GraphParseError(1, "missing 'vertices:' declaration")
    with_cost = [c for c in costs if not math.isnan(c)]
    if with_cost and len(with_cost) != len(arcs):
        missing = next(
            ln for (uv, ln) in arc_lines.items()
            if math.isnan(costs[arcs.index(uv)])
        )
        raise GraphParseError(missing, "cost given on some arcs but not this one")
    return DirectedGraph(
        vertices, tuple(arcs), tuple(with_cost) if with_cost else None
    )


def serialize_graph(graph: DirectedGraph) -> str:
    """Emit the edge-list format; arcs sorted by (source index, target index)."""
    lines = ["vertices: " + " ".join(graph.vertices)]
    order = sorted(
        range(len(graph.arcs)),
        key=lambda a: (graph.index(graph.arcs[a][0]), graph.index(graph.arcs[a][1])),
    )
    for a in order:
        u, v = graph.arcs[a]
        if graph.costs is not None:
            cost = graph.costs[a]
            text = repr(cost) if not float(cost).is_integer() else str(int(cost))
            lines.append(f"{u} {v} {text}")
        else:
            lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def adjacency_matrix(graph: DirectedGraph) -> SemiringMatrix:
    arcs = graph.arc_set()
    rows = tuple(
        tuple(1 if (u, v) in arcs else 0 for v in graph.vertices)
        for u in graph.vertices
    )
    return SemiringMatrix(NATURALS, rows)


def graph_alphabet(graph: DirectedGraph) -> Alphabet:
    return Alphabet(graph.vertices)


def latin_matrix(graph: DirectedGraph) -> SemiringMatrix:
    """Entry (i, j) is the singleton language {v_i v_j} when the arc exists;
    a self-loop gives the two-symbol cyclic word v_i v_i."""
    from .languages import DistinguishedLanguage

    alphabet = graph_alphabet(graph)
    sr = language_semiring(alphabet)
    arcs = graph.arc_set()
    rows = []
    for i, u in enumerate(graph.vertices):
        row = []
        for j, v in enumerate(graph.vertices):
            if (u, v) in arcs:
                kind = WordKind.SIMPLE_CYCLIC if i == j else WordKind.SIMPLE
                word = DistinguishedWord((i, j), kind, (1 << i) | (1 << j))
                row.append(DistinguishedLanguage(alphabet, frozenset((word,))))
            else:
                row.append(sr.zero)
        rows.append(tuple(row))
    return SemiringMatrix(sr, tuple(rows))


def path_cost(graph: DirectedGraph, path: VertexPath, aggregation: str = "sum") -> float:
    if graph.costs is None:
        raise ValueError("graph has no arc costs")
    if aggregation not in ("sum", "product"):
        raise ValueError(f"unknown aggregation {aggregation!r}")
    validate_path(graph, path)
    arc_costs = [
        graph.cost_of(u, v) for u, v in zip(path.vertices, path.vertices[1:])
    ]
    if aggregation == "sum":
        return sum(arc_costs)
    return reduce(lambda x, y: x * y, arc_costs)
