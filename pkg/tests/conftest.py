import random

import pytest

from latinpaths.graph import DirectedGraph, parse_graph

# 4-vertex unweighted graph: dominant upper-triangular shape with two
# self-loops; it has exactly one Hamiltonian path and no circuits of
# length >= 2.
FOUR_VERTEX_TEXT = """\
# four vertices, eight arcs
vertices: v1 v2 v3 v4
v1 v1
v1 v2
v1 v3
v1 v4
v2 v2
v2 v3
v2 v4
v3 v4
"""

# 5-vertex weighted graph whose Hamiltonian circuits form one rotation class.
FIVE_VERTEX_TEXT = """\
vertices: 1 2 3 4 5
1 2 4
1 3 2
1 5 6
2 1 3
2 5 3
3 2 1
4 3 5
4 5 4
5 1 6
5 2 1
5 3 2
5 4 1
"""

CORPUS_SEED = 982451653
CORPUS_SIZE = 200
CORPUS_DENSITIES = (0.2, 0.5, 0.8)


@pytest.fixture(scope="session")
def four_vertex_graph():
    return parse_graph(FOUR_VERTEX_TEXT)


@pytest.fixture(scope="session")
def five_vertex_graph():
    return parse_graph(FIVE_VERTEX_TEXT)


def random_graph(rng: random.Random, n: int, density: float) -> DirectedGraph:
    names = tuple(f"v{i}" for i in range(1, n + 1))
    arcs = tuple(
        (u, v) for u in names for v in names if rng.random() < density
    )
    return DirectedGraph(names, arcs)


def build_corpus() -> list[DirectedGraph]:
    rng = random.Random(CORPUS_SEED)
    graphs = []
    for _ in range(CORPUS_SIZE):
        n = rng.randint(2, 7)
        density = rng.choice(CORPUS_DENSITIES)
        graphs.append(random_graph(rng, n, density))
    return graphs


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()
