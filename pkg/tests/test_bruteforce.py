import pytest

from latinpaths.bruteforce import (
    dfs_count_all_paths,
    dfs_elementary_circuits,
    dfs_elementary_paths,
    enumerate_all_elementary,
)
from latinpaths.graph import DirectedGraph, validate_path
from latinpaths.semiring import mat_power_left
from latinpaths.graph import adjacency_matrix


@pytest.fixture
def triangle():
    # complete digraph on three vertices, no self-loops
    names = ("1", "2", "3")
    return DirectedGraph(
        names, tuple((u, v) for u in names for v in names if u != v)
    )


class TestElementaryPaths:
    def test_four_vertex(self, four_vertex_graph):
        result = dfs_elementary_paths(four_vertex_graph, "v1", "v4", 2)
        assert [p.render() for p in result.items] == ["v1-v2-v4", "v1-v3-v4"]

    def test_no_arcs(self):
        g = DirectedGraph(("a", "b"), ())
        assert dfs_elementary_paths(g, "a", "b", 1).items == ()

    def test_results_validated_elementary(self, five_vertex_graph):
        for k in range(1, 5):
            result = dfs_elementary_paths(five_vertex_graph, "4", "1", k)
            for p in result.items:
                validate_path(five_vertex_graph, p)
                assert p.is_elementary_path()
                assert p.length == k

    def test_rejects_same_endpoints(self, four_vertex_graph):
        with pytest.raises(ValueError):
            dfs_elementary_paths(four_vertex_graph, "v1", "v1", 2)


class TestElementaryCircuits:
    def test_weighted_tour(self, five_vertex_graph):
        result = dfs_elementary_circuits(five_vertex_graph, "1", 5)
        assert [p.render() for p in result.items] == ["1-5-4-3-2-1"]

    def test_self_loops_only_at_length_one(self, four_vertex_graph):
        result = dfs_elementary_circuits(four_vertex_graph, "v1", 1)
        assert [p.render() for p in result.items] == ["v1-v1"]
        assert dfs_elementary_circuits(four_vertex_graph, "v3", 1).items == ()

    def test_triangle_three_circuits(self, triangle):
        result = dfs_elementary_circuits(triangle, "1", 3)
        assert [p.render() for p in result.items] == ["1-2-3-1", "1-3-2-1"]

    def test_results_validated(self, triangle):
        for k in (2, 3):
            for p in dfs_elementary_circuits(triangle, "2", k).items:
                validate_path(triangle, p)
                assert p.is_elementary_circuit()
                assert p.length == k


class TestCountAllPaths:
    def test_four_vertex(self, four_vertex_graph):
        assert dfs_count_all_paths(four_vertex_graph, "v1", "v4", 3) == 5
        assert dfs_count_all_paths(four_vertex_graph, "v2", "v2", 3) == 1

    def test_arc_indicator(self, four_vertex_graph):
        assert dfs_count_all_paths(four_vertex_graph, "v3", "v4", 1) == 1
        assert dfs_count_all_paths(four_vertex_graph, "v4", "v1", 1) == 0

    def test_agrees_with_adjacency_powers(self, five_vertex_graph):
        g = five_vertex_graph
        adjacency = adjacency_matrix(g)
        for k in range(1, 7):
            power = mat_power_left(adjacency, k)
            for i, u in enumerate(g.vertices):
                for j, v in enumerate(g.vertices):
                    assert dfs_count_all_paths(g, u, v, k) == power.rows[i][j]


class TestBulkEnumeration:
    def test_matches_single_queries(self, five_vertex_graph):
        g = five_vertex_graph
        everything = enumerate_all_elementary(g)
        for u in g.vertices:
            for v in g.vertices:
                for k in range(1, g.n + 1):
                    if u == v:
                        expected = {
                            p.vertices
                            for p in dfs_elementary_circuits(g, u, k).items
                        }
                    elif k <= g.n - 1:
                        expected = {
                            p.vertices
                            for p in dfs_elementary_paths(g, u, v, k).items
                        }
                    else:
                        continue
                    assert everything.get((u, v, k), set()) == expected
