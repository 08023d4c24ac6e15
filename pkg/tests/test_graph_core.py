import json

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from corona_fib.graph_core import (
    Tree,
    TreeStructureError,
    degree,
    expand,
    export_dot,
    from_json,
    is_leaf,
    parse_dot_counts,
    path_tree,
    random_tree,
    star_tree,
)
from oracles import nx_graph


def test_path_tree_small():
    assert path_tree(1).vertex_count == 1 and path_tree(1).edges == ()
    assert path_tree(2).edges == ((0, 1),)
    p5 = path_tree(5)
    assert p5.edges == ((0, 1), (1, 2), (2, 3), (3, 4))
    assert nx.is_tree(nx_graph(5, p5.edges))


def test_path_tree_rejects_zero():
    with pytest.raises(ValueError):
        path_tree(0)


@pytest.mark.parametrize("n, edges", [
    (3, [(0, 1)]),                   # too few edges
    (3, [(0, 1), (1, 2), (0, 2)]),   # cycle, too many edges
    (4, [(0, 1), (1, 0), (2, 3)]),   # duplicate
    (2, [(0, 0)]),                   # self-loop
    (4, [(0, 1), (1, 2), (0, 2)]),   # right count, disconnected + cycle
    (2, [(0, 5)]),                   # out of range
])
def test_tree_rejects_non_trees(n, edges):
    with pytest.raises(TreeStructureError):
        Tree(n, edges)


def test_expand_small_cases():
    g1 = expand(path_tree(1))
    assert g1.graph.vertex_count == 2 and g1.graph.edges == ((0, 1),)
    g3 = expand(path_tree(3))
    assert [degree(g3, g3.core_vertex(i)) for i in range(3)] == [2, 3, 2]
    assert [degree(g3, g3.leaf_of(i)) for i in range(3)] == [1, 1, 1]
    assert g3.central_path == [1]
    assert expand(path_tree(2)).central_path == []


def test_degree_and_leaf():
    p5 = path_tree(5)
    assert degree(p5, 0) == 1 and degree(p5, 2) == 2
    g3 = expand(path_tree(3))
    assert degree(g3, g3.core_vertex(1)) == 3
    assert is_leaf(path_tree(2), 0)
    assert is_leaf(g3, g3.leaf_of(1))
    assert not is_leaf(g3, g3.core_vertex(1))
    with pytest.raises(IndexError):
        degree(p5, 5)
    with pytest.raises(IndexError):
        is_leaf(p5, -1)


@pytest.mark.parametrize("n", range(1, 41))
def test_expanded_path_invariants(n):
    g = expand(path_tree(n))
    assert g.graph.vertex_count == 2 * n
    assert len(g.graph.edges) == 2 * n - 1
    for i in range(n):
        assert g.graph.adjacency[g.leaf_of(i)] == (g.core_vertex(i),)
    for i in range(n - 1):
        assert g.graph.has_edge(i, i + 1)
    assert nx.is_tree(nx_graph(2 * n, g.graph.edges))


@given(st.integers(1, 1000), st.integers(0, 2**32))
def test_random_tree_is_tree(n, seed):
    t = random_tree(n, seed)
    assert t.vertex_count == n and len(t.edges) == n - 1
    assert nx.is_tree(nx_graph(n, t.edges))
    assert sum(degree(t, x) for x in range(n)) == 2 * len(t.edges)


def test_random_tree_deterministic_and_small():
    assert random_tree(1, 5).edges == ()
    assert random_tree(2, 5).edges == ((0, 1),)
    assert random_tree(30, 7) == random_tree(30, 7)
    assert random_tree(30, 7) != random_tree(30, 8)


def test_random_tree_labels_are_roughly_uniform():
    # 16 labeled trees on 4 vertices (Cayley); each should appear
    seen = {random_tree(4, s).edges for s in range(400)}
    assert len(seen) == 16


def test_expand_general_core():
    g = expand(star_tree(4))
    assert g.graph.vertex_count == 10
    assert not g.core_is_path
    with pytest.raises(TreeStructureError):
        g.central_path


@pytest.mark.parametrize("n", [1, 3, 7])
def test_dot_export(n):
    g = expand(path_tree(n))
    text = export_dot(g)
    assert text == export_dot(g)
    assert parse_dot_counts(text) == (2 * n, 2 * n - 1)
    assert "\r" not in text and text.endswith("\n")
    assert "v0" in text and f"z{n - 1}" in text


def test_dot_counts_for_random_core():
    g = expand(random_tree(9, 3))
    nodes, edges = parse_dot_counts(export_dot(g))
    assert (nodes, edges) == (g.graph.vertex_count, len(g.graph.edges))


def test_json_round_trip():
    g = expand(path_tree(4))
    data = json.loads(g.to_json())
    assert data == {
        "n": 4,
        "edges": [[0, 1], [0, 4], [1, 2], [1, 5], [2, 3], [2, 6], [3, 7]],
        "core": [0, 1, 2, 3],
        "leaves": [4, 5, 6, 7],
    }
    assert data["edges"] == sorted(data["edges"])
    assert from_json(g.to_json()) == g


def test_json_rejects_bad_layout():
    bad = json.dumps({"n": 2, "edges": [[0, 1], [0, 2], [1, 3]], "core": [0, 1], "leaves": [3, 2]})
    with pytest.raises(TreeStructureError):
        from_json(bad)
