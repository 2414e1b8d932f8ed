import json

import pytest
from hypothesis import given, strategies as st

from raagtc.graph import CapacityError, Graph, GraphError, ParseError, members, parse_graph


def test_edge_list_path():
    g = parse_graph("a b\nb c")
    assert g.n == 3
    assert g.labels == ("a", "b", "c")
    assert g.edges() == [(0, 1), (1, 2)]


def test_empty_input():
    assert parse_graph("").n == 0
    assert parse_graph("", "dimacs").n == 0


def test_dimacs_triangle():
    g = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3", "dimacs")
    assert g.labels == ("1", "2", "3")
    assert g.adj == Graph.complete(3).adj


def test_comments_isolated_and_duplicates():
    g = parse_graph("# header\nz\na b  # trailing\nb a\n\n")
    assert g.labels == ("z", "a", "b")
    assert g.edges() == [(1, 2)]


@pytest.mark.parametrize(
    "text, fmt, line",
    [
        ("a b\na b c", "edge-list", 2),
        ("a a", "edge-list", 1),
        ("p edge 2 1\ne 1 1", "dimacs", 2),
        ("p edge 2 1\ne 1 3", "dimacs", 2),
        ("e 1 2", "dimacs", 1),
        ("p edge 2 1\nx 1 2", "dimacs", 2),
    ],
)
def test_parse_errors_carry_line(text, fmt, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text, fmt)
    assert info.value.line == line


def test_dimacs_header_count_mismatch():
    with pytest.raises(ParseError, match="declares 3 edges"):
        parse_graph("p edge 3 3\ne 1 2", "dimacs")


def test_capacity():
    Graph.edgeless(128)
    with pytest.raises(CapacityError):
        Graph.edgeless(129)
    with pytest.raises(CapacityError):
        parse_graph("p edge 200 0", "dimacs")


def test_direct_construction_invariants():
    with pytest.raises(GraphError):
        Graph(("a", "b"), (0b10, 0))  # asymmetric
    with pytest.raises(GraphError):
        Graph(("a",), (0b1,))  # self-loop
    with pytest.raises(GraphError):
        Graph(("a", "a"), (0, 0))


def test_is_clique():
    k3 = Graph.complete(3)
    p3 = parse_graph("a b\nb c")
    assert k3.is_clique({0, 1, 2})
    assert not p3.is_clique({0, 2})
    assert p3.is_clique(0) and p3.is_clique([1])
    with pytest.raises(GraphError):
        p3.is_clique({3})


def test_canonical_json():
    g = parse_graph("c a\nb c")
    assert json.loads(g.dumps()) == {"n": 3, "labels": ["c", "a", "b"], "edges": [[0, 1], [0, 2]]}


graphs = st.integers(0, 9).flatmap(
    lambda n: st.lists(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))), max_size=20).map(
        lambda es: Graph.from_edges(n, [(u, v) for u, v in es if u != v])
    )
)


@given(graphs)
def test_round_trip_and_predicates(g):
    assert parse_graph(g.to_edge_list()) == g
    assert parse_graph(g.to_dimacs(), "dimacs").adj == g.adj
    assert g.is_clique(0)
    for v in range(g.n):
        assert g.is_clique(1 << v)
        for u in members(g.adj[v]):
            assert g.adjacent(u, v)
