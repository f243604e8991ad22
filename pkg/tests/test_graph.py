import pytest

from shiish.graph import (
    Graph,
    GraphSpecError,
    all_graphs,
    chain_graph,
    complete_graph,
    empty_graph,
    parse_graph,
    random_graphs,
)


@pytest.mark.parametrize(
    "spec, edges",
    [
        ("complete:3", {(1, 2), (1, 3), (2, 3)}),
        ("chain:4", {(1, 2), (2, 3), (3, 4)}),
        ("empty:5", set()),
        ("3;1-2,2-3", {(1, 2), (2, 3)}),
        ("3;2-1", {(1, 2)}),
        ("4;", set()),
    ],
)
def test_parse(spec, edges):
    assert parse_graph(spec).edges == frozenset(edges)


@pytest.mark.parametrize("spec", ["3;1-1", "3;1-2,2-1", "3;1-4", "3;0-1", "3;1+2", "wheel:3", "x;1-2", "12"])
def test_parse_rejects(spec):
    with pytest.raises(GraphSpecError):
        parse_graph(spec)


def test_parse_error_position():
    with pytest.raises(GraphSpecError) as exc:
        parse_graph("4;1-2,3-3")
    assert exc.value.position == 6


def test_roundtrip_text():
    g = parse_graph("4;1-3,2-4")
    assert parse_graph(str(g)) == g


def test_named_families():
    assert len(complete_graph(5).edges) == 10
    assert chain_graph(1).edges == frozenset()
    assert empty_graph(3) == Graph(3, frozenset())


def test_all_graphs_count():
    graphs = list(all_graphs(4))
    assert len(graphs) == 64
    assert len(set(graphs)) == 64


def test_random_graphs_are_seeded():
    assert random_graphs(4, 5, seed=7) == random_graphs(4, 5, seed=7)
    assert random_graphs(4, 20, seed=1) != random_graphs(4, 20, seed=2)


def test_bad_edge_rejected():
    with pytest.raises(ValueError):
        Graph(3, frozenset({(2, 1)}))
