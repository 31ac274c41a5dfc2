import pytest
from hypothesis import given, settings

from strategies import graphs
from tensorcut.catalog import all_graphs
from tensorcut.graphs import (
    Graph,
    GraphFamilySpec,
    build,
    complement,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    join,
    matching_graph,
    path_graph,
    remove_edges,
)


def test_degree_examples():
    assert complete_graph(4).degree(0) == 3
    assert cycle_graph(5).degree(2) == 2
    assert path_graph(3).degree(0) == 1
    assert path_graph(3).degree(1) == 2


def test_degree_rejects_out_of_range():
    with pytest.raises(ValueError):
        complete_graph(3).degree(3)
    with pytest.raises(ValueError):
        complete_graph(3).degree(-1)


def test_min_degree_examples():
    assert complete_graph(4).min_degree() == 3
    assert complete_bipartite_graph(1, 3).min_degree() == 1
    k3 = join(empty_graph(1), matching_graph(1))
    assert k3 == complete_graph(3)
    assert k3.min_degree() == 2


def test_empty_graph_operations_rejected():
    g = Graph(0)
    with pytest.raises(ValueError):
        g.min_degree()
    with pytest.raises(ValueError):
        g.is_connected()


def test_edge_count_examples():
    assert complete_graph(5).edge_count() == 10
    assert cycle_graph(6).edge_count() == 6
    # join of 3 isolated vertices with 2 disjoint edges: 3*4 cross + 2
    g = join(empty_graph(3), matching_graph(2))
    assert g.edge_count() == 14


def test_is_connected_examples():
    assert cycle_graph(7).is_connected()
    assert not matching_graph(2).is_connected()
    assert Graph(1).is_connected()


def test_is_bipartite_examples():
    assert cycle_graph(6).is_bipartite()
    assert not complete_graph(3).is_bipartite()
    assert complete_bipartite_graph(3, 4).is_bipartite()


def test_validation():
    with pytest.raises(ValueError):
        Graph(3, {(1, 1)})
    with pytest.raises(ValueError):
        Graph(3, {(0, 3)})
    with pytest.raises(ValueError):
        Graph(-1)
    # unordered pairs normalize and collapse
    assert Graph(3, {(2, 0)}) == Graph(3, {(0, 2)})
    assert Graph(3, [(0, 1), (1, 0)]).edge_count() == 1


def test_remove_edges():
    g = cycle_graph(4)
    assert remove_edges(g, {(0, 1)}).edge_count() == 3
    with pytest.raises(ValueError):
        remove_edges(g, {(0, 2)})


def test_build_examples():
    k3 = build(GraphFamilySpec("Join", (
        GraphFamilySpec("EmptyGraph", (1,)),
        GraphFamilySpec("Matching", (1,)),
    )))
    assert k3 == complete_graph(3)

    m2 = build(GraphFamilySpec("Matching", (2,)))
    assert m2.n == 4 and m2.edges == frozenset({(0, 1), (2, 3)})

    h2 = build(GraphFamilySpec("Join", (
        GraphFamilySpec("EmptyGraph", (3,)),
        GraphFamilySpec("Matching", (2,)),
    )))
    assert h2.n == 7
    assert h2.edge_count() == 14
    assert all(h2.degree(v) == 4 for v in range(7))


def test_build_rejects_bad_parameters():
    with pytest.raises(ValueError):
        GraphFamilySpec("CompleteBipartite", (0, 3))
    with pytest.raises(ValueError):
        GraphFamilySpec("Matching", (0,))
    with pytest.raises(ValueError):
        GraphFamilySpec("Nonsense", (3,))
    with pytest.raises(ValueError):
        GraphFamilySpec("Join", (1, 2))
    with pytest.raises(ValueError):
        cycle_graph(2)


def test_disjoint_union_shifts_ids():
    g = disjoint_union(complete_graph(2), complete_graph(2))
    assert g.edges == frozenset({(0, 1), (2, 3)})
    assert not g.is_connected()


@given(graphs())
def test_handshake(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.edge_count()


@given(graphs(min_n=1, max_n=5), graphs(min_n=1, max_n=5))
def test_join_edge_count(a, b):
    assert join(a, b).edge_count() == a.edge_count() + b.edge_count() + a.n * b.n


def _bipartite_bruteforce(g: Graph) -> bool:
    # independent oracle: try every 2-coloring
    for bits in range(1 << g.n):
        if all((bits >> u & 1) != (bits >> v & 1) for u, v in g.edges):
            return True
    return g.n == 0


def test_bipartite_matches_bruteforce_exhaustively():
    for n in range(1, 6):
        for g in all_graphs(n):
            assert g.is_bipartite() == _bipartite_bruteforce(g)


@settings(max_examples=60)
@given(graphs(max_n=8))
def test_bipartite_matches_bruteforce_random(g):
    assert g.is_bipartite() == _bipartite_bruteforce(g)


@given(graphs(max_n=6))
def test_complement_involution(g):
    assert complement(complement(g)) == g
    full = g.n * (g.n - 1) // 2
    assert complement(g).edge_count() == full - g.edge_count()
