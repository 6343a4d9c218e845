import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deckbench import (
    Graph,
    InvalidPairError,
    NotDominatingPairError,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    random_graph,
)
from deckbench.graph import disjoint_union, empty_graph


def small_graphs():
    return st.integers(2, 8).flatmap(
        lambda n: st.builds(
            lambda edges: Graph.from_edges(n, edges),
            st.lists(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                    lambda e: e[0] != e[1]
                ),
                max_size=n * (n - 1) // 2,
            ),
        )
    )


def test_from_edges_basic():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.edge_count() == 3
    assert g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.degree_sequence() == (1, 1, 2, 2)


def test_from_edges_rejects_loops_and_range():
    with pytest.raises(InvalidPairError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(InvalidPairError):
        Graph.from_edges(3, [(0, 3)])


def test_named_graphs():
    assert complete_graph(5).edge_count() == 10
    assert path_graph(5).edge_count() == 4
    assert cycle_graph(5).edge_count() == 5
    pet = petersen_graph()
    assert pet.n == 10
    assert pet.degree_sequence() == (3,) * 10
    assert pet.diameter() == 2


def test_complement_involution():
    g = path_graph(5)
    assert g.complement().complement() == g
    assert g.complement().edge_count() == 10 - 4


def test_delete_vertex():
    c4 = cycle_graph(4)
    card = c4.delete_vertex(0)
    assert card.n == 3
    assert card.edge_count() == 2
    assert card.degree_sequence() == (1, 1, 2)


def test_with_vertex_inverts_delete():
    g = cycle_graph(5)
    card = g.delete_vertex(4)
    # reattach with the same neighbourhood, vertex lands at index n-1
    rebuilt = card.with_vertex([0, 3])
    assert rebuilt.degree_sequence() == g.degree_sequence()
    assert rebuilt.edge_count() == g.edge_count()


def test_distances_and_diameter():
    p4 = path_graph(4)
    assert p4.distances_from(0) == [0, 1, 2, 3]
    assert p4.diameter() == 3
    two = disjoint_union(path_graph(2), path_graph(2))
    assert not two.is_connected()
    assert two.diameter() == math.inf


def test_pair_profile_roles():
    p4 = path_graph(4)
    p = p4.pair_profile(0, 2)  # common neighbour 1, vertex 2 also sees 3
    assert not p.adjacent
    assert (p.k1, p.k2, p.k3) == (1, 0, 1)
    assert p.key() == (1, 0, 1)
    q = p4.pair_profile(2, 0)
    assert (q.k1, q.k2, q.k3) == (1, 1, 0)
    assert q.key() == (1, 0, 1)


def test_geodesic_counts():
    c4 = cycle_graph(4)
    assert c4.geodesic_count(0, 2) == 2
    assert c4.max_geodesic_count() == 2
    assert c4.is_k_geodetic(2)
    assert not c4.is_k_geodetic(1)
    assert petersen_graph().max_geodesic_count() == 1


def test_domination_numbers():
    assert complete_graph(5).domination_number() == 1
    assert cycle_graph(5).domination_number() == 2
    assert cycle_graph(7).domination_number() == 3
    assert petersen_graph().domination_number() == 3
    assert not cycle_graph(7).has_dominating_pair()
    assert cycle_graph(5).has_dominating_pair()


def test_domination_partition():
    c5 = cycle_graph(5)
    part = c5.domination_partition(0, 2)
    assert part.xu and part.xv
    assert not part.uv_adjacent
    with pytest.raises(NotDominatingPairError):
        path_graph(6).domination_partition(0, 1)


def test_relabel_preserves_structure():
    g = path_graph(5)
    h = g.relabel([4, 3, 2, 1, 0])
    assert h.degree_sequence() == g.degree_sequence()
    assert h.has_edge(4, 3)


def test_random_graph_seeded():
    a = random_graph(8, 0.5, seed=3)
    b = random_graph(8, 0.5, seed=3)
    assert a == b
    assert random_graph(8, 0.0, seed=1) == empty_graph(8)
    assert random_graph(8, 1.0, seed=1) == complete_graph(8)


@settings(max_examples=60)
@given(small_graphs())
def test_degree_sum_is_twice_edges(g):
    assert sum(g.degrees()) == 2 * g.edge_count()


@settings(max_examples=60)
@given(small_graphs())
def test_complement_degree(g):
    comp = g.complement()
    for v in range(g.n):
        assert g.degree(v) + comp.degree(v) == g.n - 1


@settings(max_examples=60)
@given(small_graphs())
def test_pair_profile_partitions_neighbours(g):
    for u in range(g.n):
        for v in range(u + 1, g.n):
            p = g.pair_profile(u, v)
            off = 2 if p.adjacent else 0
            assert 2 * p.k1 + p.k2 + p.k3 + off == g.degree(u) + g.degree(v)
