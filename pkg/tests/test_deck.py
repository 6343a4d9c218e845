import pytest

from deckbench import (
    Deck,
    IllegitimateDeckError,
    build_deck,
    canonical_form,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    random_graph,
)
from deckbench.graph import disjoint_union


def test_deck_of_k4_is_uniform():
    d = build_deck(complete_graph(4))
    assert d.n == 4
    assert len(d.cards) == 1
    code, mult = d.cards[0]
    assert mult == 4
    assert code == canonical_form(complete_graph(3))


def test_deck_of_path():
    d = build_deck(path_graph(4))
    # deleting an endpoint gives P3, an inner vertex gives P2 + K1
    assert d.multiplicity(canonical_form(path_graph(3))) == 2
    assert sum(m for _, m in d.cards) == 4


def test_edge_count_kelly():
    for g in (path_graph(6), cycle_graph(7), petersen_graph()):
        assert build_deck(g).edge_count() == g.edge_count()


def test_deleted_vertex_degree():
    g = path_graph(5)
    d = build_deck(g)
    degrees = sorted(d.deleted_vertex_degree(code) for code, mult in d.cards for _ in range(mult))
    assert degrees == sorted(g.degrees())


def test_degree_multiset_matches_degree_sequence():
    for g in (cycle_graph(6), petersen_graph(), random_graph(7, 0.4, seed=2)):
        d = build_deck(g)
        assert d.degree_multiset() == g.degree_sequence()


def test_complement_commutes():
    for seed in range(5):
        g = random_graph(7, 0.5, seed=seed)
        assert build_deck(g).complement() == build_deck(g.complement())


def test_connected_origin():
    assert build_deck(cycle_graph(6)).connected_origin()
    assert build_deck(path_graph(5)).connected_origin()
    two = disjoint_union(path_graph(3), path_graph(3))
    assert not build_deck(two).connected_origin()


def test_json_roundtrip():
    d = build_deck(petersen_graph())
    assert Deck.from_json(d.to_json()) == d


def test_validation_rejects_bad_multiplicity():
    d = build_deck(cycle_graph(5))
    code, _ = d.cards[0]
    with pytest.raises(IllegitimateDeckError):
        Deck(5, ((code, 4),))  # multiplicities must sum to n


def test_validation_rejects_wrong_card_order():
    small = canonical_form(path_graph(3))
    with pytest.raises(IllegitimateDeckError):
        Deck(5, ((small, 5),))


def test_deck_is_label_invariant():
    g = random_graph(8, 0.5, seed=11)
    h = g.relabel([3, 1, 7, 0, 5, 2, 6, 4])
    assert build_deck(g) == build_deck(h)
