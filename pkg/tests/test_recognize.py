import json

from deckbench import (
    ComplementDiamCategory,
    HSubclass,
    Refusal,
    build_deck,
    certify_gamma_at_least_3,
    complement_diam_category,
    complete_graph,
    cycle_graph,
    enumerate_graphs,
    path_graph,
    petersen_graph,
    recognize_H,
)
from deckbench.recognize import GammaCertificate


def test_c5_is_h2():
    report = recognize_H(build_deck(cycle_graph(5)))
    assert report.gamma_is_two
    assert report.subclass == HSubclass.H2
    assert report.complement_diam_category == ComplementDiamCategory.TWO


def test_p4_is_h3():
    report = recognize_H(build_deck(path_graph(4)))
    assert report.gamma_is_two
    assert report.subclass == HSubclass.H3


def test_petersen_not_in_h():
    report = recognize_H(build_deck(petersen_graph()))
    assert not report.gamma_is_two
    assert report.subclass == HSubclass.NOT_IN_H


def test_complete_graph_subclass():
    report = recognize_H(build_deck(complete_graph(5)))
    assert not report.gamma_is_two  # a single vertex dominates
    assert report.subclass == HSubclass.COMPLETE_GRAPH
    assert (
        report.complement_diam_category == ComplementDiamCategory.DISCONNECTED_COMPLEMENT
    )


def test_star_subclass():
    star = path_graph(2).with_vertex([0]).with_vertex([0]).with_vertex([0])
    assert star.degree_sequence() == (1, 1, 1, 1, 4)
    report = recognize_H(build_deck(star))
    assert not report.gamma_is_two  # the centre dominates alone
    assert report.subclass == HSubclass.COMPLEMENT_DISCONNECTED


def test_category_matches_complement_diameter():
    import math

    for g in enumerate_graphs(6, lambda h: h.is_connected()):
        cat = complement_diam_category(build_deck(g))
        comp = g.complement()
        diam = comp.diameter() if comp.is_connected() else math.inf
        if not comp.is_connected():
            assert cat == ComplementDiamCategory.DISCONNECTED_COMPLEMENT
        elif diam == 1:
            assert cat == ComplementDiamCategory.ONE
        elif diam == 2:
            assert cat == ComplementDiamCategory.TWO
        else:
            assert cat == ComplementDiamCategory.THREE_OR_MORE


def test_gamma_verdict_ground_truth_n6():
    for g in enumerate_graphs(6, lambda h: h.is_connected()):
        report = recognize_H(build_deck(g))
        assert report.gamma_is_two == (g.domination_number() == 2)


def test_certificate_issued_only_for_gamma3():
    cert = certify_gamma_at_least_3(build_deck(cycle_graph(7)))
    assert isinstance(cert, GammaCertificate)
    assert isinstance(certify_gamma_at_least_3(build_deck(cycle_graph(6))), Refusal)


def test_report_json():
    obj = json.loads(recognize_H(build_deck(cycle_graph(5))).to_json())
    assert obj["gamma_is_two"] is True
    assert obj["subclass"] == "H2"
