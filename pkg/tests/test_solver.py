import pytest

from deckbench import (
    CertificateError,
    GammaCertificate,
    IllegitimateDeckError,
    build_deck,
    check_identity,
    complete_graph,
    cycle_graph,
    dav_table,
    dv_table,
    identity_reports,
    path_graph,
    pav_vector,
    petersen_graph,
    pv_vector,
    random_graph,
    solve_dav_from_deck,
    solve_dv_from_deck,
    solve_pav_from_deck,
    solve_pv_from_deck,
)
from deckbench.recognize import Refusal, certify_gamma_at_least_3
from deckbench.solver import canonical_triples


def test_canonical_triples():
    triples = list(canonical_triples(2))
    assert triples == [(0, 0, 2), (0, 1, 1), (1, 0, 1), (2, 0, 0)]
    assert all(k2 <= k3 for _, k2, k3 in triples)


def test_identity_corrected_zero_on_named_graphs():
    for g in (cycle_graph(5), cycle_graph(7), path_graph(6), petersen_graph()):
        for mode in ("dv", "dav"):
            for report in identity_reports(g, mode):
                assert report.residual_corrected == 0, (g, mode, report.triple)


def test_identity_literal_residual_regime():
    # literal coefficients may only disagree when the exclusive counts differ by 1
    for seed in range(8):
        g = random_graph(7, 0.5, seed=seed)
        for mode in ("dv", "dav"):
            for report in identity_reports(g, mode):
                if report.residual_literal != 0:
                    k1, k2, k3 = report.triple
                    assert abs(k2 - k3) == 1


def test_check_identity_validates_input():
    g = cycle_graph(6)
    with pytest.raises(ValueError):
        check_identity(g, "bogus", 0, 0, 0)
    with pytest.raises(ValueError):
        check_identity(g, "dv", 0, 2, 1)  # needs k2 <= k3
    with pytest.raises(ValueError):
        check_identity(g, "dv", 4, 0, 0)  # k1+k2+k3 > n-3


def test_pv_recovery_small_graphs():
    for g in (cycle_graph(4), cycle_graph(5), path_graph(4), complete_graph(4), path_graph(3)):
        d = build_deck(g)
        assert solve_pv_from_deck(d) == pv_vector(g)
        assert solve_pav_from_deck(d) == pav_vector(g)


def test_pv_recovery_random():
    for seed in range(10):
        g = random_graph(8, 0.5, seed=seed)
        if not g.is_connected():
            continue
        d = build_deck(g)
        assert solve_pv_from_deck(d) == pv_vector(g)
        assert solve_pav_from_deck(d) == pav_vector(g)


def test_dv_recovery_gamma3():
    for g in (cycle_graph(7), cycle_graph(8), petersen_graph()):
        d = build_deck(g)
        cert = certify_gamma_at_least_3(d)
        assert not isinstance(cert, Refusal)
        solved = solve_dv_from_deck(d, cert)
        want = {t: c for t, c in dv_table(g).entries.items() if sum(t) <= g.n - 3}
        assert solved.entries == want
        solved_av = solve_dav_from_deck(d, cert)
        want_av = {t: c for t, c in dav_table(g).entries.items() if sum(t) <= g.n - 3}
        assert solved_av.entries == want_av


def test_forged_certificate_detected():
    # C5 has a dominating pair, so a certificate for it is a forgery
    d = build_deck(cycle_graph(5))
    forged = GammaCertificate(d)
    with pytest.raises((IllegitimateDeckError, CertificateError)):
        solve_dv_from_deck(d, forged)


def test_certificate_deck_binding():
    d7 = build_deck(cycle_graph(7))
    d8 = build_deck(cycle_graph(8))
    cert = certify_gamma_at_least_3(d7)
    with pytest.raises(CertificateError):
        solve_dv_from_deck(d8, cert)


def test_refusal_on_gamma2_deck():
    assert isinstance(certify_gamma_at_least_3(build_deck(cycle_graph(5))), Refusal)
    assert isinstance(certify_gamma_at_least_3(build_deck(complete_graph(5))), Refusal)


def test_solver_zero_top_level():
    d = build_deck(petersen_graph())
    cert = certify_gamma_at_least_3(d)
    solved = solve_dv_from_deck(d, cert)
    assert all(sum(t) <= d.n - 3 for t in solved.entries)
