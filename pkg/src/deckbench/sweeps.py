"""Exhaustive and sampled verification sweeps over small-graph corpora."""
from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass, field

from .canon import are_isomorphic, canonical_form, enumerate_graphs, graph6_encode
from .deck import build_deck
from .graph import Graph, random_graph
from .params import class_membership, dav_table, dv_table, pav_vector, pv_vector
from .recognize import HSubclass, Refusal, certify_gamma_at_least_3, recognize_H
from .reconstruct import (
    HypothesisViolatedError,
    NotInScopeError,
    reconstruct_C1,
    reconstruct_C2,
)
from .solver import (
    GammaCertificate,
    identity_reports,
    solve_dav_from_deck,
    solve_dv_from_deck,
    solve_pav_from_deck,
    solve_pv_from_deck,
)

SUITES = ("identities", "solvers", "recognizer", "reconstructor", "lemmas")


@dataclass
class SweepResult:
    suite: str
    n_values: list[int]
    graphs_checked: int = 0
    checks: int = 0
    violations: list[dict] = field(default_factory=list)
    witnesses: list[dict] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary_row(self) -> dict:
        return {
            "suite": self.suite,
            "n_values": ",".join(map(str, self.n_values)),
            "graphs_checked": self.graphs_checked,
            "checks": self.checks,
            "violations": len(self.violations),
            "witnesses": len(self.witnesses),
        }


def sample_connected_gamma3(n: int, count: int, seed: int) -> list[Graph]:
    """Seeded rejection sampler for connected graphs with domination number >= 3."""
    rng = random.Random(seed)
    out: list[Graph] = []
    while len(out) < count:
        p = rng.uniform(0.2, 0.4)
        g = random_graph(n, p, rng.randrange(1 << 32))
        if g.is_connected() and not g.has_dominating_pair():
            out.append(g)
    return out


# -- identity suite -----------------------------------------------------------------


def verify_identities(n_values: list[int]) -> SweepResult:
    """Corrected coefficients must have zero residual on every graph and triple;
    nonzero literal-coefficient residuals are collected as witnesses."""
    res = SweepResult("identities", list(n_values))
    for n in n_values:
        for g in enumerate_graphs(n):
            res.graphs_checked += 1
            g6 = None
            for mode in ("dv", "dav"):
                for report in identity_reports(g, mode):
                    res.checks += 1
                    if report.residual_corrected != 0:
                        res.violations.append(
                            {
                                "graph6": graph6_encode(g),
                                "mode": mode,
                                "triple": report.triple,
                                "lhs": report.lhs,
                                "rhs_corrected": report.rhs_corrected,
                            }
                        )
                    if report.residual_literal != 0:
                        g6 = g6 or graph6_encode(g)
                        res.witnesses.append(
                            {
                                "graph6": g6,
                                "mode": mode,
                                "triple": report.triple,
                                "residual_literal": report.residual_literal,
                            }
                        )
    bad_targets = {
        (w["mode"], tuple(w["triple"]))
        for w in res.witnesses
        if abs(w["triple"][1] - w["triple"][2]) != 1
    }
    for mode, triple in sorted(bad_targets):
        res.violations.append(
            {
                "error": "literal residual outside the |k2-k3| = 1 regime",
                "mode": mode,
                "triple": triple,
            }
        )
    return res


# -- solver suite ----------------------------------------------------------------------


def _table_degree_multiset(solved_dv, solved_dav) -> tuple[int, ...]:
    degs: Counter = Counter()
    for (k1, k2, k3), c in solved_dv.entries.items():
        degs[k1 + k2] += c
        degs[k1 + k3] += c
    for (k1, k2, k3), c in solved_dav.entries.items():
        degs[k1 + k2 + 1] += c
        degs[k1 + k3 + 1] += c
    return tuple(sorted(degs.elements()))


def _check_solver_on(g: Graph, res: SweepResult) -> None:
    d = build_deck(g)
    cert = certify_gamma_at_least_3(d)
    if isinstance(cert, Refusal):
        res.violations.append(
            {"graph6": graph6_encode(g), "error": f"certificate refused: {cert.reason}"}
        )
        return
    direct_dv = dv_table(g)
    direct_dav = dav_table(g)
    solved_dv = solve_dv_from_deck(d, cert)
    solved_dav = solve_dav_from_deck(d, cert)
    res.checks += 1
    top = g.n - 2
    for direct, solved, mode in (
        (direct_dv, solved_dv, "dv"),
        (direct_dav, solved_dav, "dav"),
    ):
        if any(sum(t) >= top for t in direct.entries):
            res.violations.append(
                {"graph6": graph6_encode(g), "mode": mode, "error": "nonzero top level"}
            )
        want = {t: c for t, c in direct.entries.items() if sum(t) <= g.n - 3}
        if solved.entries != want:
            res.violations.append(
                {"graph6": graph6_encode(g), "mode": mode, "error": "solver != oracle"}
            )
    # degree recovery cross-check against the deck degree multiset
    expected = tuple(sorted(deg for deg in g.degrees() for _ in range(g.n - 1)))
    if _table_degree_multiset(solved_dv, solved_dav) != expected:
        res.violations.append(
            {"graph6": graph6_encode(g), "error": "degree recovery mismatch"}
        )


def verify_solvers(
    n_values: list[int], n9_samples: int = 0, seed: int = 0
) -> SweepResult:
    """Deck solvers against direct tables: dv/dav on connected gamma >= 3 graphs,
    pv/pav on all connected graphs."""
    res = SweepResult("solvers", list(n_values))
    gamma3_seen = 0
    for n in n_values:
        if n > 9:
            continue
        if n == 9:
            for g in sample_connected_gamma3(9, n9_samples, seed):
                res.graphs_checked += 1
                gamma3_seen += 1
                _check_solver_on(g, res)
            continue
        for g in enumerate_graphs(n, lambda h: h.is_connected()):
            res.graphs_checked += 1
            pv_solved = solve_pv_from_deck(build_deck(g))
            pav_solved = solve_pav_from_deck(build_deck(g))
            res.checks += 1
            if pv_solved != pv_vector(g) or pav_solved != pav_vector(g):
                res.violations.append(
                    {"graph6": graph6_encode(g), "error": "pv/pav recovery mismatch"}
                )
            if n >= 4 and not g.has_dominating_pair():
                gamma3_seen += 1
                _check_solver_on(g, res)
    res.notes["gamma3_graphs"] = gamma3_seen
    return res


# -- recognizer suite ---------------------------------------------------------------------


def _ground_truth_subclass(g: Graph) -> HSubclass:
    comp = g.complement()
    if g.edge_count() == g.n * (g.n - 1) // 2:
        return HSubclass.COMPLETE_GRAPH
    gamma2 = g.domination_number() == 2
    if not comp.is_connected():
        return HSubclass.COMPLEMENT_DISCONNECTED
    if not gamma2:
        return HSubclass.NOT_IN_H
    return HSubclass.H2 if comp.diameter() == 2 else HSubclass.H3


def verify_recognizer(n_values: list[int]) -> SweepResult:
    """recognize_H verdicts against domination/diameter ground truth."""
    res = SweepResult("recognizer", list(n_values))
    for n in n_values:
        for g in enumerate_graphs(n, lambda h: h.is_connected()):
            res.graphs_checked += 1
            res.checks += 1
            report = recognize_H(build_deck(g))
            truth_gamma2 = g.domination_number() == 2
            if report.gamma_is_two != truth_gamma2:
                res.violations.append(
                    {
                        "graph6": graph6_encode(g),
                        "error": "gamma verdict mismatch",
                        "reported": report.gamma_is_two,
                        "truth": truth_gamma2,
                    }
                )
            if report.subclass != _ground_truth_subclass(g):
                res.violations.append(
                    {
                        "graph6": graph6_encode(g),
                        "error": "subclass mismatch",
                        "reported": report.subclass.value,
                        "truth": _ground_truth_subclass(g).value,
                    }
                )
    return res


# -- lemma suite ------------------------------------------------------------------------------


def verify_lemmas(n_values: list[int]) -> SweepResult:
    """Connected with diameter >= 3 forces gamma(complement) = 2; H1 is empty."""
    res = SweepResult("lemmas", list(n_values))
    for n in n_values:
        for g in enumerate_graphs(n, lambda h: h.is_connected()):
            res.graphs_checked += 1
            res.checks += 1
            diam = g.diameter()
            if diam != math.inf and diam >= 3:
                if g.complement().domination_number() != 2:
                    res.violations.append(
                        {"graph6": graph6_encode(g), "error": "diam>=3 lemma fails"}
                    )
            # H1 membership: gamma = 2 with complete complement
            if g.domination_number() == 2 and g.edge_count() == 0:
                res.violations.append(
                    {"graph6": graph6_encode(g), "error": "H1 is not empty"}
                )
    return res


# -- reconstructor suite ----------------------------------------------------------------------


def _degree_condition_holds(g: Graph, attach_triples: list[tuple[int, int, int]]) -> bool:
    from .params import s_set

    for x in range(g.n):
        card = g.delete_vertex(x)
        deg = g.degree(x)
        for a, b, c in attach_triples:
            if len(s_set(card, a, b, c).members) == deg:
                return True
            if len(s_set(card, a, c, b).members) == deg:
                return True
    return False


def _check_reconstruction(g: Graph, variant: str, res: SweepResult) -> None:
    d = build_deck(g)
    runner = reconstruct_C1 if variant == "C1" else reconstruct_C2
    try:
        outcome = runner(d)
    except NotInScopeError as exc:
        res.violations.append(
            {
                "graph6": graph6_encode(g),
                "variant": variant,
                "error": f"hypotheses met but pipeline out of scope: {exc.reason}",
            }
        )
        return
    except HypothesisViolatedError:
        res.violations.append(
            {
                "graph6": graph6_encode(g),
                "variant": variant,
                "error": "qualifying card but no validated candidate",
            }
        )
        return
    for cand in outcome.validated:
        if build_deck(cand) != d:
            res.violations.append(
                {"graph6": graph6_encode(g), "variant": variant, "error": "unsound candidate"}
            )
        if not are_isomorphic(cand, g):
            res.witnesses.append(
                {
                    "graph6": graph6_encode(g),
                    "variant": variant,
                    "candidate": graph6_encode(cand),
                    "finding": "validated candidate not isomorphic to original",
                }
            )
    if not outcome.unique_up_to_isomorphism():
        # reportable finding; the gate falls back to soundness above
        res.witnesses.append(
            {
                "graph6": graph6_encode(g),
                "variant": variant,
                "finding": "multiple non-isomorphic validated candidates",
            }
        )
    elif not are_isomorphic(outcome.candidate, g):
        res.violations.append(
            {
                "graph6": graph6_encode(g),
                "variant": variant,
                "error": "reconstruction not isomorphic to original",
            }
        )


def verify_reconstructor(
    n_values: list[int], n9_samples: int = 0, seed: int = 0
) -> SweepResult:
    """Full-hypothesis graphs must reconstruct to the original up to isomorphism."""
    res = SweepResult("reconstructor", list(n_values))
    eligible = {"C1": 0, "C2": 0}

    def consider(g: Graph) -> None:
        res.graphs_checked += 1
        if g.has_dominating_pair() or g.complement().has_dominating_pair():
            return
        membership = class_membership(g)
        if not membership.in_g:
            return
        res.notes["in_G"] = res.notes.get("in_G", 0) + 1
        if membership.c1_witnesses:
            attach = [(k1 - 1, k2, k3) for k1, k2, k3 in membership.c1_witnesses]
            if _degree_condition_holds(g, attach):
                eligible["C1"] += 1
                res.checks += 1
                _check_reconstruction(g, "C1", res)
        if membership.c2_witnesses:
            attach = []
            for (k1, k2, k3), side in membership.c2_witnesses:
                attach.append((k1, k2 - 1, k3) if side == "k2" else (k1, k2, k3 - 1))
            if _degree_condition_holds(g, attach):
                eligible["C2"] += 1
                res.checks += 1
                _check_reconstruction(g, "C2", res)

    for n in n_values:
        if n == 9:
            rng = random.Random(seed)
            for _ in range(n9_samples):
                g = random_graph(9, rng.uniform(0.3, 0.6), rng.randrange(1 << 32))
                if g.is_connected():
                    consider(g)
            continue
        if n > 9:
            continue
        for g in enumerate_graphs(n, lambda h: h.is_connected()):
            consider(g)
    res.notes["eligible"] = eligible
    return res


def run_suite(
    name: str, n_values: list[int], seed: int = 0, budget: int = 0
) -> list[SweepResult]:
    """Dispatch one named suite (or 'all'); budget is the n=9 sample count."""
    names = SUITES if name == "all" else (name,)
    out = []
    for suite in names:
        if suite == "identities":
            out.append(verify_identities(n_values))
        elif suite == "solvers":
            out.append(verify_solvers(n_values, n9_samples=budget, seed=seed))
        elif suite == "recognizer":
            out.append(verify_recognizer([n for n in n_values if n <= 8]))
        elif suite == "lemmas":
            out.append(verify_lemmas([n for n in n_values if n <= 8]))
        elif suite == "reconstructor":
            out.append(verify_reconstructor(n_values, n9_samples=budget, seed=seed))
        else:
            raise ValueError(f"unknown suite {suite!r}")
    return out
