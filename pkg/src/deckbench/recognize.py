"""Deck-only recognition of the domination-number-2 class and its subclasses."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .deck import Deck
from .solver import GammaCertificate, solve_pav_from_deck, solve_pv_from_deck


class ComplementDiamCategory(str, Enum):
    ONE = "one"
    TWO = "two"
    THREE_OR_MORE = "three_or_more"
    DISCONNECTED_COMPLEMENT = "disconnected_complement"


class HSubclass(str, Enum):
    H2 = "H2"
    H3 = "H3"
    NOT_IN_H = "not_in_H"
    COMPLETE_GRAPH = "complete_graph"
    COMPLEMENT_DISCONNECTED = "complement_disconnected"


@dataclass(frozen=True)
class Refusal:
    """Negative answer from the certifier; not an error."""

    reason: str


@dataclass(frozen=True)
class RecognitionReport:
    complement_diam_category: ComplementDiamCategory
    gamma_is_two: bool
    subclass: HSubclass
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(
            {
                "complement_diam_category": self.complement_diam_category.value,
                "gamma_is_two": self.gamma_is_two,
                "subclass": self.subclass.value,
                "evidence": self.evidence,
            },
            indent=2,
        )


def _all_cards_complete(d: Deck) -> bool:
    full = (d.n - 1) * (d.n - 2) // 2
    return all(code.edge_count() == full for code, _ in d.cards)


def _category(d: Deck) -> tuple[ComplementDiamCategory, dict]:
    if d.n < 3:
        raise ValueError("recognition needs original order >= 3")
    dbar = d.complement()
    if _all_cards_complete(dbar):
        return ComplementDiamCategory.ONE, {}
    if not dbar.connected_origin():
        return ComplementDiamCategory.DISCONNECTED_COMPLEMENT, {}
    pv0 = solve_pv_from_deck(dbar)[0]
    evidence = {"pv0_complement": pv0}
    if pv0 == 0:
        return ComplementDiamCategory.TWO, evidence
    return ComplementDiamCategory.THREE_OR_MORE, evidence


def complement_diam_category(d: Deck) -> ComplementDiamCategory:
    """Whether diam of the complement is 1, 2, >= 3, or undefined (disconnected)."""
    return _category(d)[0]


def recognize_H(d: Deck) -> RecognitionReport:
    """Decide gamma(G) = 2 membership and subclass from the deck alone."""
    category, evidence = _category(d)

    if category is ComplementDiamCategory.ONE:
        # complement complete => G is edgeless, gamma = n > 2
        return RecognitionReport(category, False, HSubclass.NOT_IN_H, evidence)

    if category is ComplementDiamCategory.DISCONNECTED_COMPLEMENT:
        # G is a join, so gamma <= 2; gamma = 1 exactly when some vertex is
        # universal, which the deck degree multiset shows directly.
        max_degree = d.max_degree()
        evidence["max_degree"] = max_degree
        gamma_is_two = max_degree != d.n - 1
        subclass = (
            HSubclass.COMPLETE_GRAPH
            if _all_cards_complete(d)
            else HSubclass.COMPLEMENT_DISCONNECTED
        )
        return RecognitionReport(category, gamma_is_two, subclass, evidence)

    if category is ComplementDiamCategory.TWO:
        pav0 = solve_pav_from_deck(d.complement())[0]
        evidence["pav0_complement"] = pav0
        if pav0 > 0:
            return RecognitionReport(category, True, HSubclass.H2, evidence)
        return RecognitionReport(category, False, HSubclass.NOT_IN_H, evidence)

    # diam(complement) >= 3 forces gamma(G) = 2
    return RecognitionReport(category, True, HSubclass.H3, evidence)


def certify_gamma_at_least_3(d: Deck) -> GammaCertificate | Refusal:
    """Deck-only gate for the dv/dav solvers; refusal is a value, not an error."""
    if d.max_degree() == d.n - 1:
        return Refusal("gamma = 1: the deck shows a universal vertex")
    report = recognize_H(d)
    if report.gamma_is_two:
        return Refusal(f"gamma = 2 (subclass {report.subclass.value})")
    return GammaCertificate(deck=d)
