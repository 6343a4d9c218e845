"""Reconstruction of a graph from its deck via S-set vertex re-attachment."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional

from .canon import CanonicalCode, canonical_form, graph6_encode
from .deck import Deck, build_deck
from .graph import Graph
from .params import Triple, s_set
from .recognize import Refusal, certify_gamma_at_least_3
from .solver import GammaCertificate, solve_dv_from_deck


class NotInScopeError(Exception):
    """The deck does not meet the hypotheses of the reconstruction procedure."""

    def __init__(self, reason: str, attempts: tuple = ()):
        self.reason = reason
        self.attempts = attempts
        super().__init__(reason)


class HypothesisViolatedError(Exception):
    """A qualifying card existed but no attachment validated against the deck."""

    def __init__(self, attempts: tuple):
        self.attempts = attempts
        super().__init__(f"no validated candidate among {len(attempts)} attempts")


@dataclass(frozen=True)
class ReconstructionAttempt:
    card: CanonicalCode
    triple: Triple
    attach_triple: Triple
    attach_set: frozenset[int]
    deleted_degree: int
    candidate: Optional[Graph]
    validated: bool

    def to_row(self) -> dict:
        return {
            "card_graph6": graph6_encode(self.card.to_graph()),
            "triple": list(self.triple),
            "attach_triple": list(self.attach_triple),
            "s_size": len(self.attach_set),
            "degree": self.deleted_degree,
            "attempted": self.candidate is not None,
            "validated": self.validated,
        }


@dataclass(frozen=True)
class ReconstructionOutcome:
    variant: str
    attempts: tuple[ReconstructionAttempt, ...]
    validated: tuple[Graph, ...]

    @property
    def candidate(self) -> Graph:
        return self.validated[0]

    def unique_up_to_isomorphism(self) -> bool:
        codes = {canonical_form(g) for g in self.validated}
        return len(codes) == 1

    def to_json(self) -> str:
        return json.dumps(
            {
                "variant": self.variant,
                "candidate_graph6": graph6_encode(self.candidate),
                "validated_count": len(self.validated),
                "unique_up_to_isomorphism": self.unique_up_to_isomorphism(),
                "attempts": [a.to_row() for a in self.attempts],
            },
            indent=2,
        )


def attach_vertex(card: Graph, s: Iterable[int]) -> Graph:
    """Add a vertex adjacent to exactly s; the card stays an induced subgraph."""
    return card.with_vertex(s)


def _certificate(d: Deck, certificate: Optional[GammaCertificate]) -> GammaCertificate:
    if certificate is not None:
        return certificate
    result = certify_gamma_at_least_3(d)
    if isinstance(result, Refusal):
        raise NotInScopeError(f"certificate refused: {result.reason}")
    return result


def _run(d: Deck, certificate: Optional[GammaCertificate], variant: str) -> ReconstructionOutcome:
    cert = _certificate(d, certificate)
    dv = solve_dv_from_deck(d, cert)

    # (positive triple, triple whose S-set re-attaches the vertex)
    targets: list[tuple[Triple, Triple]] = []
    for (k1, k2, k3), count in sorted(dv.entries.items()):
        if count <= 0:
            continue
        if variant == "C1":
            if k1 >= 1 and dv.lookup(k1 - 1, k2, k3) == 0:
                targets.append(((k1, k2, k3), (k1 - 1, k2, k3)))
        else:
            if abs(k2 - k3) >= 2:
                if k2 >= 1 and dv.lookup(k1, k2 - 1, k3) == 0:
                    targets.append(((k1, k2, k3), (k1, k2 - 1, k3)))
                if k3 >= 1 and dv.lookup(k1, k2, k3 - 1) == 0:
                    targets.append(((k1, k2, k3), (k1, k2, k3 - 1)))
    if not targets:
        raise NotInScopeError(f"no {variant} zero-pattern triple in the solved dv table")

    m = d.edge_count()
    attempts: list[ReconstructionAttempt] = []
    validated: list[Graph] = []
    for code, _mult in d.cards:
        card = code.to_graph()
        degree = m - code.edge_count()
        for triple, (a, b, c) in targets:
            # S-sets are role-ordered; attempt both orders and let deck
            # validation arbitrate
            sets = {s_set(card, a, b, c).members}
            sets.add(s_set(card, a, c, b).members)
            for members in sorted(sets, key=sorted):
                candidate = None
                ok = False
                if len(members) == degree:
                    candidate = attach_vertex(card, members)
                    ok = build_deck(candidate) == d
                    if ok:
                        validated.append(candidate)
                attempts.append(
                    ReconstructionAttempt(
                        card=code,
                        triple=triple,
                        attach_triple=(a, b, c),
                        attach_set=members,
                        deleted_degree=degree,
                        candidate=candidate,
                        validated=ok,
                    )
                )
    if not any(a.candidate is not None for a in attempts):
        raise NotInScopeError(
            f"no card meets the {variant} degree condition", tuple(attempts)
        )
    if not validated:
        raise HypothesisViolatedError(tuple(attempts))
    return ReconstructionOutcome(
        variant=variant, attempts=tuple(attempts), validated=tuple(validated)
    )


def reconstruct_C1(
    d: Deck, certificate: Optional[GammaCertificate] = None
) -> ReconstructionOutcome:
    """Re-attach the deleted vertex using the common-neighbour zero pattern."""
    return _run(d, certificate, "C1")


def reconstruct_C2(
    d: Deck, certificate: Optional[GammaCertificate] = None
) -> ReconstructionOutcome:
    """Re-attach the deleted vertex using the exclusive-neighbour zero patterns."""
    return _run(d, certificate, "C2")
