"""Decks: multisets of unlabeled vertex-deleted cards and their classical aggregates."""
from __future__ import annotations

import json
from typing import Iterator

from .canon import CanonicalCode, canonical_form, graph6_decode, graph6_encode
from .graph import Graph


class IllegitimateDeckError(ValueError):
    """A deck-derived quantity came out non-integral or otherwise impossible."""


class Deck:
    """Multiset of canonical (n-1)-vertex cards of an order-n graph."""

    __slots__ = ("n", "cards", "_hash")

    def __init__(self, n: int, cards: Iterator[tuple[CanonicalCode, int]] | list):
        items = sorted(cards, key=lambda cm: cm[0].data)
        if n < 2:
            raise IllegitimateDeckError("a deck needs original order >= 2")
        for code, mult in items:
            if code.n != n - 1:
                raise IllegitimateDeckError(f"card of order {code.n} in a deck of order {n}")
            if mult < 1:
                raise IllegitimateDeckError("card multiplicities must be >= 1")
        if sum(m for _, m in items) != n:
            raise IllegitimateDeckError("card multiplicities must sum to the original order")
        self.n = n
        self.cards = tuple(items)
        self._hash = hash((n, self.cards))

    @classmethod
    def from_graph(cls, g: Graph) -> "Deck":
        if g.n < 2:
            raise ValueError("deck construction needs at least 2 vertices")
        counts: dict[CanonicalCode, int] = {}
        for v in range(g.n):
            code = canonical_form(g.delete_vertex(v))
            counts[code] = counts.get(code, 0) + 1
        return cls(g.n, list(counts.items()))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Deck) and self.n == other.n and self.cards == other.cards

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(f"{graph6_encode(c.to_graph())}:{m}" for c, m in self.cards)
        return f"Deck(n={self.n}, {{{inner}}})"

    def multiplicity(self, card: CanonicalCode) -> int:
        for code, mult in self.cards:
            if code == card:
                return mult
        return 0

    # -- classical aggregates ------------------------------------------------

    def edge_count(self) -> int:
        """|E(G)| by Kelly's relation; errors if the card edge sum is not divisible."""
        if self.n < 3:
            raise ValueError("edge count from deck needs original order >= 3")
        total = sum(mult * code.edge_count() for code, mult in self.cards)
        if total % (self.n - 2):
            raise IllegitimateDeckError(
                f"card edge sum {total} not divisible by n-2 = {self.n - 2}"
            )
        return total // (self.n - 2)

    def deleted_vertex_degree(self, card: CanonicalCode) -> int:
        """Degree of the vertex whose deletion produced the given card."""
        if self.multiplicity(card) == 0:
            raise KeyError("card not present in deck")
        return self.edge_count() - card.edge_count()

    def degree_multiset(self) -> tuple[int, ...]:
        """Deck-derived degree sequence (sorted, with multiplicity)."""
        m = self.edge_count()
        degs = []
        for code, mult in self.cards:
            degs.extend([m - code.edge_count()] * mult)
        return tuple(sorted(degs))

    def max_degree(self) -> int:
        return self.degree_multiset()[-1]

    def complement(self) -> "Deck":
        """Deck of the complement graph (card-wise complement)."""
        counts: dict[CanonicalCode, int] = {}
        for code, mult in self.cards:
            comp = canonical_form(code.to_graph().complement())
            counts[comp] = counts.get(comp, 0) + mult
        return Deck(self.n, list(counts.items()))

    def connected_origin(self) -> bool:
        """True iff the original graph is connected.

        Criterion: a graph is connected iff its deck holds at least two
        connected cards (a disconnected graph has at most one, arising only
        from deleting an isolated vertex).
        """
        if self.n < 3:
            raise ValueError("connectedness from deck needs original order >= 3")
        connected = 0
        for code, mult in self.cards:
            if code.to_graph().is_connected():
                connected += mult
                if connected >= 2:
                    return True
        return False

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> str:
        obj = {
            "n": self.n,
            "cards": [
                {"graph6": graph6_encode(code.to_graph()), "multiplicity": mult}
                for code, mult in self.cards
            ],
        }
        return json.dumps(obj, indent=2)

    @classmethod
    def from_json(cls, text: str | dict) -> "Deck":
        obj = json.loads(text) if isinstance(text, str) else text
        cards: dict[CanonicalCode, int] = {}
        for entry in obj["cards"]:
            code = canonical_form(graph6_decode(entry["graph6"]))
            mult = int(entry["multiplicity"])
            cards[code] = cards.get(code, 0) + mult
        return cls(int(obj["n"]), list(cards.items()))


def build_deck(g: Graph) -> Deck:
    return Deck.from_graph(g)
