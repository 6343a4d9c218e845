"""Deck-side recovery of pv/pav/dv/dav via recursive deck-sum identities.

The identity checker validates the recursion coefficients against brute force;
the solvers run the downward induction with exact integer arithmetic.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .deck import Deck, IllegitimateDeckError
from .graph import Graph
from .params import ParamTable, Triple, dav_table, dv_table, pav_vector, pv_vector


class CertificateError(ValueError):
    """A gamma >= 3 certificate is missing or does not match the deck."""


@dataclass(frozen=True)
class GammaCertificate:
    """Assertion that the deck's original graph has domination number >= 3.

    Issued by the recognizer (deck-only) or by a trusted caller; solvers refuse
    decks without a matching certificate.
    """

    deck: Deck

    @classmethod
    def trusted(cls, deck: Deck) -> "GammaCertificate":
        return cls(deck)


@dataclass(frozen=True)
class IdentityReport:
    """One deck-sum identity instance, evaluated both ways."""

    mode: str
    triple: Triple
    lhs: int
    rhs_literal: int
    rhs_corrected: int

    @property
    def residual_literal(self) -> int:
        return self.lhs - self.rhs_literal

    @property
    def residual_corrected(self) -> int:
        return self.lhs - self.rhs_corrected


def canonical_triples(total: int) -> Iterator[Triple]:
    """All (k1, k2, k3) with k2 <= k3 and k1 + k2 + k3 == total."""
    for k1 in range(total + 1):
        rest = total - k1
        for k2 in range(rest // 2 + 1):
            yield (k1, k2, rest - k2)


def _upper_terms(k1: int, k2: int, k3: int, rule: str) -> list[tuple[Triple, int]]:
    """Level-(s+1) terms feeding the target triple, with their coefficients.

    Under multiset semantics the (k1, k2+1, k3) source is symmetric when
    k2+1 == k3, and a deletion on either exclusive side shifts it onto the
    target, doubling the coefficient; the literal rule does not double.
    """
    terms = [((k1 + 1, k2, k3), k1 + 1)]
    if k2 == k3:
        terms.append(((k1, k2, k3 + 1), k2 + 1))
    else:
        c2 = k2 + 1
        if rule == "corrected" and k2 + 1 == k3:
            c2 = 2 * (k2 + 1)
        terms.append(((k1, k2 + 1, k3), c2))
        terms.append(((k1, k2, k3 + 1), k3 + 1))
    return terms


def _rhs(table: ParamTable, n: int, triple: Triple, rule: str) -> int:
    k1, k2, k3 = triple
    s = k1 + k2 + k3
    val = (n - 2 - s) * table.lookup(*triple)
    for key, coeff in _upper_terms(k1, k2, k3, rule):
        val += coeff * table.lookup(*key)
    return val


def check_identity(g: Graph, mode: str, k1: int, k2: int, k3: int) -> IdentityReport:
    """Evaluate one deck-sum identity on g by brute force (no deck needed)."""
    if mode not in ("dv", "dav"):
        raise ValueError(f"mode must be 'dv' or 'dav', got {mode!r}")
    if k2 > k3:
        raise ValueError("canonical triples require k2 <= k3")
    if k1 + k2 + k3 > g.n - 3:
        raise ValueError(f"triple sum {k1 + k2 + k3} out of range for n={g.n}")
    table_of = dv_table if mode == "dv" else dav_table
    lhs = sum(table_of(g.delete_vertex(v)).lookup(k1, k2, k3) for v in range(g.n))
    table = table_of(g)
    return IdentityReport(
        mode=mode,
        triple=(k1, k2, k3),
        lhs=lhs,
        rhs_literal=_rhs(table, g.n, (k1, k2, k3), "literal"),
        rhs_corrected=_rhs(table, g.n, (k1, k2, k3), "corrected"),
    )


def identity_reports(g: Graph, mode: str) -> list[IdentityReport]:
    """check_identity over every in-range canonical triple, sharing card tables."""
    table_of = dv_table if mode == "dv" else dav_table
    lhs: dict[Triple, int] = {}
    for v in range(g.n):
        for key, c in table_of(g.delete_vertex(v)).entries.items():
            lhs[key] = lhs.get(key, 0) + c
    table = table_of(g)
    out = []
    for s in range(g.n - 2):
        for triple in canonical_triples(s):
            out.append(
                IdentityReport(
                    mode=mode,
                    triple=triple,
                    lhs=lhs.get(triple, 0),
                    rhs_literal=_rhs(table, g.n, triple, "literal"),
                    rhs_corrected=_rhs(table, g.n, triple, "corrected"),
                )
            )
    return out


# -- pv / pav recovery -----------------------------------------------------------


def _deck_vector_sum(d: Deck, adjacent: bool) -> list[int]:
    vec_of = pav_vector if adjacent else pv_vector
    out = [0] * (d.n - 1)
    for code, mult in d.cards:
        for j, c in enumerate(vec_of(code.to_graph())):
            out[j] += mult * c
    return out


def _pv_top_from_deck(d: Deck) -> int:
    """pv(G, n-2): non-adjacent pairs adjacent to all other vertices.

    Such a pair is two degree-(n-2) vertices that are each other's unique
    non-neighbour.  Deleting one of them leaves its partner as the single
    vertex whose degree did not drop, which the card's degree multiset betrays.
    """
    n = d.n
    m = d.edge_count()
    degrees = d.degree_multiset()
    hits = 0
    for code, mult in d.cards:
        if m - code.edge_count() != n - 2:
            continue
        rest = Counter(degrees)
        rest[n - 2] -= 1
        expected = Counter({deg - 1: cnt for deg, cnt in rest.items() if cnt})
        diff = Counter(code.to_graph().degree_sequence()) - expected
        kept = [deg for deg, cnt in diff.items() for _ in range(cnt)]
        if len(kept) != 1:
            raise IllegitimateDeckError("card degree multiset inconsistent with deck")
        if kept[0] == n - 2:
            hits += mult
    if hits % 2:
        raise IllegitimateDeckError("odd count of mutually non-adjacent full-degree pairs")
    return hits // 2


def _pav_top_from_deck(d: Deck) -> int:
    universal = sum(1 for deg in d.degree_multiset() if deg == d.n - 1)
    return universal * (universal - 1) // 2


def _solve_vector(d: Deck, adjacent: bool) -> list[int]:
    n = d.n
    if n < 3:
        raise ValueError("vector recovery needs original order >= 3")
    m = d.edge_count()
    lhs = _deck_vector_sum(d, adjacent)
    out = [0] * (n - 1)
    out[n - 2] = _pav_top_from_deck(d) if adjacent else _pv_top_from_deck(d)
    for j in range(n - 3, -1, -1):
        val = lhs[j] - (j + 1) * out[j + 1]
        denom = n - 2 - j
        if val < 0 or val % denom:
            raise IllegitimateDeckError(
                f"inconsistent {'pav' if adjacent else 'pv'} system at index {j}"
            )
        out[j] = val // denom
    mass = m if adjacent else n * (n - 1) // 2 - m
    if sum(out) != mass:
        raise IllegitimateDeckError("recovered vector fails the pair-mass equation")
    return out


def solve_pv_from_deck(d: Deck) -> list[int]:
    """pv(G, i) for i = 0..n-2, recovered from the deck alone."""
    return _solve_vector(d, adjacent=False)


def solve_pav_from_deck(d: Deck) -> list[int]:
    """pav(G, i) for i = 0..n-2, recovered from the deck alone."""
    return _solve_vector(d, adjacent=True)


# -- dv / dav recovery -------------------------------------------------------------


def deck_table_sum(d: Deck, mode: str) -> dict[Triple, int]:
    """Sum of card dv/dav tables over the deck, with multiplicity."""
    table_of = dv_table if mode == "dv" else dav_table
    out: dict[Triple, int] = {}
    for code, mult in d.cards:
        for key, c in table_of(code.to_graph()).entries.items():
            out[key] = out.get(key, 0) + mult * c
    return out


def _check_certificate(d: Deck, certificate: object) -> None:
    if not isinstance(certificate, GammaCertificate):
        raise CertificateError("a GammaCertificate is required to solve dv/dav tables")
    if certificate.deck != d:
        raise CertificateError("certificate was issued for a different deck")


def _solve_table(d: Deck, mode: str, certificate: GammaCertificate) -> ParamTable:
    _check_certificate(d, certificate)
    n = d.n
    if n < 3:
        raise ValueError("table recovery needs original order >= 3")
    lhs = deck_table_sum(d, mode)
    entries: dict[Triple, int] = {}
    # gamma >= 3 kills every triple with k1+k2+k3 = n-2 (it would be a
    # dominating pair); induct downward from s = n-3.
    for s in range(n - 3, -1, -1):
        denom = n - 2 - s
        for triple in canonical_triples(s):
            val = lhs.get(triple, 0)
            for key, coeff in _upper_terms(*triple, rule="corrected"):
                val -= coeff * entries.get(key, 0)
            if val < 0 or val % denom:
                raise IllegitimateDeckError(
                    f"inconsistent {mode} induction at {triple}: "
                    "illegitimate deck or wrong certificate"
                )
            if val:
                entries[triple] = val // denom
    m = d.edge_count()
    mass = m if mode == "dav" else n * (n - 1) // 2 - m
    if sum(entries.values()) != mass:
        raise IllegitimateDeckError(
            f"recovered {mode} table fails the mass equation: "
            "illegitimate deck or wrong certificate"
        )
    return ParamTable(mode=mode, n=n, entries=entries)


def solve_dv_from_deck(d: Deck, certificate: GammaCertificate) -> ParamTable:
    """dv table for all k1+k2+k3 <= n-3, recovered from the deck under gamma >= 3."""
    return _solve_table(d, "dv", certificate)


def solve_dav_from_deck(d: Deck, certificate: GammaCertificate) -> ParamTable:
    """dav table for all k1+k2+k3 <= n-3, recovered from the deck under gamma >= 3."""
    return _solve_table(d, "dav", certificate)
