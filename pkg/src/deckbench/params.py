"""Graph-side vertex-pair parameters: dv/dav tables, pv/pav marginals, S-sets."""
from __future__ import annotations

import json
from dataclasses import dataclass

from .graph import DisconnectedGraphError, Graph

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class ParamTable:
    """Sparse count table keyed by canonical triples (k1, k2, k3) with k2 <= k3.

    mode 'dv' counts non-adjacent pairs, 'dav' adjacent pairs.  Each unordered
    pair is counted once, under multiset semantics for (k2, k3).
    """

    mode: str
    n: int
    entries: dict[Triple, int]

    def lookup(self, k1: int, k2: int, k3: int) -> int:
        if k2 > k3:
            k2, k3 = k3, k2
        return self.entries.get((k1, k2, k3), 0)

    def total(self) -> int:
        return sum(self.entries.values())

    def marginal(self, k1: int) -> int:
        return sum(c for (a, _, _), c in self.entries.items() if a == k1)

    def to_json(self) -> str:
        rows = [
            {"k1": k1, "k2": k2, "k3": k3, "count": c}
            for (k1, k2, k3), c in sorted(self.entries.items())
        ]
        return json.dumps({"mode": self.mode, "n": self.n, "entries": rows}, indent=2)

    @classmethod
    def from_json(cls, text: str | dict) -> "ParamTable":
        obj = json.loads(text) if isinstance(text, str) else text
        entries = {
            (int(r["k1"]), int(r["k2"]), int(r["k3"])): int(r["count"])
            for r in obj["entries"]
        }
        return cls(mode=obj["mode"], n=int(obj["n"]), entries=entries)


@dataclass(frozen=True)
class SSet:
    """Role-ordered witness set S_G(k1, k2, k3).

    v is a member iff some non-neighbour w realizes exactly k1 common
    neighbours, k2 neighbours exclusive to v, and k3 exclusive to w.
    """

    k1: int
    k2: int
    k3: int
    members: frozenset[int]


@dataclass(frozen=True)
class ClassMembership:
    """Flags for the k-geodetic diameter-2 family and its zero-pattern subfamilies."""

    in_g: bool
    geodetic_k: int
    c1_witnesses: tuple[Triple, ...]
    c2_witnesses: tuple[tuple[Triple, str], ...]


def _pair_table(g: Graph, adjacent: bool) -> ParamTable:
    entries: dict[Triple, int] = {}
    for u in range(g.n):
        for v in range(u + 1, g.n):
            p = g.pair_profile(u, v)
            if p.adjacent != adjacent:
                continue
            key = p.key()
            entries[key] = entries.get(key, 0) + 1
    return ParamTable(mode="dav" if adjacent else "dv", n=g.n, entries=entries)


def dv_table(g: Graph) -> ParamTable:
    """Counts of non-adjacent pairs by (common, exclusive-min, exclusive-max)."""
    if g.n < 2:
        raise ValueError("pair tables need at least 2 vertices")
    return _pair_table(g, adjacent=False)


def dav_table(g: Graph) -> ParamTable:
    """Counts of adjacent pairs by (common, exclusive-min, exclusive-max)."""
    if g.n < 2:
        raise ValueError("pair tables need at least 2 vertices")
    return _pair_table(g, adjacent=True)


def pv_vector(g: Graph) -> list[int]:
    """pv(g, i) for i = 0..n-2, computed directly from common-neighbour counts."""
    out = [0] * (g.n - 1)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            p = g.pair_profile(u, v)
            if not p.adjacent:
                out[p.k1] += 1
    return out


def pav_vector(g: Graph) -> list[int]:
    """pav(g, i) for i = 0..n-2."""
    out = [0] * (g.n - 1)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            p = g.pair_profile(u, v)
            if p.adjacent:
                out[p.k1] += 1
    return out


def pv(g: Graph, i: int) -> int:
    if not 0 <= i <= g.n - 2:
        raise ValueError(f"index {i} out of range 0..{g.n - 2}")
    return pv_vector(g)[i]


def pav(g: Graph, i: int) -> int:
    if not 0 <= i <= g.n - 2:
        raise ValueError(f"index {i} out of range 0..{g.n - 2}")
    return pav_vector(g)[i]


def s_set(g: Graph, k1: int, k2: int, k3: int) -> SSet:
    """Role-ordered S_G(k1,k2,k3); (k2,k3) are NOT interchangeable here."""
    if g.n < 2:
        raise ValueError("S-sets need at least 2 vertices")
    members = set()
    for v in range(g.n):
        for w in range(g.n):
            if w == v or g.has_edge(v, w):
                continue
            p = g.pair_profile(v, w)
            if (p.k1, p.k2, p.k3) == (k1, k2, k3):
                members.add(v)
                break
    return SSet(k1, k2, k3, frozenset(members))


def class_membership(g: Graph) -> ClassMembership:
    """Membership in the k-geodetic diameter-2 family plus C1/C2 witness triples.

    in_g requires: every dv entry of g and of its complement with k1 = 0 absent,
    and domination number >= 3 on both sides.  Witness lists are reported
    independently of in_g so sweeps can combine them as needed.
    """
    if g.n < 3:
        raise ValueError("class membership needs n >= 3")
    if not g.is_connected():
        raise DisconnectedGraphError("class membership requires a connected graph")

    k = g.max_geodesic_count()
    dv = dv_table(g)
    dv_comp = dv_table(g.complement())
    no_zero_k1 = dv.marginal(0) == 0 and dv_comp.marginal(0) == 0
    in_g = (
        no_zero_k1
        and g.domination_number() >= 3
        and g.complement().domination_number() >= 3
    )

    c1 = []
    c2 = []
    for (k1, k2, k3), count in sorted(dv.entries.items()):
        if count <= 0:
            continue
        if k1 >= 1 and dv.lookup(k1 - 1, k2, k3) == 0:
            c1.append((k1, k2, k3))
        if abs(k2 - k3) >= 2:
            if k2 >= 1 and dv.lookup(k1, k2 - 1, k3) == 0:
                c2.append(((k1, k2, k3), "k2"))
            if k3 >= 1 and dv.lookup(k1, k2, k3 - 1) == 0:
                c2.append(((k1, k2, k3), "k3"))
    return ClassMembership(
        in_g=in_g,
        geodetic_k=k,
        c1_witnesses=tuple(c1),
        c2_witnesses=tuple(c2),
    )
