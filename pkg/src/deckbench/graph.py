"""Bit-packed simple undirected graphs and per-graph combinatorial primitives.

Vertices are integers 0..n-1 with n <= 64, so every neighbourhood fits in a
single Python int used as a bitmask.  Graph values are immutable; all
operations are pure functions.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 64


class InvalidPairError(ValueError):
    """Raised when an operation on a vertex pair gets u == v."""


class NoPathError(ValueError):
    """Raised when a path-dependent quantity is requested for an unreachable pair."""


class DisconnectedGraphError(ValueError):
    """Raised by operations that are only defined on connected graphs."""


class NotDominatingPairError(ValueError):
    """Raised when {u, v} fails to dominate the graph; carries a witness vertex."""

    def __init__(self, u: int, v: int, witness: int):
        self.u = u
        self.v = v
        self.witness = witness
        super().__init__(
            f"{{{u},{v}}} is not a dominating pair: vertex {witness} "
            f"is adjacent to neither"
        )


@dataclass(frozen=True)
class PairProfile:
    """Neighbourhood profile of a vertex pair.

    k1 counts common neighbours, k2 neighbours exclusive to the first vertex,
    k3 neighbours exclusive to the second; endpoints are never counted.
    """

    k1: int
    k2: int
    k3: int
    adjacent: bool

    def degrees(self) -> tuple[int, int]:
        """Degrees of the two endpoints recovered from the profile."""
        bump = 1 if self.adjacent else 0
        return self.k1 + self.k2 + bump, self.k1 + self.k3 + bump

    def key(self) -> tuple[int, int, int]:
        """Canonical multiset key (k1, min(k2,k3), max(k2,k3))."""
        lo, hi = sorted((self.k2, self.k3))
        return (self.k1, lo, hi)


@dataclass(frozen=True)
class DominationPartition:
    """Partition of V(G) induced by a dominating pair {u, v}."""

    u: int
    v: int
    xu: frozenset[int]
    xv: frozenset[int]
    xuv: frozenset[int]
    uv_adjacent: bool


def _popcount(x: int) -> int:
    return x.bit_count()


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1, n <= 64."""

    __slots__ = ("n", "masks", "_hash")

    def __init__(self, n: int, masks: Sequence[int], _validate: bool = True):
        if _validate:
            if not 1 <= n <= MAX_VERTICES:
                raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
            if len(masks) != n:
                raise ValueError("need one adjacency mask per vertex")
            full = (1 << n) - 1
            for v, m in enumerate(masks):
                if m & ~full:
                    raise ValueError(f"mask of vertex {v} references vertices >= n")
                if m >> v & 1:
                    raise ValueError(f"self-loop at vertex {v}")
            for v in range(n):
                for u in _bits(masks[v]):
                    if not masks[u] >> v & 1:
                        raise ValueError(f"adjacency not symmetric at ({u},{v})")
        self.n = n
        self.masks = tuple(masks)
        self._hash = hash((self.n, self.masks))

    # -- construction ------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        masks = [0] * n
        for u, v in edges:
            if u == v:
                raise InvalidPairError(f"self-loop ({u},{v})")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidPairError(f"edge ({u},{v}) out of range for n={n}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, masks, _validate=False)

    # -- basics ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.masks == other.masks
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges())})"

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in _bits(self.masks[v] >> (v + 1) << (v + 1)):
                yield (v, u)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return _popcount(self.masks[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(_popcount(m) for m in self.masks)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees()))

    def edge_count(self) -> int:
        return sum(_popcount(m) for m in self.masks) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.masks[v]))

    # -- derived graphs ----------------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        masks = [full & ~m & ~(1 << v) for v, m in enumerate(self.masks)]
        return Graph(self.n, masks, _validate=False)

    def delete_vertex(self, v: int) -> "Graph":
        if self.n == 1:
            raise ValueError("cannot delete the only vertex")
        low = (1 << v) - 1
        masks = []
        for u in range(self.n):
            if u == v:
                continue
            m = self.masks[u]
            masks.append((m & low) | ((m >> (v + 1)) << v))
        return Graph(self.n - 1, masks, _validate=False)

    def with_vertex(self, adj: int | Iterable[int]) -> "Graph":
        """Add a vertex labelled n, adjacent to the given vertices."""
        if not isinstance(adj, int):
            mask = 0
            for u in adj:
                mask |= 1 << u
            adj = mask
        if adj >> self.n:
            raise ValueError("attachment set references vertices >= n")
        n = self.n + 1
        masks = [m | ((adj >> v & 1) << self.n) for v, m in enumerate(self.masks)]
        masks.append(adj)
        return Graph(n, masks, _validate=False)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Relabel vertices; perm[v] is the new label of v."""
        masks = [0] * self.n
        for v in range(self.n):
            m = 0
            for u in _bits(self.masks[v]):
                m |= 1 << perm[u]
            masks[perm[v]] = m
        return Graph(self.n, masks, _validate=False)

    # -- connectivity and distances ----------------------------------------

    def reachable_mask(self, start: int) -> int:
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.masks[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def is_connected(self) -> bool:
        return self.reachable_mask(0) == (1 << self.n) - 1

    def distances_from(self, start: int) -> list[Optional[int]]:
        dist: list[Optional[int]] = [None] * self.n
        dist[start] = 0
        seen = 1 << start
        frontier = seen
        d = 0
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.masks[v]
            frontier = nxt & ~seen
            seen |= frontier
            d += 1
            for v in _bits(frontier):
                dist[v] = d
        return dist

    def distance_matrix(self) -> list[list[Optional[int]]]:
        """All-pairs BFS distances; None marks unreachable pairs."""
        return [self.distances_from(v) for v in range(self.n)]

    def diameter(self) -> float | int:
        """Max distance over all pairs; math.inf iff disconnected; 0 for n=1."""
        if not self.is_connected():
            return math.inf
        best = 0
        for v in range(self.n):
            for d in self.distances_from(v):
                if d is not None and d > best:
                    best = d
        return best

    # -- pair profiles -------------------------------------------------------

    def pair_profile(self, u: int, v: int) -> PairProfile:
        if u == v:
            raise InvalidPairError(f"pair profile needs two distinct vertices, got {u}")
        mu, mv = self.masks[u], self.masks[v]
        k1 = _popcount(mu & mv)
        k2 = _popcount(mu & ~mv & ~(1 << v))
        k3 = _popcount(mv & ~mu & ~(1 << u))
        return PairProfile(k1, k2, k3, bool(mu >> v & 1))

    # -- geodesics -----------------------------------------------------------

    def geodesic_count(self, u: int, v: int) -> int:
        """Number of distinct shortest u,v-paths (BFS layer accumulation)."""
        if u == v:
            raise InvalidPairError("geodesic count needs two distinct vertices")
        counts = [0] * self.n
        counts[u] = 1
        seen = 1 << u
        frontier = seen
        while frontier:
            if frontier >> v & 1:
                return counts[v]
            nxt = 0
            for w in _bits(frontier):
                nxt |= self.masks[w]
            nxt &= ~seen
            for w in _bits(nxt):
                counts[w] = sum(counts[x] for x in _bits(self.masks[w] & frontier))
            seen |= nxt
            frontier = nxt
        raise NoPathError(f"vertices {u} and {v} lie in different components")

    def max_geodesic_count(self) -> int:
        """Smallest k for which the graph is k-geodetic."""
        if not self.is_connected():
            raise DisconnectedGraphError("geodetic number undefined for disconnected graphs")
        best = 0
        for u in range(self.n):
            for v in range(u + 1, self.n):
                c = self.geodesic_count(u, v)
                if c > best:
                    best = c
        return best if self.n > 1 else 1

    def is_k_geodetic(self, k: int) -> bool:
        if not self.is_connected():
            raise DisconnectedGraphError("k-geodetic test requires a connected graph")
        if self.n == 1:
            return True
        return self.max_geodesic_count() <= k

    # -- domination ----------------------------------------------------------

    def domination_number(self) -> int:
        """Exact domination number via branch and bound over closed neighbourhoods."""
        n = self.n
        full = (1 << n) - 1
        closed = [self.masks[v] | (1 << v) for v in range(n)]
        for c in closed:
            if c == full:
                return 1

        # greedy upper bound
        dominated = 0
        greedy = 0
        while dominated != full:
            best_v = max(range(n), key=lambda v: _popcount(closed[v] & ~dominated))
            dominated |= closed[best_v]
            greedy += 1
        best = greedy

        def dfs(dominated: int, size: int) -> None:
            nonlocal best
            if dominated == full:
                if size < best:
                    best = size
                return
            if size + 1 >= best:
                return
            undominated = full & ~dominated
            max_cov = max(_popcount(closed[v] & undominated) for v in range(n))
            if size + -(-_popcount(undominated) // max_cov) >= best:
                return
            # branch on the undominated vertex with fewest potential dominators
            pick, pick_opts = -1, None
            for u in _bits(undominated):
                opts = [v for v in range(n) if closed[v] >> u & 1]
                if pick_opts is None or len(opts) < len(pick_opts):
                    pick, pick_opts = u, opts
            for v in pick_opts or []:
                dfs(dominated | closed[v], size + 1)

        dfs(0, 0)
        return best

    def has_dominating_pair(self) -> bool:
        """True iff some two vertices dominate the graph (i.e. gamma <= 2)."""
        n = self.n
        full = (1 << n) - 1
        closed = [self.masks[v] | (1 << v) for v in range(n)]
        for u in range(n):
            cu = closed[u]
            if cu == full:
                return True
            for v in range(u + 1, n):
                if cu | closed[v] == full:
                    return True
        return False

    def domination_partition(self, u: int, v: int) -> DominationPartition:
        """Partition V \\ {u,v} by adjacency to the pair; errors if not dominating."""
        if u == v:
            raise InvalidPairError("domination partition needs two distinct vertices")
        mu, mv = self.masks[u], self.masks[v]
        others = ((1 << self.n) - 1) & ~(1 << u) & ~(1 << v)
        uncovered = others & ~mu & ~mv
        if uncovered:
            raise NotDominatingPairError(u, v, next(_bits(uncovered)))
        return DominationPartition(
            u=u,
            v=v,
            xu=frozenset(_bits(others & mu & ~mv)),
            xv=frozenset(_bits(others & mv & ~mu)),
            xuv=frozenset(_bits(others & mu & mv)),
            uv_adjacent=bool(mu >> v & 1),
        )


# -- named graphs and random generation ---------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n, _validate=False)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)], _validate=False)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    masks = list(g.masks) + [m << g.n for m in h.masks]
    return Graph(g.n + h.n, masks, _validate=False)


def random_graph(n: int, edge_probability: float, seed: int) -> Graph:
    """Seed-deterministic Erdos-Renyi sample G(n, p)."""
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge probability must be in [0, 1]")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < edge_probability:
                edges.append((u, v))
    return Graph.from_edges(n, edges)
