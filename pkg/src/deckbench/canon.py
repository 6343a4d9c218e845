"""Canonical labeling, isomorphism testing, graph6 codec, and exhaustive enumeration."""
from __future__ import annotations

from typing import Callable, Iterator, Optional

from .graph import Graph

ENUMERATION_CAP = 10


class Graph6ParseError(ValueError):
    """Malformed graph6 input; .offset points at the offending byte."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} (offset {offset})")


def _pair_index_order(n: int) -> list[tuple[int, int]]:
    """Upper-triangle pairs in column order: (0,1),(0,2),(1,2),(0,3),..."""
    return [(j, i) for i in range(1, n) for j in range(i)]


class CanonicalCode:
    """Order-then-bits encoding of a canonically relabeled graph.

    Layout: one byte n, then the column-order upper-triangle bits of the
    canonical adjacency matrix packed MSB-first.  Lexicographic comparison of
    the raw bytes is a total order.
    """

    __slots__ = ("data",)

    def __init__(self, data: bytes):
        self.data = data

    @classmethod
    def from_bits(cls, n: int, bits: int) -> "CanonicalCode":
        total = n * (n - 1) // 2
        nbytes = (total + 7) // 8
        packed = (bits << (8 * nbytes - total)).to_bytes(nbytes, "big") if total else b""
        return cls(bytes([n]) + packed)

    @property
    def n(self) -> int:
        return self.data[0]

    def bit_int(self) -> int:
        """Upper-triangle bits as an integer (first pair = most significant bit)."""
        n = self.n
        total = n * (n - 1) // 2
        if total == 0:
            return 0
        raw = int.from_bytes(self.data[1:], "big")
        return raw >> (8 * len(self.data[1:]) - total)

    def edge_count(self) -> int:
        return self.bit_int().bit_count()

    def to_graph(self) -> Graph:
        n = self.n
        total = n * (n - 1) // 2
        bits = self.bit_int()
        masks = [0] * n
        for idx, (j, i) in enumerate(_pair_index_order(n)):
            if bits >> (total - 1 - idx) & 1:
                masks[j] |= 1 << i
                masks[i] |= 1 << j
        return Graph(n, masks, _validate=False)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CanonicalCode) and self.data == other.data

    def __lt__(self, other: "CanonicalCode") -> bool:
        return self.data < other.data

    def __le__(self, other: "CanonicalCode") -> bool:
        return self.data <= other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        return f"CanonicalCode({self.data.hex()})"


# -- canonical form ------------------------------------------------------------


def _refine_colors(n: int, masks: tuple[int, ...]) -> list[int]:
    """Iterated neighbour-colour refinement; colour ids are isomorphism-invariant."""
    colors = [0] * n
    ncolors = 1
    while True:
        keys = []
        for v in range(n):
            m = masks[v]
            nb = []
            while m:
                low = m & -m
                nb.append(colors[low.bit_length() - 1])
                m ^= low
            nb.sort()
            keys.append((colors[v], tuple(nb)))
        uniq = sorted(set(keys))
        rank = {k: i for i, k in enumerate(uniq)}
        colors = [rank[k] for k in keys]
        if len(uniq) == ncolors:
            return colors
        ncolors = len(uniq)


def _canonical_bits(g: Graph) -> int:
    """Minimal column-order adjacency bit-string over colour-respecting relabelings."""
    n, masks = g.n, g.masks
    if n == 1:
        return 0
    colors = _refine_colors(n, masks)
    slot_colors = sorted(colors)
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)

    total_bits = n * (n - 1) // 2
    bits_upto = [d * (d - 1) // 2 for d in range(n + 1)]
    best: Optional[int] = None
    best_prefix = [0] * (n + 1)
    perm: list[int] = []

    def dfs(depth: int, used: int, prefix: int) -> None:
        nonlocal best
        if depth == n:
            if best is None or prefix < best:
                best = prefix
                for d in range(n + 1):
                    best_prefix[d] = prefix >> (total_bits - bits_upto[d])
            return
        for cand in by_color[slot_colors[depth]]:
            if used >> cand & 1:
                continue
            m = masks[cand]
            newbits = 0
            for j in range(depth):
                newbits = (newbits << 1) | (m >> perm[j] & 1)
            np = (prefix << depth) | newbits
            if best is not None and np > best_prefix[depth + 1]:
                continue
            perm.append(cand)
            dfs(depth + 1, used | (1 << cand), np)
            perm.pop()

    dfs(0, 0, 0)
    assert best is not None
    return best


_canon_cache: dict[tuple[int, tuple[int, ...]], CanonicalCode] = {}


def canonical_form(g: Graph) -> CanonicalCode:
    """Canonical code of g; equal codes iff isomorphic graphs."""
    key = (g.n, g.masks)
    code = _canon_cache.get(key)
    if code is None:
        code = CanonicalCode.from_bits(g.n, _canonical_bits(g))
        _canon_cache[key] = code
    return code


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


# -- graph6 ---------------------------------------------------------------------


def graph6_encode(g: Graph) -> str:
    """Standard graph6 text for g (n <= 64; long size form for n >= 63)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(
            chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0)
        )
    bits = []
    for j, i in _pair_index_order(n):
        bits.append(g.masks[j] >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return head + "".join(chars)


def graph6_decode(text: str) -> Graph:
    """Parse one graph6 line; raises Graph6ParseError with byte offset."""
    s = text.rstrip("\n")
    if not s:
        raise Graph6ParseError("empty graph6 string", 0)
    if s.startswith(">>graph6<<"):
        s = s[10:]
    pos = 0
    if s[0] == "~":
        if len(s) < 4:
            raise Graph6ParseError("truncated long-form size", len(s))
        if s[1] == "~":
            raise Graph6ParseError("very-long size form exceeds n <= 64", 1)
        n = 0
        for k in range(1, 4):
            c = ord(s[k]) - 63
            if not 0 <= c <= 63:
                raise Graph6ParseError(f"size byte out of range: {s[k]!r}", k)
            n = (n << 6) | c
        pos = 4
    else:
        n = ord(s[0]) - 63
        if not 0 <= n <= 62:
            raise Graph6ParseError(f"size byte out of range: {s[0]!r}", 0)
        pos = 1
    if n < 1:
        raise Graph6ParseError("graph order must be at least 1", 0)
    if n > 64:
        raise Graph6ParseError(f"graph order {n} exceeds supported maximum 64", 0)

    total = n * (n - 1) // 2
    nchars = (total + 5) // 6
    body = s[pos:]
    if len(body) < nchars:
        raise Graph6ParseError(
            f"need {nchars} body bytes for n={n}, got {len(body)}", pos + len(body)
        )
    if len(body) > nchars:
        raise Graph6ParseError("trailing garbage after graph6 body", pos + nchars)
    bits = 0
    for k, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6ParseError(f"body byte out of range: {ch!r}", pos + k)
        bits = (bits << 6) | val
    pad = nchars * 6 - total
    if pad and bits & ((1 << pad) - 1):
        raise Graph6ParseError("nonzero padding bits", pos + nchars - 1)
    bits >>= pad
    masks = [0] * n
    for idx, (j, i) in enumerate(_pair_index_order(n)):
        if bits >> (total - 1 - idx) & 1:
            masks[j] |= 1 << i
            masks[i] |= 1 << j
    return Graph(n, masks, _validate=False)


# -- isomorph-free enumeration ---------------------------------------------------

_enum_cache: dict[int, list[Graph]] = {}


def _enumerate_all(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class on n vertices.

    Each (n-1)-vertex representative is extended by a new vertex over all
    neighbourhood subsets; children are deduplicated by canonical code.
    """
    if n in _enum_cache:
        return _enum_cache[n]
    if n == 1:
        reps = [Graph(1, [0], _validate=False)]
    else:
        parents = _enumerate_all(n - 1)
        seen: set[CanonicalCode] = set()
        reps = []
        for parent in parents:
            for subset in range(1 << (n - 1)):
                code = canonical_form(parent.with_vertex(subset))
                if code not in seen:
                    seen.add(code)
                    reps.append(code.to_graph())
    _enum_cache[n] = reps
    return reps


def enumerate_graphs(
    n: int,
    predicate: Optional[Callable[[Graph], bool]] = None,
    *,
    allow_large: bool = False,
) -> Iterator[Graph]:
    """Yield one representative per isomorphism class on n vertices.

    Refuses n > 10 unless allow_large is set (combinatorial blow-up guard).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n > ENUMERATION_CAP and not allow_large:
        raise ValueError(
            f"enumeration beyond n={ENUMERATION_CAP} refused; pass allow_large=True"
        )
    for g in _enumerate_all(n):
        if predicate is None or predicate(g):
            yield g
