"""Simple undirected graphs over bitset adjacency rows.

Vertices are labeled 0..n-1.  A graph is immutable after construction;
adjacency is stored as one Python int per vertex, bit u of ``adj[v]`` set
iff u and v are adjacent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import networkx as nx

__all__ = [
    "Graph",
    "ComponentReport",
    "Graph6Error",
    "complete",
    "empty_graph",
    "star",
    "disjoint_union",
    "join",
    "copies",
    "induced",
    "remove",
    "analyze_components",
    "connected_components",
    "is_connected",
    "is_independent",
    "graph6_encode",
    "graph6_decode",
    "enumerate_graphs",
    "is_isomorphic",
    "random_graph",
]

ENUMERATION_LIMIT = 8
ISOMORPHISM_LIMIT = 10


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Immutable simple undirected graph."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(adj) != n:
            raise ValueError("adjacency must have one row per vertex")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"row {v} references vertices outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in _bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count()})"

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("cannot add a loop")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def without_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)


@dataclass(frozen=True)
class ComponentReport:
    """Components of G - S, in the host graph's vertex labels."""

    components: tuple[frozenset[int], ...]
    odd_count: int
    isolated_count: int


# ---------------------------------------------------------------------------
# constructors


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("order must be nonnegative")
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("order must be nonnegative")
    return Graph(n, [0] * n)


def star(m: int) -> Graph:
    """K_{1,m}: center 0, leaves 1..m."""
    if m < 1:
        raise ValueError("star requires at least one leaf")
    rows = [((1 << (m + 1)) - 1) ^ 1] + [1] * m
    return Graph(m + 1, rows)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n1 = g1.n
    rows = list(g1.adj) + [row << n1 for row in g2.adj]
    return Graph(n1 + g2.n, rows)


def join(g1: Graph, g2: Graph) -> Graph:
    """g1 block first, then g2, plus all cross edges."""
    n1, n2 = g1.n, g2.n
    cross1 = ((1 << n2) - 1) << n1
    cross2 = (1 << n1) - 1
    rows = [row | cross1 for row in g1.adj]
    rows += [(row << n1) | cross2 for row in g2.adj]
    return Graph(n1 + n2, rows)


def copies(k: int, g: Graph) -> Graph:
    if k < 1:
        raise ValueError("need at least one copy")
    out = g
    for _ in range(k - 1):
        out = disjoint_union(out, g)
    return out


def induced(g: Graph, s: Iterable[int]) -> Graph:
    keep = sorted(set(s))
    if keep and (keep[0] < 0 or keep[-1] >= g.n):
        raise ValueError("vertex set not contained in the graph")
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in _bits(g.adj[v]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    return Graph(len(keep), rows)


def remove(g: Graph, s: Iterable[int]) -> Graph:
    drop = set(s)
    return induced(g, (v for v in range(g.n) if v not in drop))


# ---------------------------------------------------------------------------
# components and subsets


def _component_masks(g: Graph, alive: int) -> list[int]:
    comps = []
    todo = alive
    while todo:
        seed = todo & -todo
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v] & alive & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        todo &= ~comp
    return comps


def connected_components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(_bits(m)) for m in _component_masks(g, (1 << g.n) - 1)]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(_component_masks(g, (1 << g.n) - 1)) == 1


def analyze_components(g: Graph, s: Iterable[int]) -> ComponentReport:
    smask = _to_mask(s)
    if smask & ~((1 << g.n) - 1):
        raise ValueError("vertex set not contained in the graph")
    alive = ((1 << g.n) - 1) & ~smask
    masks = _component_masks(g, alive)
    odd = sum(1 for m in masks if m.bit_count() % 2 == 1)
    isolated = sum(1 for m in masks if m.bit_count() == 1)
    return ComponentReport(
        components=tuple(frozenset(_bits(m)) for m in masks),
        odd_count=odd,
        isolated_count=isolated,
    )


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    smask = _to_mask(s)
    if smask & ~((1 << g.n) - 1):
        raise ValueError("vertex set not contained in the graph")
    return all(g.adj[v] & smask == 0 for v in _bits(smask))


# ---------------------------------------------------------------------------
# graph6


def _g6_number(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise Graph6Error("order too large for graph6 encoding")


def graph6_encode(g: Graph) -> str:
    out = bytearray(_g6_number(g.n))
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    for pos in range(0, len(bits), 6):
        chunk = bits[pos : pos + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = val << 1 | b
        out.append(val + 63)
    return out.decode("ascii")


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    if any(c < 63 or c > 126 for c in data):
        raise Graph6Error("malformed header: byte outside graph6 alphabet")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("malformed header: 8-byte order form not supported")
        if len(data) < 4:
            raise Graph6Error("malformed header: truncated long-form order")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        payload = data[4:]
    else:
        n = data[0] - 63
        payload = data[1:]
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    if len(payload) < want:
        raise Graph6Error(f"length mismatch: need {want} payload bytes, got {len(payload)}")
    if len(payload) > want:
        raise Graph6Error(f"length mismatch: {len(payload) - want} trailing bytes")
    bits = []
    for c in payload:
        val = c - 63
        bits.extend(val >> k & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("trailing padding bits are nonzero")
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, rows)


# ---------------------------------------------------------------------------
# isomorphism and enumeration


def _to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _invariant_key(g: Graph):
    """Exact isomorphism invariant used to bucket candidates cheaply."""
    degs = g.degrees()
    nbr_profile = tuple(
        sorted((degs[v], tuple(sorted(degs[u] for u in _bits(g.adj[v])))) for v in range(g.n))
    )
    tri = []
    for v in range(g.n):
        t = sum((g.adj[v] & g.adj[u]).bit_count() for u in _bits(g.adj[v]))
        tri.append(t // 2)
    return (g.n, g.edge_count(), tuple(sorted(degs)), nbr_profile, tuple(sorted(tri)))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test, supported for orders up to ISOMORPHISM_LIMIT."""
    if g1.n != g2.n:
        return False
    if g1.adj == g2.adj:
        return True
    if g1.n > ISOMORPHISM_LIMIT:
        raise ValueError(f"general isomorphism limited to n <= {ISOMORPHISM_LIMIT}")
    if _invariant_key(g1) != _invariant_key(g2):
        return False
    return nx.is_isomorphic(_to_networkx(g1), _to_networkx(g2))


def _complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full ^ row ^ (1 << v) for v, row in enumerate(g.adj)])


@lru_cache(maxsize=None)
def _enumerate_tuple(n: int) -> tuple[Graph, ...]:
    # Edge-augmentation with invariant-key buckets; VF2 settles key collisions.
    # Only the lower half of edge counts is generated, the rest by complement.
    maxm = n * (n - 1) // 2
    half = maxm // 2
    pairs = [(i, j) for j in range(n) for i in range(j)]
    start = empty_graph(n)
    levels: list[list[Graph]] = [[start]]
    current = [start]
    for _ in range(half):
        seen: set[tuple[int, ...]] = set()
        buckets: dict[object, list[Graph]] = {}
        for g in current:
            for i, j in pairs:
                if g.adj[i] >> j & 1:
                    continue
                rows = list(g.adj)
                rows[i] |= 1 << j
                rows[j] |= 1 << i
                key_rows = tuple(rows)
                if key_rows in seen:
                    continue
                seen.add(key_rows)
                child = Graph(n, rows)
                bucket = buckets.setdefault(_invariant_key(child), [])
                child_nx = None
                for rep in bucket:
                    if child_nx is None:
                        child_nx = _to_networkx(child)
                    if nx.is_isomorphic(child_nx, _to_networkx(rep)):
                        break
                else:
                    bucket.append(child)
        current = [g for b in buckets.values() for g in b]
        levels.append(current)
    out: list[Graph] = []
    for level in levels:
        out.extend(level)
    for level in levels:
        for g in level:
            if maxm - g.edge_count() > half:
                out.append(_complement(g))
    out.sort(key=lambda g: (g.edge_count(), graph6_encode(g)))
    return tuple(out)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of simple graphs on n vertices."""
    if not 1 <= n <= ENUMERATION_LIMIT:
        raise ValueError(f"enumeration supported for 1 <= n <= {ENUMERATION_LIMIT}")
    yield from _enumerate_tuple(n)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    rows = [0] * n
    for j in range(n):
        for i in range(j):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows)
