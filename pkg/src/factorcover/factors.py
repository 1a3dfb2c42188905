"""Exact factor deciders and their subset-criterion counterparts.

Two graph properties are decided here, each by two independent routes:

* every edge lies in a matching of size (n-k)/2 or larger
  - direct: per-edge exact maximum matching on the remainder
  - criterion: odd components o(G-S) <= |S| + k for every proper S,
    with equality forcing S independent
* every edge lies in a spanning star forest (stars with 1..k leaves)
  whose component through that edge is a single edge or a 2-leaf star
  - direct: per-edge backtracking exact cover
  - criterion: isolated-vertex counts i(G-S) <= k|S|, tightened to
    k|S| - 2k + 1 when S spans an edge

Both deciders are exhaustive searches; size limits are enforced, not silent.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, analyze_components, is_independent

__all__ = [
    "Matching",
    "StarForest",
    "Witness",
    "Verdict",
    "max_matching",
    "max_matching_size",
    "has_matching_through_edge",
    "is_matching_covered",
    "lemma_matching_criterion",
    "star_factor_through_edge",
    "find_star_factor_through_edge",
    "is_star_covered",
    "cek_criterion",
]

MATCHING_LIMIT = 24
SUBSET_LIMIT = 16
STAR_LIMIT = 12


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class StarForest:
    stars: tuple[tuple[int, frozenset[int]], ...]  # (center, leaves)


@dataclass(frozen=True)
class Witness:
    vertices: frozenset[int] | None = None
    edge: tuple[int, int] | None = None
    detail: str = ""


@dataclass(frozen=True)
class Verdict:
    holds: bool
    certificate: Matching | StarForest | None = None
    witness: Witness | None = None


def _validate_matching(g: Graph, m: Matching) -> None:
    used: set[int] = set()
    for u, v in m.edges:
        if not g.has_edge(u, v):
            raise AssertionError(f"certificate edge ({u},{v}) missing from the graph")
        if u in used or v in used:
            raise AssertionError("certificate edges are not vertex-disjoint")
        used |= {u, v}


def _validate_star_forest(g: Graph, sf: StarForest, k: int) -> None:
    covered: set[int] = set()
    for center, leaves in sf.stars:
        if not 1 <= len(leaves) <= k:
            raise AssertionError("star size outside 1..k leaves")
        if center in leaves:
            raise AssertionError("center cannot be its own leaf")
        for leaf in leaves:
            if not g.has_edge(center, leaf):
                raise AssertionError(f"star edge ({center},{leaf}) missing from the graph")
        block = {center} | leaves
        if covered & block:
            raise AssertionError("stars are not vertex-disjoint")
        covered |= block
    if covered != set(range(g.n)):
        raise AssertionError("star forest is not spanning")


# ---------------------------------------------------------------------------
# maximum matching (exact, bitset memoized)


def _matching_size_rec(adj: tuple[int, ...], mask: int, memo: dict[int, int]) -> int:
    if mask == 0:
        return 0
    hit = memo.get(mask)
    if hit is not None:
        return hit
    low = mask & -mask
    v = low.bit_length() - 1
    rest = mask ^ low
    best = _matching_size_rec(adj, rest, memo)  # leave v unmatched
    nbrs = adj[v] & rest
    while nbrs:
        ulow = nbrs & -nbrs
        u = ulow.bit_length() - 1
        nbrs ^= ulow
        cand = 1 + _matching_size_rec(adj, rest ^ ulow, memo)
        if cand > best:
            best = cand
            if best == mask.bit_count() // 2:
                break
    memo[mask] = best
    return best


def max_matching_size(g: Graph) -> int:
    if g.n > MATCHING_LIMIT:
        raise ValueError(f"exact matching limited to n <= {MATCHING_LIMIT}")
    return _matching_size_rec(g.adj, (1 << g.n) - 1, {})


def max_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching, reconstructed from the memoized search."""
    if g.n > MATCHING_LIMIT:
        raise ValueError(f"exact matching limited to n <= {MATCHING_LIMIT}")
    memo: dict[int, int] = {}
    mask = (1 << g.n) - 1
    edges: list[tuple[int, int]] = []
    while mask:
        target = _matching_size_rec(g.adj, mask, memo)
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        if _matching_size_rec(g.adj, rest, memo) == target:
            mask = rest
            continue
        for u in range(g.n):
            bit = 1 << u
            if g.adj[v] & rest & bit and 1 + _matching_size_rec(g.adj, rest ^ bit, memo) == target:
                edges.append((v, u) if v < u else (u, v))
                mask = rest ^ bit
                break
        else:  # pragma: no cover - search is exact
            raise RuntimeError("matching reconstruction failed")
    m = Matching(tuple(sorted(edges)))
    _validate_matching(g, m)
    return m


# ---------------------------------------------------------------------------
# matchings through a given edge


def _check_matching_args(g: Graph, k: int) -> None:
    if not 0 <= k <= g.n:
        raise ValueError("k must satisfy 0 <= k <= n")
    if (g.n - k) % 2 != 0:
        raise ValueError("parity violation: k must satisfy n == k (mod 2)")


def has_matching_through_edge(g: Graph, k: int, e: tuple[int, int]) -> bool:
    """True iff some matching of size at least (n-k)/2 contains e."""
    _check_matching_args(g, k)
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    target = (g.n - k) // 2
    if target <= 1:
        return True
    mask = ((1 << g.n) - 1) ^ (1 << u) ^ (1 << v)
    return _matching_size_rec(g.adj, mask, {}) >= target - 1


def is_matching_covered(g: Graph, k: int) -> Verdict:
    """Does a matching of size (n-k)/2 exist, with every edge lying in one?"""
    _check_matching_args(g, k)
    edges = sorted(g.edges())
    target = (g.n - k) // 2
    if max_matching_size(g) < target:
        if edges:
            return Verdict(holds=False, witness=Witness(edge=edges[0], detail="no large-enough matching through this edge"))
        return Verdict(holds=False, witness=Witness(detail=f"no matching of size {target} exists"))
    for e in edges:
        if not has_matching_through_edge(g, k, e):
            return Verdict(holds=False, witness=Witness(edge=e, detail="no large-enough matching through this edge"))
    certificate = None
    if edges:
        certificate = _matching_through(g, k, edges[0])
    return Verdict(holds=True, certificate=certificate)


def _matching_through(g: Graph, k: int, e: tuple[int, int]) -> Matching:
    u, v = e
    adj = g.adj
    memo: dict[int, int] = {}
    mask = ((1 << g.n) - 1) ^ (1 << u) ^ (1 << v)
    target = max((g.n - k) // 2 - 1, 0)
    edges = [(min(e), max(e))]
    while mask and target > 0:
        cur = _matching_size_rec(adj, mask, memo)
        low = mask & -mask
        a = low.bit_length() - 1
        rest = mask ^ low
        if _matching_size_rec(adj, rest, memo) == cur:
            mask = rest
            continue
        for b in range(g.n):
            bit = 1 << b
            if adj[a] & rest & bit and 1 + _matching_size_rec(adj, rest ^ bit, memo) == cur:
                edges.append((a, b) if a < b else (b, a))
                target -= 1
                mask = rest ^ bit
                break
    m = Matching(tuple(sorted(edges)))
    _validate_matching(g, m)
    if m.size < (g.n - k) // 2:
        raise AssertionError("reconstructed matching smaller than required")
    return m


def lemma_matching_criterion(g: Graph, k: int) -> Verdict:
    """Subset criterion over every proper S (empty set included)."""
    _check_matching_args(g, k)
    if g.n > SUBSET_LIMIT:
        raise ValueError(f"subset criterion limited to n <= {SUBSET_LIMIT}")
    for size in range(g.n):  # proper subsets only
        for s in combinations(range(g.n), size):
            o = analyze_components(g, s).odd_count
            if o > size + k:
                return Verdict(
                    holds=False,
                    witness=Witness(vertices=frozenset(s), detail=f"o(G-S)={o} exceeds |S|+k={size + k}"),
                )
            if o == size + k and not is_independent(g, s):
                return Verdict(
                    holds=False,
                    witness=Witness(
                        vertices=frozenset(s),
                        detail=f"o(G-S)={o} equals |S|+k but S is not independent",
                    ),
                )
    return Verdict(holds=True)


# ---------------------------------------------------------------------------
# star factors


def _star_cover(adj: tuple[int, ...], mask: int, k: int, memo: dict[int, tuple | None]) -> tuple | None:
    """Cover all vertices in mask by disjoint stars with 1..k leaves.

    Returns a tuple of (center, leaves_mask) stars, or None.
    """
    if mask == 0:
        return ()
    hit = memo.get(mask, "miss")
    if hit != "miss":
        return hit
    low = mask & -mask
    x = low.bit_length() - 1
    rest = mask ^ low
    # the star through x: either x is its center, or some neighbor is
    centers = [x] + [u for u in range(len(adj)) if adj[x] >> u & 1 and rest >> u & 1]
    for c in centers:
        cbit = 1 << c
        avail = adj[c] & mask & ~cbit
        if c != x:
            others = avail & ~low & ~cbit
            pools = [low | extra for r in range(min(k - 1, others.bit_count()) + 1)
                     for extra in _submasks(others, r)]
        else:
            pools = [m for r in range(1, min(k, avail.bit_count()) + 1) for m in _submasks(avail, r)]
        for leaves in pools:
            sub = _star_cover(adj, mask & ~cbit & ~leaves, k, memo)
            if sub is not None:
                result = ((c, leaves),) + sub
                memo[mask] = result
                return result
    memo[mask] = None
    return None


def _submasks(mask: int, r: int) -> list[int]:
    vertices = []
    m = mask
    while m:
        low = m & -m
        vertices.append(low)
        m ^= low
    return [sum(c) for c in combinations(vertices, r)]


def _check_star_args(g: Graph, k: int) -> None:
    if k < 2:
        raise ValueError("star factors require k >= 2")
    if g.n > STAR_LIMIT:
        raise ValueError(f"star factor search limited to n <= {STAR_LIMIT}")


def find_star_factor_through_edge(g: Graph, k: int, e: tuple[int, int]) -> StarForest | None:
    """A spanning star forest whose component through e is K_{1,1} or K_{1,2}."""
    _check_star_args(g, k)
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    full = (1 << g.n) - 1
    seeds: list[tuple[int, int]] = [(u, 1 << v)]  # e alone, center u by convention
    for c, leaf in ((u, v), (v, u)):
        extra = g.adj[c] & ~(1 << u) & ~(1 << v)
        while extra:
            low = extra & -extra
            seeds.append((c, (1 << leaf) | low))
            extra ^= low
    memo: dict[int, tuple | None] = {}
    for center, leaves in seeds:
        if leaves.bit_count() > k:
            continue
        restmask = full & ~(1 << center) & ~leaves
        sub = _star_cover(g.adj, restmask, k, memo)
        if sub is not None:
            stars = ((center, leaves),) + sub
            forest = StarForest(tuple((c, frozenset(_bits(m))) for c, m in stars))
            _validate_star_forest(g, forest, k)
            return forest
    return None


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def star_factor_through_edge(g: Graph, k: int, e: tuple[int, int]) -> bool:
    return find_star_factor_through_edge(g, k, e) is not None


def is_star_covered(g: Graph, k: int) -> Verdict:
    _check_star_args(g, k)
    if any(g.degree(v) == 0 for v in range(g.n)):
        raise ValueError("graph has an isolated vertex")
    certificate = None
    for e in sorted(g.edges()):
        forest = find_star_factor_through_edge(g, k, e)
        if forest is None:
            return Verdict(holds=False, witness=Witness(edge=e, detail="no qualifying star factor through this edge"))
        if certificate is None:
            certificate = forest
    return Verdict(holds=True, certificate=certificate)


def cek_criterion(g: Graph, k: int) -> Verdict:
    """Isolated-vertex criterion over every proper S."""
    if k < 2:
        raise ValueError("criterion requires k >= 2")
    if g.n > SUBSET_LIMIT:
        raise ValueError(f"subset criterion limited to n <= {SUBSET_LIMIT}")
    for size in range(g.n):
        for s in combinations(range(g.n), size):
            iso = analyze_components(g, s).isolated_count
            bound = k * size if is_independent(g, s) else k * size - 2 * k + 1
            if iso > bound:
                return Verdict(
                    holds=False,
                    witness=Witness(vertices=frozenset(s), detail=f"i(G-S)={iso} exceeds {bound}"),
                )
    return Verdict(holds=True)
