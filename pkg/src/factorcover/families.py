"""Extremal join families and their small quotient characteristic polynomials.

Three families, all of the shape <outer> v (i*K_1 u K_c):

  H            K_s v ((s+k-1)K_1 u K_{n-2s-k+1})   outer clique
  G-empty      sK_1 v ((ks+1)K_1 u K_{n-(k+1)s-1}) outer independent set
  G-nonempty   K_s v ((ks-2k+2)K_1 u K_{n-(k+1)s+2k-2})

The natural 3-part partition (outer, independent, clique) is equitable, so
each family's top eigenvalue is the largest root of a cubic with integer
coefficients.  Two sources of that cubic exist: the transcription published
with each maximization lemma, and the exact characteristic polynomial of
the quotient matrix.  The latter is authoritative; the transcriptions are
kept only to audit the published coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from . import spectra
from .graphs import Graph, analyze_components, complete, disjoint_union, empty_graph, join
from .spectra import Kind, largest_root_cubic

__all__ = [
    "FamilyTag",
    "LemmaTag",
    "FamilyParams",
    "CubicCoeffs",
    "ScanReport",
    "LEMMA_FAMILY",
    "LEMMA_KIND",
    "LEMMA_CLAIMED_S",
    "lemma_n_start",
    "lemma_s_range",
    "part_sizes",
    "build_family",
    "natural_parts",
    "transcribed_poly",
    "quotient_poly",
    "extremal_value",
    "scan_maximizer",
    "matches_family",
]

FamilyTag = Literal["H", "G-empty", "G-nonempty"]
LemmaTag = Literal["h1", "h2", "h3", "h4", "h5", "h6"]

LEMMA_FAMILY: dict[str, FamilyTag] = {
    "h1": "H",
    "h2": "H",
    "h3": "G-empty",
    "h4": "G-nonempty",
    "h5": "G-empty",
    "h6": "G-nonempty",
}
LEMMA_KIND: dict[str, Kind] = {"h1": "A", "h2": "Q", "h3": "A", "h4": "A", "h5": "Q", "h6": "Q"}
LEMMA_CLAIMED_S = {"h1": 2, "h2": 2, "h3": 1, "h4": 2, "h5": 1, "h6": 2}


class FamilyParamError(ValueError):
    """A family parameter violates its lemma hypothesis."""


@dataclass(frozen=True)
class FamilyParams:
    n: int
    k: int
    s: int
    family: FamilyTag

    def __post_init__(self):
        n, k, s = self.n, self.k, self.s
        if self.family == "H":
            if s < 1:
                raise FamilyParamError("H family requires s >= 1")
            if k < 0:
                raise FamilyParamError("H family requires k >= 0")
            if n < 2 * s + k:
                raise FamilyParamError("H family requires n >= 2s + k")
        elif self.family == "G-empty":
            if s < 1:
                raise FamilyParamError("G-empty family requires s >= 1")
            if k < 2:
                raise FamilyParamError("G-empty family requires k >= 2")
            if n < (k + 1) * s + 1:
                raise FamilyParamError("G-empty family requires n >= (k+1)s + 1")
        elif self.family == "G-nonempty":
            if s < 2:
                raise FamilyParamError("G-nonempty family requires s >= 2")
            if k < 2:
                raise FamilyParamError("G-nonempty family requires k >= 2")
            if n < (k + 1) * s - 2 * k + 2:
                raise FamilyParamError("G-nonempty family requires n >= (k+1)s - 2k + 2")
        else:
            raise FamilyParamError(f"unknown family tag {self.family!r}")


@dataclass(frozen=True)
class CubicCoeffs:
    c3: int
    c2: int
    c1: int
    c0: int
    source: str

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.c3, self.c2, self.c1, self.c0)

    def largest_root(self) -> float:
        return largest_root_cubic(self.c3, self.c2, self.c1, self.c0)


def part_sizes(p: FamilyParams) -> tuple[int, int, int]:
    """(outer, independent, clique) part sizes."""
    n, k, s = p.n, p.k, p.s
    if p.family == "H":
        return (s, s + k - 1, n - 2 * s - k + 1)
    if p.family == "G-empty":
        return (s, k * s + 1, n - (k + 1) * s - 1)
    return (s, k * s - 2 * k + 2, n - (k + 1) * s + 2 * k - 2)


def build_family(p: FamilyParams) -> Graph:
    """Vertex order: outer block, then independent block, then clique block."""
    outer_size, indep, clique = part_sizes(p)
    outer = complete(outer_size) if p.family in ("H", "G-nonempty") else empty_graph(outer_size)
    inner = empty_graph(indep)
    if clique:
        inner = disjoint_union(inner, complete(clique))
    return join(outer, inner)


def natural_parts(p: FamilyParams) -> list[frozenset[int]]:
    """The construction's (outer, independent, clique) partition; empty parts dropped."""
    outer, indep, clique = part_sizes(p)
    bounds = [(0, outer), (outer, outer + indep), (outer + indep, outer + indep + clique)]
    return [frozenset(range(a, b)) for a, b in bounds if b > a]


# ---------------------------------------------------------------------------
# polynomials


def transcribed_poly(which: LemmaTag, p: FamilyParams) -> CubicCoeffs:
    """The published cubic, coefficient for coefficient."""
    if LEMMA_FAMILY[which] != p.family:
        raise ValueError(f"lemma {which} applies to family {LEMMA_FAMILY[which]}, not {p.family}")
    n, k, s = p.n, p.k, p.s
    if which == "h1":
        c2 = -(n - k - s - 1)
        c1 = -(n + s * s + (k - 2) * s - k)
        c0 = -2 * s**3 + (n - 3 * k + 2) * s**2 + ((k - 1) * n - k * k + k) * s
    elif which == "h2":
        c2 = -(3 * n - 2 * k - s - 2)
        c1 = -(4 * s * s - (n - 4 * k + 4) * s - 2 * n * n + 2 * (k + 2) * n - 4 * k)
        c0 = (
            -2 * s**3
            + (4 * n - 4 * k - 2) * s**2
            - (2 * n * n - 2 * (2 * k + 1) * n + 2 * k * k + 2 * k) * s
        )
    elif which == "h3":
        c2 = -(n - s - k * s - 2)
        c1 = -(n * s - s * s)
        c0 = -(k * k + k) * s**3 + (k * n - 3 * k - 1) * s**2 + (n - 2) * s
    elif which == "h4":
        c2 = -(n + 2 * k - k * s - 4)
        c1 = -(n + k * s * s - (3 * k - 2) * s + 2 * k - 3)
        c0 = (
            -(k * k + k) * s**3
            + (k * n + 4 * k * k - 3 * k - 2) * s**2
            - (2 * (k - 1) * n + 4 * k * k - 10 * k + 6) * s
        )
    elif which == "h5":
        c2 = -(3 * n - (2 * k + 1) * s - 4)
        c1 = 2 * n * n - 4 * n - (2 * k + 1) * n * s
        c0 = (
            -(2 * k * k + 4 * k + 2) * s**3
            + (4 * (k + 1) * n - 6 * k - 6) * s**2
            - (2 * n * n - 6 * n + 4) * s
        )
    elif which == "h6":
        c2 = -(3 * n - (2 * k - 1) * s + 4 * k - 8)
        c1 = (
            2 * n * n
            + (4 * k - 10) * n
            - 4 * k * s * s
            - ((2 * k - 3) * n - 12 * k + 12) * s
            - 8 * k
            + 12
        )
        c0 = (
            -2 * k * k * s**3
            + (4 * k * n + 8 * k * k - 14 * k) * s**2
            - (2 * n * n + (8 * k - 14) * n + 8 * k * k - 28 * k + 24) * s
        )
    else:
        raise ValueError(f"unknown lemma tag {which!r}")
    return CubicCoeffs(1, c2, c1, c0, source=f"transcribed-{which}")


def _char_poly_3x3(b: list[list[int]]) -> tuple[int, int, int, int]:
    # det(xI - B) by cofactor expansion, exact integers
    tr = b[0][0] + b[1][1] + b[2][2]
    m01 = b[0][0] * b[1][1] - b[0][1] * b[1][0]
    m02 = b[0][0] * b[2][2] - b[0][2] * b[2][0]
    m12 = b[1][1] * b[2][2] - b[1][2] * b[2][1]
    det = (
        b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1])
        - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0])
        + b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0])
    )
    return (1, -tr, m01 + m02 + m12, -det)


def quotient_poly(p: FamilyParams, kind: Kind) -> CubicCoeffs:
    """Exact characteristic polynomial of the 3x3 quotient of the built graph."""
    parts = natural_parts(p)
    if len(parts) != 3:
        raise ValueError("quotient cubic requires all three parts nonempty")
    g = build_family(p)
    q = spectra.quotient(g, parts, kind)
    if not q.equitable:
        raise RuntimeError(f"family partition unexpectedly non-equitable at block {q.offending_block}")
    assert q.b_exact is not None
    c3, c2, c1, c0 = _char_poly_3x3([list(row) for row in q.b_exact])
    return CubicCoeffs(c3, c2, c1, c0, source="quotient-derived")


def _quotient_top_value(p: FamilyParams, kind: Kind) -> float:
    parts = natural_parts(p)
    if len(parts) == 3:
        return quotient_poly(p, kind).largest_root()
    g = build_family(p)
    q = spectra.quotient(g, parts, kind)
    if not q.equitable:
        raise RuntimeError("family partition unexpectedly non-equitable")
    assert q.b_exact is not None
    b = q.b_exact
    if len(b) == 1:
        return float(b[0][0])
    # quadratic: x^2 - tr x + det
    tr = b[0][0] + b[1][1]
    det = b[0][0] * b[1][1] - b[0][1] * b[1][0]
    disc = tr * tr - 4 * det
    return (tr + disc**0.5) / 2.0


@dataclass(frozen=True)
class ExtremalValue:
    value: float
    transcribed_value: float | None
    discrepancy: float | None


def extremal_value(p: FamilyParams, kind: Kind, which: LemmaTag | None = None) -> ExtremalValue:
    """Top eigenvalue of the family graph via its quotient (authoritative).

    When a lemma tag is supplied and the 3x3 quotient exists, the published
    polynomial's largest root is reported alongside for discrepancy checks.
    """
    value = _quotient_top_value(p, kind)
    transcribed = None
    if which is not None and len(natural_parts(p)) == 3:
        transcribed = transcribed_poly(which, p).largest_root()
    disc = abs(value - transcribed) if transcribed is not None else None
    return ExtremalValue(value=value, transcribed_value=transcribed, discrepancy=disc)


# ---------------------------------------------------------------------------
# maximizer scans


def lemma_n_start(which: LemmaTag, k: int) -> int:
    if which == "h1":
        return 5 * k + 6
    if which == "h2":
        return 5 * k + 7
    if which == "h3":
        return -(-3 * k // 2) + 5  # ceil(3k/2) + 5
    if which == "h4":
        return k + 7
    if which == "h5":
        return 2 * k + 4
    if which == "h6":
        return 2 * k + 6
    raise ValueError(f"unknown lemma tag {which!r}")


def lemma_s_range(which: LemmaTag, n: int, k: int) -> list[int]:
    fam = LEMMA_FAMILY[which]
    if fam == "H":
        return list(range(2, (n - k) // 2 + 1))
    if fam == "G-empty":
        return list(range(1, (n - 1) // (k + 1) + 1))
    return list(range(2, (n + 2 * k - 2) // (k + 1) + 1))


@dataclass(frozen=True)
class ScanReport:
    which: str
    n: int
    k: int
    s_values: tuple[int, ...]
    values: tuple[float, ...]
    maximizer: int
    claimed: int
    gap: float
    confirmed: bool


def scan_maximizer(which: LemmaTag, n: int, k: int) -> ScanReport:
    """Scan the lemma's legal s-range and compare against its claimed maximizer."""
    if n < lemma_n_start(which, k):
        raise ValueError(f"{which} requires n >= {lemma_n_start(which, k)} at k={k}")
    fam = LEMMA_FAMILY[which]
    kind = LEMMA_KIND[which]
    s_values = lemma_s_range(which, n, k)
    if not s_values:
        raise ValueError(f"empty s-range for {which} at n={n}, k={k}")
    values = [_quotient_top_value(FamilyParams(n, k, s, fam), kind) for s in s_values]
    order = sorted(range(len(values)), key=lambda i: values[i], reverse=True)
    best = order[0]
    gap = values[best] - values[order[1]] if len(order) > 1 else float("inf")
    claimed = LEMMA_CLAIMED_S[which]
    return ScanReport(
        which=which,
        n=n,
        k=k,
        s_values=tuple(s_values),
        values=tuple(values),
        maximizer=s_values[best],
        claimed=claimed,
        gap=gap,
        confirmed=s_values[best] == claimed and gap > 0.0,
    )


# ---------------------------------------------------------------------------
# structural recognizer (any order)


def matches_family(g: Graph, p: FamilyParams) -> bool:
    """Decide g == build_family(p) up to isomorphism, structurally.

    Works at any order: the outer block is forced to be the s highest-degree
    vertices, after which the join and inner structure are direct checks.
    """
    outer_size, indep, clique = part_sizes(p)
    if g.n != p.n:
        return False
    expected_edges = build_family(p).edge_count()
    if g.edge_count() != expected_edges:
        return False
    degs = sorted(range(g.n), key=g.degree, reverse=True)
    outer = degs[:outer_size]
    outer_mask = sum(1 << v for v in outer)
    full = (1 << g.n) - 1
    for v in outer:
        want = full ^ (1 << v)
        if p.family == "G-empty":
            want &= ~outer_mask
        if g.adj[v] != want:
            return False
    report = analyze_components(g, outer)
    singles = sum(1 for c in report.components if len(c) == 1)
    bigs = [c for c in report.components if len(c) > 1]
    if clique <= 1:
        return singles == indep + clique and not bigs
    if singles != indep or len(bigs) != 1 or len(bigs[0]) != clique:
        return False
    rest_mask = sum(1 << v for v in bigs[0])
    return all((g.adj[v] & rest_mask).bit_count() == clique - 1 for v in bigs[0])
