"""Unit tests for the factors module: matchings, star factors, and the
two subset criteria, each cross-checked against the worked examples."""

import random

import pytest

from factorcover.factors import (
    MATCHING_LIMIT,
    STAR_LIMIT,
    SUBSET_LIMIT,
    Matching,
    StarForest,
    cek_criterion,
    has_matching_through_edge,
    is_matching_covered,
    is_star_covered,
    lemma_matching_criterion,
    max_matching,
    max_matching_size,
    star_factor_through_edge,
)
from factorcover.graphs import (
    Graph,
    complete,
    disjoint_union,
    empty_graph,
    join,
    random_graph,
    star,
)

K2_K1K3 = join(complete(2), disjoint_union(empty_graph(1), complete(3)))


def relabel(g: Graph, perm: list[int]) -> Graph:
    rows = [0] * g.n
    for u, v in g.edges():
        rows[perm[u]] |= 1 << perm[v]
        rows[perm[v]] |= 1 << perm[u]
    return Graph(g.n, rows)


# ---------------------------------------------------------------------------
# maximum matching


def test_max_matching_examples():
    assert max_matching(complete(6)).size == 3
    assert max_matching(star(5)).size == 1
    assert max_matching(K2_K1K3).size == 3  # perfect matching exists
    assert max_matching(empty_graph(4)).size == 0


def test_max_matching_certificate_is_valid():
    m = max_matching(K2_K1K3)
    used = set()
    for u, v in m.edges:
        assert K2_K1K3.has_edge(u, v)
        assert not {u, v} & used
        used |= {u, v}


def test_max_matching_relabeling_invariant():
    rng = random.Random(13)
    for _ in range(25):
        n = rng.randint(2, 9)
        g = random_graph(n, rng.random(), rng)
        perm = list(range(n))
        rng.shuffle(perm)
        assert max_matching_size(g) == max_matching_size(relabel(g, perm))


def test_max_matching_size_limit():
    with pytest.raises(ValueError):
        max_matching_size(empty_graph(MATCHING_LIMIT + 1))


# ---------------------------------------------------------------------------
# matchings through an edge


def test_through_edge_complete():
    g = complete(6)
    for e in g.edges():
        assert has_matching_through_edge(g, 0, e)


def test_through_edge_extremal_graph():
    g = K2_K1K3
    # the join-part edge (0,1): removing both join vertices isolates vertex 2
    assert not has_matching_through_edge(g, 0, (0, 1))
    # an edge from a join vertex into the K3 part works
    assert has_matching_through_edge(g, 0, (0, 3))


def test_through_edge_validation():
    g = complete(6)
    with pytest.raises(ValueError, match="parity"):
        has_matching_through_edge(g, 1, (0, 1))
    with pytest.raises(ValueError, match="not an edge"):
        has_matching_through_edge(K2_K1K3, 0, (2, 3))
    with pytest.raises(ValueError):
        has_matching_through_edge(g, -2, (0, 1))


def test_through_edge_implies_large_matching():
    rng = random.Random(19)
    for _ in range(30):
        n = rng.choice((4, 6, 8))
        g = random_graph(n, rng.uniform(0.3, 0.8), rng)
        for e in g.edges():
            if has_matching_through_edge(g, 0, e):
                assert max_matching_size(g) >= n // 2
                break


def test_is_matching_covered_holds():
    verdict = is_matching_covered(complete(6), 0)
    assert verdict.holds
    assert isinstance(verdict.certificate, Matching)
    assert verdict.certificate.size == 3


def test_is_matching_covered_extremal_fails():
    verdict = is_matching_covered(K2_K1K3, 0)
    assert not verdict.holds
    assert verdict.witness is not None
    assert verdict.witness.edge == (0, 1)  # the join-part edge


def test_is_matching_covered_vacuous_and_deficient():
    # n - k = 0: a size-0 matching always exists; no edges to cover
    assert is_matching_covered(empty_graph(4), 4).holds
    # n - k = 4: empty(4) has no size-2 matching, so the property fails
    assert not is_matching_covered(empty_graph(4), 0).holds


# ---------------------------------------------------------------------------
# matching criterion


def test_lemma_matching_extremal():
    verdict = lemma_matching_criterion(K2_K1K3, 0)
    assert not verdict.holds
    assert verdict.witness is not None
    assert verdict.witness.vertices == frozenset({0, 1})
    assert "not independent" in verdict.witness.detail


def test_lemma_matching_complete():
    assert lemma_matching_criterion(complete(6), 0).holds


def test_lemma_matching_empty2_k2():
    assert lemma_matching_criterion(empty_graph(2), 2).holds


def test_lemma_matching_path4():
    # P4 with k=0: S = the two middle vertices gives o = 2 = |S|, S not independent
    p4 = empty_graph(4).with_edge(0, 1).with_edge(1, 2).with_edge(2, 3)
    verdict = lemma_matching_criterion(p4, 0)
    assert not verdict.holds
    assert verdict.witness.vertices == frozenset({1, 2})
    assert not is_matching_covered(p4, 0).holds  # middle edge fails


def test_lemma_matching_limits():
    with pytest.raises(ValueError):
        lemma_matching_criterion(empty_graph(SUBSET_LIMIT + 2), 0)
    with pytest.raises(ValueError, match="parity"):
        lemma_matching_criterion(complete(4), 1)


# ---------------------------------------------------------------------------
# star factors


def test_star_factor_complete():
    g = complete(6)
    for e in g.edges():
        assert star_factor_through_edge(g, 2, e)


def test_star_factor_blocked_join_edge():
    # K_2 v (2K_1 u K_2): removing the join edge's K_{1,1} leaves 2K_1 u K_2
    g = join(complete(2), disjoint_union(empty_graph(2), complete(2)))
    assert not star_factor_through_edge(g, 2, (0, 1))
    # an edge from the join part into the K_2 part is fine
    assert star_factor_through_edge(g, 2, (0, 4))


def test_star_factor_whole_graph_is_the_star():
    g = star(2)
    assert star_factor_through_edge(g, 2, (0, 1))
    assert star_factor_through_edge(g, 2, (0, 2))


def test_star_factor_validation():
    with pytest.raises(ValueError):
        star_factor_through_edge(complete(4), 1, (0, 1))
    with pytest.raises(ValueError, match="not an edge"):
        star_factor_through_edge(K2_K1K3, 2, (2, 3))
    with pytest.raises(ValueError):
        star_factor_through_edge(empty_graph(STAR_LIMIT + 1).with_edge(0, 1), 2, (0, 1))


def test_is_star_covered_holds():
    verdict = is_star_covered(complete(6), 2)
    assert verdict.holds
    assert isinstance(verdict.certificate, StarForest)
    covered = set()
    for c, leaves in verdict.certificate.stars:
        covered |= {c} | set(leaves)
    assert covered == set(range(6))


def test_is_star_covered_extremal_fails():
    g = join(complete(2), disjoint_union(empty_graph(2), complete(4)))  # n=8
    verdict = is_star_covered(g, 2)
    assert not verdict.holds
    assert verdict.witness is not None and verdict.witness.edge is not None


def test_is_star_covered_two_disjoint_edges():
    g = disjoint_union(star(1), star(1))
    assert is_star_covered(g, 2).holds


def test_is_star_covered_isolated_vertex_rejected():
    g = disjoint_union(empty_graph(1), complete(2))
    with pytest.raises(ValueError, match="isolated"):
        is_star_covered(g, 2)


def test_star_forest_respects_leaf_bound():
    # K_{1,3}: any spanning star forest is the whole K_{1,3}, whose component
    # through an edge is never K_{1,1} or K_{1,2}
    g = star(3)
    assert not is_star_covered(g, 2).holds
    assert not is_star_covered(g, 3).holds
    # K_{1,2} with k=2 is coverable: the graph itself is the factor
    assert is_star_covered(star(2), 2).holds


# ---------------------------------------------------------------------------
# CEK criterion


def test_cek_extremal():
    g = join(complete(2), disjoint_union(empty_graph(2), complete(4)))
    verdict = cek_criterion(g, 2)
    assert not verdict.holds
    assert verdict.witness.vertices == frozenset({0, 1})


def test_cek_complete():
    assert cek_criterion(complete(6), 2).holds


def test_cek_limits():
    with pytest.raises(ValueError):
        cek_criterion(complete(4), 1)
    with pytest.raises(ValueError):
        cek_criterion(empty_graph(SUBSET_LIMIT + 1), 2)


def test_cek_matches_brute_force_spotcheck():
    rng = random.Random(29)
    for _ in range(20):
        n = rng.randint(2, 6)
        g = random_graph(n, rng.uniform(0.3, 0.9), rng)
        if any(g.degree(v) == 0 for v in range(n)):
            continue
        assert cek_criterion(g, 2).holds == is_star_covered(g, 2).holds
