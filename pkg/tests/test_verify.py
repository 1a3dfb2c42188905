"""Unit tests for the verify module: sweep configs, theorem sweeps at desk
scale, lemma property trials, equivalences, audits, and replayability."""

import pytest

from factorcover.verify import (
    SWEEP_TARGETS,
    SweepConfig,
    audit_grid,
    audit_polynomials,
    run_sweep,
    scan_lemma_grid,
    verify_equivalence,
    verify_lemma,
    verify_matching_theorem,
    verify_star_theorem,
)


# ---------------------------------------------------------------------------
# config


def test_config_validation():
    with pytest.raises(ValueError, match="unknown sweep target"):
        SweepConfig(target="thm9")
    with pytest.raises(ValueError, match="sample_count"):
        SweepConfig(target="thm1", mode="sampled", sample_count=0)
    cfg = SweepConfig(target="thm1", n=6, k=0)
    assert cfg.tolerance == 1e-9


def test_all_targets_listed():
    assert set(SWEEP_TARGETS) >= {"thm1", "thm2", "thm3", "thm4", "equivalence-A", "audit-h1"}


# ---------------------------------------------------------------------------
# theorem sweeps


def test_thm1_exhaustive_n6():
    rep = verify_matching_theorem("A-radius", 6, 0)
    assert rep.passed
    assert rep.graphs_checked == 156
    assert rep.extremal_confirmed
    assert rep.evidence == "exhaustive-proof"
    assert rep.condition_hits >= 1
    assert rep.notes == []  # n=6 meets the bound 5k+6 exactly


def test_thm1_below_bound_noted():
    rep = verify_matching_theorem("A-radius", 4, 0)
    assert any("outside hypothesis" in note for note in rep.notes)


def test_thm1_parity_rejected():
    with pytest.raises(ValueError, match="parity|mod 2"):
        verify_matching_theorem("A-radius", 7, 0)


def test_thm3_small_sampled():
    rep = verify_star_theorem("A-radius", 10, 2, mode="sampled", sample_count=300, rng_seed=1)
    assert rep.passed
    assert rep.extremal_confirmed
    assert rep.evidence == "sampled-evidence"
    assert any("evidence, not proof" in note for note in rep.notes)


def test_thm4_small_sampled():
    rep = verify_star_theorem("Q-radius", 10, 2, mode="sampled", sample_count=300, rng_seed=1)
    assert rep.passed and rep.extremal_confirmed


def test_star_theorem_requires_k2():
    with pytest.raises(ValueError):
        verify_star_theorem("A-radius", 10, 1)


def test_sampled_sweep_replayable():
    a = verify_matching_theorem("A-radius", 8, 0, mode="sampled", sample_count=200, rng_seed=5)
    b = verify_matching_theorem("A-radius", 8, 0, mode="sampled", sample_count=200, rng_seed=5)
    assert a.to_dict() == b.to_dict()


# ---------------------------------------------------------------------------
# lemma property trials


@pytest.mark.parametrize("target", ["SP", "GE", "equit", "inequit"])
def test_lemma_trials_pass(target):
    rep = verify_lemma(target, trials=60, rng_seed=3)
    assert rep.passed
    assert rep.graphs_checked == 60
    assert rep.evidence == "property-trials"


def test_lemma_unknown_target():
    with pytest.raises(ValueError):
        verify_lemma("XX", trials=1)
    with pytest.raises(ValueError):
        verify_lemma("SP", trials=0)


# ---------------------------------------------------------------------------
# equivalences


def test_equivalence_A_small():
    rep = verify_equivalence("A", n_max=5)
    assert rep.passed
    assert rep.graphs_checked > 0
    assert rep.evidence == "exhaustive-proof"


def test_equivalence_B_small():
    rep = verify_equivalence("B", n_max=5)
    assert rep.passed


def test_equivalence_k_set_filter():
    rep = verify_equivalence("A", n_max=4, k_set=[0])
    # only even n contribute k=0 checks
    assert rep.passed and rep.graphs_checked == 2 + 11  # n=2 and n=4 class counts


def test_equivalence_limit():
    with pytest.raises(ValueError):
        verify_equivalence("A", n_max=8)


# ---------------------------------------------------------------------------
# audits and scans


def test_audit_grid_shape():
    grid = audit_grid("h1")
    assert all(n >= 5 * k + 6 for n, k, _ in grid)
    assert {k for _, k, _ in grid} == {0, 1, 2, 3, 4}
    grid3 = audit_grid("h3")
    assert {k for _, k, _ in grid3} == {2, 3, 4}


@pytest.mark.parametrize("which", ["h1", "h2", "h3", "h5"])
def test_audit_exact_lemmas(which):
    rep = audit_polynomials(which)
    assert rep.passed
    assert rep.errata == []
    assert rep.evidence == "exact-arithmetic"


@pytest.mark.parametrize("which", ["h4", "h6"])
def test_audit_reported_lemmas(which):
    rep = audit_polynomials(which)
    # pass = audit completes; errata are reported, not presumed
    assert rep.graphs_checked > 0
    assert isinstance(rep.errata, list)


def test_audit_h3_bound_note():
    rep = audit_polynomials("h3")
    assert any("bound" in note for note in rep.notes)


@pytest.mark.parametrize("which", ["h1", "h2", "h3", "h4", "h5", "h6"])
def test_scan_grid_confirms_maximizer(which):
    rep = scan_lemma_grid(which)
    assert rep.passed
    assert rep.graphs_checked > 0


# ---------------------------------------------------------------------------
# dispatcher


def test_run_sweep_dispatch():
    rep = run_sweep(SweepConfig(target="thm1", n=6, k=0))
    assert rep.passed and rep.graphs_checked == 156
    rep = run_sweep(SweepConfig(target="audit-h1"))
    assert rep.passed
    rep = run_sweep(SweepConfig(target="equivalence-B", n_max=4))
    assert rep.passed
    rep = run_sweep(SweepConfig(target="lemma-SP", trials=10))
    assert rep.passed


def test_run_sweep_requires_n_k():
    with pytest.raises(ValueError):
        run_sweep(SweepConfig(target="thm1"))


def test_report_dict_shape():
    rep = run_sweep(SweepConfig(target="thm1", n=6, k=0))
    d = rep.to_dict()
    for key in (
        "config",
        "graphs_checked",
        "condition_hits",
        "violations",
        "extremal_confirmed",
        "errata",
        "evidence",
        "notes",
        "passed",
    ):
        assert key in d
    assert d["config"]["target"] == "thm1"
