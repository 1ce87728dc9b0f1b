import pytest

from pathcolor import (
    edge_correcting_randomization_independent,
    run_verification,
)


def test_random_census_sweep_small_grid():
    res = run_verification(theorems=(2,), n_max=4, c_max=3)
    assert len(res.rows) == 18  # (2+3+4) d-rows for each of c=2,3
    assert {r.theorem for r in res.rows} == {"2"}
    assert all(r.match for r in res.rows)
    assert res.ok
    assert res.first_failure is None
    assert res.adjudication is None


def test_group_sweep_has_identity_row():
    res = run_verification(theorems=(3,), only_n=4, only_c=2)
    assert [r.d for r in res.rows] == [1, 2, 3, 4, -1]
    agg = res.rows[-1]
    assert (agg.closed_form, agg.oracle) == ("64", "64")
    assert res.ok


def test_pinned_cell_outside_default_caps():
    res = run_verification(theorems=(2,), only_n=12, c_max=2)
    assert [r.n for r in res.rows] == [12] * 12
    assert res.ok


def test_edge_correcting_sweep_and_independence():
    assert edge_correcting_randomization_independent(5, 3)
    res = run_verification(theorems=(4,), only_n=5, only_c=3)
    head = res.rows[0]
    assert (head.theorem, head.d, head.closed_form) == ("4", -1, "redraw-independent")
    assert head.match
    assert [r.d for r in res.rows[1:]] == list(range(5))
    assert res.ok


def test_center_sweep_tiny_paths_upholds_the_claim():
    res = run_verification(theorems=(5,), n_max=5)
    adj = res.adjudication
    assert adj.matching_variants() == ("statement", "proof", "derivation")
    assert adj.named_variant == "statement"
    assert adj.claim_upheld
    assert res.ok


def test_center_sweep_fails_from_n_six():
    res = run_verification(theorems=(5,), n_max=7)
    adj = res.adjudication
    assert not adj.claim_upheld
    assert adj.named_variant is None
    assert adj.matching_variants() == ("derivation",)
    assert adj.first_mismatch["statement"] == (6, 0, 20, 12)
    assert adj.first_mismatch["proof"] == (6, 0, 20, 12)
    assert adj.oracle_tables[6] == (12, 28, 20, 4, 0, 0)
    assert not res.ok
    first = res.first_failure
    assert (first.theorem, first.n, first.d) == ("5-statement", 6, 0)
    assert (first.closed_form, first.oracle) == ("20", "12")
    # the informational rendering stays out of the verdict
    assert all(r.match for r in res.rows if r.theorem == "5-derivation")
    text = adj.diagnostic()
    assert "first mismatch at n=6, d=0" in text
    assert "exact oracle tables" in text
    assert "transcription slips" in text


def test_unknown_theorem_rejected():
    with pytest.raises(ValueError, match="theorem 7"):
        run_verification(theorems=(7,))
