from fractions import Fraction

import pytest

from pathcolor import (
    DatasetRow,
    MonteCarloError,
    ProtocolSpec,
    defects_vs_colors_dataset,
    oracle_protocol_distribution,
    sample_protocol,
)

RANDOM = ProtocolSpec.parse("random")
EDGE = ProtocolSpec.parse("C|phi")
CENTER = ProtocolSpec.parse("phi|C")
BOTH_ENDS = ProtocolSpec.parse("Cbar|CbarX")


def test_same_seed_same_report():
    a = sample_protocol(20, 3, CENTER, 40_000, seed=5)
    b = sample_protocol(20, 3, CENTER, 40_000, seed=5)
    assert a == b
    assert a.defect_total > 0
    assert a.defect_sq_total >= a.defect_total


def test_worker_count_does_not_change_the_tally():
    # 40000 trials span three chunks, so splitting actually happens
    a = sample_protocol(30, 2, BOTH_ENDS, 40_000, seed=9, workers=1)
    b = sample_protocol(30, 2, BOTH_ENDS, 40_000, seed=9, workers=4)
    assert (a.defect_total, a.defect_sq_total) == (b.defect_total, b.defect_sq_total)
    assert a == b


def test_sampled_means_track_known_averages():
    rep = sample_protocol(50, 2, RANDOM, 100_000, seed=0)
    assert abs(rep.mean - 24.5) <= 4 * rep.stderr
    rep = sample_protocol(50, 2, EDGE, 100_000, seed=0)
    assert abs(rep.mean - 23.5) <= 4 * rep.stderr


def test_sampled_mean_matches_oracle_small():
    exact = oracle_protocol_distribution(6, 3, CENTER).average()
    assert exact == Fraction(17, 18)
    rep = sample_protocol(6, 3, CENTER, 50_000, seed=2)
    assert abs(rep.mean - float(exact)) <= 4 * rep.stderr


def test_dataset_shape_and_fields():
    rows = defects_vs_colors_dataset(
        10, [2, 3], [RANDOM, CENTER], trials=2_000, seed=1
    )
    assert len(rows) == 4
    assert [(r.c, r.protocol) for r in rows] == [
        (2, "phi|phi"),
        (2, "phi|C"),
        (3, "phi|phi"),
        (3, "phi|C"),
    ]
    for r in rows:
        assert isinstance(r, DatasetRow)
        assert r.n == 10
        assert r.c_over_chi == r.c / 2
        assert r.trials == 2_000
        assert r.seed == 1
        assert r.stderr > 0


def test_sampled_normalization_pins_random_to_one():
    rows = defects_vs_colors_dataset(
        12, [2, 4], [RANDOM, BOTH_ENDS], trials=5_000, seed=3,
        normalization="sampled",
    )
    for r in rows:
        if r.protocol == "phi|phi":
            assert r.normalized_mean == 1.0


def test_exact_mode_rows():
    rows = defects_vs_colors_dataset(
        8, [2], [RANDOM, EDGE], trials=999, seed=7, mode="exact"
    )
    assert [r.trials for r in rows] == [0, 0]
    assert [r.stderr for r in rows] == [0.0, 0.0]
    random_row, edge_row = rows
    assert random_row.normalized_mean == 1.0
    assert random_row.mean == 3.5
    assert edge_row.mean == 2.5  # (n-3)/c
    assert edge_row.normalized_mean == float(Fraction(5, 7))


def test_normalized_mean_approaches_one_with_many_colors():
    # the interesting protocols lose their edge as c grows
    for spec in (CENTER, BOTH_ENDS):
        rows = defects_vs_colors_dataset(
            50, [2, 20], [spec], trials=20_000, seed=3
        )
        near2, near20 = (abs(r.normalized_mean - 1.0) for r in rows)
        assert near20 < near2


def test_sampling_validation():
    with pytest.raises(MonteCarloError):
        sample_protocol(1, 2, RANDOM, 10, seed=0)
    with pytest.raises(MonteCarloError):
        sample_protocol(5, 1, RANDOM, 10, seed=0)
    with pytest.raises(MonteCarloError):
        sample_protocol(5, 201, RANDOM, 10, seed=0)
    with pytest.raises(MonteCarloError):
        sample_protocol(5, 2, RANDOM, 0, seed=0)
    with pytest.raises(MonteCarloError):
        defects_vs_colors_dataset(5, [2], [RANDOM], 10, 0, normalization="self")
    with pytest.raises(MonteCarloError):
        defects_vs_colors_dataset(5, [2], [RANDOM], 10, 0, mode="fast")
