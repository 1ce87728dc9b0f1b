"""Package-level acceptance checks, one test per documented claim.

Each test prints exactly one 'criterion N: PASS/FAIL' verdict line before
asserting, so a -s run (or the captured output of a failure) reads as a
checklist.  Two criteria are expected to fail and are left failing on
purpose; see README 'Known red acceptance checks' for the analysis.
"""

import itertools
import time
from fractions import Fraction

import pytest

from pathcolor import (
    ColorState,
    average_defects,
    build_path,
    count_defects,
    edge_correcting_distribution,
    edge_correcting_randomization_independent,
    enumerate_protocols,
    execute_all_outcomes,
    find_symmetric_pair,
    group_count_vector,
    impossibility_check,
    oracle_protocol_distribution,
    pascal_row_property,
    random_defect_distribution,
    run_verification,
    sample_protocol,
)
from pathcolor.cli import main

FULL_GRID = [(n, c) for n in range(2, 11) for c in range(2, 5)]


def _verdict(num: int, ok: bool, detail: str = ""):
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" {detail}"
    print(line)
    assert ok, line


def test_criterion_01_random_census_matches_enumeration():
    t0 = time.monotonic()
    res = run_verification(theorems=(2,))
    cells = {(r.n, r.c) for r in res.rows}
    elapsed = time.monotonic() - t0
    ok = res.ok and cells == set(FULL_GRID) and elapsed < 60
    _verdict(1, ok, f"{len(res.rows)} exact comparisons in {elapsed:.2f}s")


def test_criterion_02_random_average_closed_form():
    ok = all(
        average_defects(random_defect_distribution(n, c)) == Fraction(n - 1, c)
        for n, c in FULL_GRID
    )
    spot = average_defects(random_defect_distribution(50, 2))
    ok = ok and spot == Fraction(49, 2)
    _verdict(2, ok, f"grid exact, spot n=50 c=2 -> {spot}")


def test_criterion_03_pascal_rows():
    ok = all(pascal_row_property(n) for n in range(2, 17))
    _verdict(3, ok, "n=2..16 collapse to doubled binomial rows")


def test_criterion_04_group_census_and_partition_identity():
    res = run_verification(theorems=(3,))
    cells = {(r.n, r.c) for r in res.rows}
    identity = all(
        group_count_vector(n, c).partition_identity_holds() for n, c in FULL_GRID
    )
    ok = res.ok and cells == set(FULL_GRID) and identity
    _verdict(4, ok, f"{len(res.rows)} comparisons incl. weighted-length rows")


def test_criterion_05_edge_correcting_census():
    # prerequisite first: the final count never depends on what the
    # endpoint redraws happen to pick
    independent = all(
        edge_correcting_randomization_independent(n, 3) for n in range(4, 9)
    )
    res = run_verification(theorems=(4,))
    grid = [(n, 2) for n in range(4, 13)] + [(n, 3) for n in range(4, 9)]
    cells = {(r.n, r.c) for r in res.rows}
    averages = all(
        average_defects(edge_correcting_distribution(n, c)) == Fraction(n - 3, c)
        for n, c in grid
    )
    spot = oracle_protocol_distribution(6, 3, enumerate_protocols()[1]).average()
    ok = (
        independent
        and res.ok
        and cells == set(grid)
        and averages
        and spot == Fraction(1, 1)
    )
    _verdict(5, ok, "redraw-independent, census and (n-3)/c averages exact")


def test_criterion_06_center_correcting_adjudication():
    t0 = time.monotonic()
    res = run_verification(theorems=(5,))
    elapsed = time.monotonic() - t0
    adj = res.adjudication
    assert elapsed < 120
    assert {r.n for r in res.rows} == set(range(3, 15))
    if adj.claim_upheld:
        _verdict(6, True, f"variant '{adj.named_variant}' exact for n=3..14")
    else:
        # neither rendering of the count survives enumeration; print the
        # exact tables and fail honestly rather than patching the formula
        print(adj.diagnostic())
        _verdict(
            6,
            False,
            "neither textual rendering matches the enumeration "
            f"(first mismatch {adj.first_mismatch['statement']})",
        )


def test_criterion_07_symmetric_pair_defeats_every_protocol():
    g = build_path(4)
    pair = find_symmetric_pair(g, 1)
    assert (pair.i + 1, pair.j + 1) == (2, 3)

    rep2 = impossibility_check(g, pair, 2)
    assert rep2.state.colors == (2, 1, 1, 2)  # (a,x,x,a) pattern
    two_ok = all(r.final_defects >= 1 for r in rep2.rows)

    rep3 = impossibility_check(g, pair, 3)
    three_ok = all(r.edge_defect_probability > 0 for r in rep3.rows)

    # corollary: every protocol fails from some start, not only this one
    starts = [
        ColorState(colors=cols, palette_size=2)
        for cols in itertools.product((1, 2), repeat=4)
    ]
    corollary = all(
        any(
            any(
                count_defects(g, w.outcome.state) > 0
                for w in execute_all_outcomes(g, s, spec)
            )
            for s in starts
        )
        for spec in enumerate_protocols()
    )
    ok = two_ok and three_ok and corollary
    _verdict(7, ok, "32/32 protocols defective on the mirrored pair")


ACCEPT_ARGS = [
    "simulate",
    "--n", "50",
    "--c", "2,4,8,16,32",
    "--protocols", "random,C|phi,phi|C,Cbar|CbarX",
    "--trials", "100000",
    "--seed", "1",
    "--normalization", "sampled",
    "--no-timestamp",
]


def _parse_rows(text: str) -> dict:
    rows = {}
    for line in text.splitlines():
        if line.startswith("#") or line.startswith("protocol,"):
            continue
        f = line.split(",")
        rows[(f[0], int(f[2]))] = {
            "mean": float(f[5]),
            "stderr": float(f[6]),
            "normalized": float(f[7]),
        }
    return rows


@pytest.fixture(scope="module")
def dataset_csv(tmp_path_factory):
    out = tmp_path_factory.mktemp("accept") / "dataset.csv"
    t0 = time.monotonic()
    rc = main(ACCEPT_ARGS + ["--output", str(out)])
    elapsed = time.monotonic() - t0
    assert rc == 0
    assert elapsed < 600
    return out.read_bytes()


def test_criterion_08_normalized_defect_curves(dataset_csv):
    rows = _parse_rows(dataset_csv.decode())
    c_values = (2, 4, 8, 16, 32)
    failed = []

    if not all(rows[("phi|phi", c)]["normalized"] == 1.0 for c in c_values):
        failed.append("a: random curve not identically 1")

    for c in c_values:
        r = rows[("C|phi", c)]
        slack = 3 * r["stderr"] / rows[("phi|phi", c)]["mean"]
        if abs(r["normalized"] - 47 / 49) > slack:
            failed.append(f"b: edge-correcting off 47/49 at c={c}")

    if not rows[("phi|C", 2)]["normalized"] < 1:
        failed.append("c: center-correcting not below 1 at c=2")
    gap_c = abs(rows[("phi|C", 32)]["normalized"] - 1)
    if gap_c > 0.05:
        failed.append(
            f"c: center-correcting at c=32 is {rows[('phi|C', 32)]['normalized']:.4f},"
            f" |1-x|={gap_c:.4f} > 0.05"
        )

    if not rows[("Cbar|CbarX", 2)]["normalized"] >= rows[("phi|C", 2)]["normalized"]:
        failed.append("d: no-conflict variant below center-correcting at c=2")
    if abs(rows[("Cbar|CbarX", 32)]["normalized"] - 1) > 0.05:
        failed.append("d: no-conflict variant not within 0.05 at c=32")

    _verdict(
        8,
        not failed,
        "all sub-checks hold" if not failed else "; ".join(failed),
    )


def test_criterion_09_byte_identical_rerun(dataset_csv, tmp_path):
    out = tmp_path / "again.csv"
    rc = main(ACCEPT_ARGS + ["--output", str(out)])
    assert rc == 0
    _verdict(9, out.read_bytes() == dataset_csv, "same seed, same bytes")


def test_criterion_10_sampling_tracks_enumeration():
    hits, cells = 0, 0
    for c in (2, 3):
        for spec in enumerate_protocols():
            exact = float(oracle_protocol_distribution(6, c, spec).average())
            rep = sample_protocol(6, c, spec, 10_000, seed=1)
            cells += 1
            if abs(rep.mean - exact) <= 4 * rep.stderr:
                hits += 1
    _verdict(10, hits >= 0.95 * cells, f"{hits}/{cells} cells within 4 stderr")
