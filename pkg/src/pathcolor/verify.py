"""Sweeps comparing every closed-form count against brute-force enumeration.

The verify surface is a flat table of (theorem, n, c, d) cells so a CSV dump
diffs cleanly.  Aggregate identities get d = -1 rows.  The center-correcting
formula is special: it circulates in two textual renderings plus the form the
counting argument behind it actually produces, and the sweep adjudicates
which of the three the enumeration supports instead of guessing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .analytics import (
    CENTER_CORRECTING_VARIANTS,
    center_correcting_distribution_c2,
    edge_correcting_distribution,
    group_count_vector,
    random_defect_distribution,
)
from .coloring import ColorState, count_defects
from .graph import build_path
from .oracle import (
    EnumerationBudget,
    oracle_group_counts,
    oracle_protocol_distribution,
    oracle_random_distribution,
)
from .protocols import ProtocolSpec, execute_all_outcomes

EDGE_CORRECTING_MASK = 1    # (C,phi): endpoints redraw on C, interior never
CENTER_CORRECTING_MASK = 4  # (phi,C): interior redraws on C, endpoints never

THEOREMS = (2, 3, 4, 5)

# deeper sweeps stay exact but blow the default enumeration budget
_RANDOM_N_MAX = 10
_RANDOM_C_MAX = 4
_EDGE_N_MAX = {2: 12, 3: 8}
_EDGE_N_MAX_OTHER = 6
_EDGE_C_MAX = 3
_CENTER_N_MAX = 14


@dataclass(frozen=True)
class VerifyRow:
    theorem: str
    n: int
    c: int
    d: int          # defect count / group size; -1 marks aggregate checks
    closed_form: str
    oracle: str
    match: bool


@dataclass(frozen=True)
class Theorem5Adjudication:
    """Which rendering of the center-correcting count survives enumeration."""

    n_values: tuple[int, ...]
    matches: dict
    first_mismatch: dict
    oracle_tables: dict

    def matching_variants(self) -> tuple[str, ...]:
        return tuple(v for v in CENTER_CORRECTING_VARIANTS if self.matches[v])

    @property
    def named_variant(self) -> str | None:
        for v in ("statement", "proof"):
            if self.matches[v]:
                return v
        return None

    @property
    def claim_upheld(self) -> bool:
        # the claim under test: at least one textual rendering is exact
        return self.named_variant is not None

    def diagnostic(self) -> str:
        span = f"n in {self.n_values[0]}..{self.n_values[-1]}"
        lines = []
        for v in CENTER_CORRECTING_VARIANTS:
            if self.matches[v]:
                lines.append(f"variant '{v}': exact for {span}")
            else:
                n, d, got, want = self.first_mismatch[v]
                lines.append(
                    f"variant '{v}': first mismatch at n={n}, d={d}: "
                    f"formula {got} vs enumeration {want}"
                )
        if not self.claim_upheld:
            lines.append(
                "neither textual rendering reproduces the enumeration; "
                "exact oracle tables:"
            )
            for n in self.n_values:
                lines.append(f"  n={n}: {list(self.oracle_tables[n])}")
            if self.matches.get("derivation"):
                lines.append(
                    "the 'derivation' rendering (inner binomial top "
                    "d+i-2k-1) matches every cell, so the other two look "
                    "like transcription slips of it"
                )
        return "\n".join(lines)


@dataclass(frozen=True)
class VerificationResult:
    rows: tuple[VerifyRow, ...]
    adjudication: Theorem5Adjudication | None

    @property
    def ok(self) -> bool:
        base = all(r.match for r in self.rows if not r.theorem.startswith("5"))
        five = self.adjudication is None or self.adjudication.claim_upheld
        return base and five

    @property
    def first_failure(self) -> VerifyRow | None:
        if self.ok:
            return None
        upheld = self.adjudication is not None and self.adjudication.claim_upheld
        for r in self.rows:
            if r.match:
                continue
            if r.theorem == "5-derivation":
                continue  # informational rendering, not the claim under test
            if r.theorem in ("5-statement", "5-proof") and upheld:
                continue
            return r
        return None


def _span(lo: int, hi: int, only: int | None) -> list[int]:
    if only is not None:
        return [only] if only >= lo else []
    return list(range(lo, hi + 1))


def edge_correcting_randomization_independent(n: int, c: int,
                                              budget: EnumerationBudget | None = None) -> bool:
    """True when every start has one final defect count under (C,phi),
    whatever the redraws pick.  Endpoint redraws are the only redraws and
    always land off the neighbor's kept color, so this should hold."""
    budget = budget or EnumerationBudget()
    budget.charge(c**n * (c - 1) ** 2,
                  f"redraw-independence check for n={n}, c={c}")
    g = build_path(n)
    spec = ProtocolSpec.from_mask(EDGE_CORRECTING_MASK)
    for colors in itertools.product(range(1, c + 1), repeat=n):
        state = ColorState(colors=colors, palette_size=c)
        outcomes = execute_all_outcomes(g, state, spec)
        finals = {count_defects(g, w.outcome.state) for w in outcomes}
        if len(finals) != 1:
            return False
    return True


def _random_rows(n_values, c_values, budget, workers):
    rows = []
    for n in n_values:
        for c in c_values:
            closed = random_defect_distribution(n, c)
            seen = oracle_random_distribution(n, c, budget=budget, workers=workers)
            for d in range(n):
                rows.append(VerifyRow(
                    "2", n, c, d, str(closed.counts[d]), str(seen.counts[d]),
                    closed.counts[d] == seen.counts[d]))
    return rows


def _group_rows(n_values, c_values, budget, workers):
    rows = []
    for n in n_values:
        for c in c_values:
            closed = group_count_vector(n, c)
            seen = oracle_group_counts(n, c, budget=budget, workers=workers)
            for i in range(1, n + 1):
                rows.append(VerifyRow(
                    "3", n, c, i, str(closed.counts[i - 1]),
                    str(seen.counts[i - 1]),
                    closed.counts[i - 1] == seen.counts[i - 1]))
            weighted = closed.total_weighted_length()
            rows.append(VerifyRow(
                "3", n, c, -1, str(weighted), str(n * c**n),
                weighted == n * c**n))
    return rows


def _edge_rows(n_values_for, c_values, budget, workers):
    spec = ProtocolSpec.from_mask(EDGE_CORRECTING_MASK)
    rows = []
    for c in c_values:
        for n in n_values_for(c):
            if c >= 3:
                independent = edge_correcting_randomization_independent(
                    n, c, budget=budget)
                rows.append(VerifyRow(
                    "4", n, c, -1, "redraw-independent",
                    "redraw-independent" if independent else "redraw-dependent",
                    independent))
            closed = edge_correcting_distribution(n, c)
            seen = oracle_protocol_distribution(
                n, c, spec, budget=budget, workers=workers)
            for d in range(n):
                rows.append(VerifyRow(
                    "4", n, c, d, str(closed.counts[d]), str(seen.counts[d]),
                    closed.counts[d] == seen.counts[d]))
    return rows


def _center_rows(n_values, budget, workers):
    spec = ProtocolSpec.from_mask(CENTER_CORRECTING_MASK)
    rows = []
    matches = {v: True for v in CENTER_CORRECTING_VARIANTS}
    first_mismatch = {v: None for v in CENTER_CORRECTING_VARIANTS}
    oracle_tables = {}
    for n in n_values:
        seen = oracle_protocol_distribution(n, 2, spec, budget=budget,
                                            workers=workers)
        oracle_tables[n] = tuple(seen.counts)
        for variant in CENTER_CORRECTING_VARIANTS:
            closed = center_correcting_distribution_c2(n, variant)
            for d in range(n):
                good = closed.counts[d] == seen.counts[d]
                rows.append(VerifyRow(
                    f"5-{variant}", n, 2, d, str(closed.counts[d]),
                    str(seen.counts[d]), good))
                if not good:
                    matches[variant] = False
                    if first_mismatch[variant] is None:
                        first_mismatch[variant] = (
                            n, d, closed.counts[d], seen.counts[d])
    adjudication = None
    if n_values:
        adjudication = Theorem5Adjudication(
            n_values=tuple(n_values), matches=matches,
            first_mismatch=first_mismatch, oracle_tables=oracle_tables)
    return rows, adjudication


def run_verification(
    theorems=THEOREMS,
    n_max: int | None = None,
    c_max: int | None = None,
    only_n: int | None = None,
    only_c: int | None = None,
    budget: EnumerationBudget | None = None,
    workers: int = 1,
) -> VerificationResult:
    """Run the requested sweeps on their default grids, capped or pinned by
    the explicit arguments.  Defaults stay inside the enumeration budget."""
    theorems = tuple(theorems)
    for t in theorems:
        if t not in THEOREMS:
            raise ValueError(f"no verification sweep for theorem {t}")
    budget = budget or EnumerationBudget()
    rows: list[VerifyRow] = []
    adjudication = None
    if 2 in theorems:
        rows += _random_rows(
            _span(2, n_max or _RANDOM_N_MAX, only_n),
            _span(2, c_max or _RANDOM_C_MAX, only_c), budget, workers)
    if 3 in theorems:
        rows += _group_rows(
            _span(2, n_max or _RANDOM_N_MAX, only_n),
            _span(2, c_max or _RANDOM_C_MAX, only_c), budget, workers)
    if 4 in theorems:
        def n_values_for(c):
            cap = _EDGE_N_MAX.get(c, _EDGE_N_MAX_OTHER)
            return _span(4, n_max or cap, only_n)
        rows += _edge_rows(
            n_values_for, _span(2, c_max or _EDGE_C_MAX, only_c),
            budget, workers)
    if 5 in theorems and (only_c is None or only_c == 2):
        center, adjudication = _center_rows(
            _span(3, n_max or _CENTER_N_MAX, only_n), budget, workers)
        rows += center
    return VerificationResult(rows=tuple(rows), adjudication=adjudication)
