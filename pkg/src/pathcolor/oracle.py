"""Brute-force enumeration ground truth.

Every oracle walks the full base-c odometer of starting states (in fixed-size
chunks, never materializing the whole space) and tallies with exact integer
arithmetic.  The protocol oracle enumerates the joint space of states times
full redraw vectors, which weights each outcome of a k-redraw state by
(c-1)^(n-k) out of (c-1)^n, i.e. exactly its probability with the fixed
denominator (c-1)^n.  Work above the budget is refused outright, never
truncated.  Chunk merges are integer sums, so any worker count produces
bit-identical results.
"""

from __future__ import annotations

import multiprocessing
import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .analytics import DefectDistribution, GroupCountVector
from .protocols import ProtocolSpec, batch_final_defects

_CHUNK = 1 << 16
_ENV_BUDGET = "PATHCOLOR_BUDGET"


class BudgetExceeded(RuntimeError):
    pass


def default_budget_limit() -> int:
    raw = os.environ.get(_ENV_BUDGET)
    return int(raw) if raw else 10**8


@dataclass(frozen=True)
class EnumerationBudget:
    """Cap on elementary state evaluations an exact enumeration may cost."""

    max_work: int = 0

    def __post_init__(self):
        if self.max_work <= 0:
            object.__setattr__(self, "max_work", default_budget_limit())

    def charge(self, work: int, what: str):
        if work > self.max_work:
            raise BudgetExceeded(
                f"{what} needs {work} state evaluations, over the budget of "
                f"{self.max_work}; raise the budget or use Monte Carlo"
            )


def _digits(idx: np.ndarray, base: int, width: int) -> np.ndarray:
    """Row per index, most significant digit first, values in 0..base-1."""
    out = np.empty((idx.size, width), dtype=np.uint8)
    for p in range(width):
        out[:, p] = (idx // base ** (width - 1 - p)) % base
    return out


def _chunk_ranges(total: int):
    for lo in range(0, total, _CHUNK):
        yield lo, min(lo + _CHUNK, total)


def _random_chunk(args):
    n, c, lo, hi = args
    idx = np.arange(lo, hi, dtype=np.int64)
    S = _digits(idx, c, n)
    d = (S[:, :-1] == S[:, 1:]).sum(axis=1, dtype=np.int64)
    return np.bincount(d, minlength=n).tolist()


def _groups_chunk(args):
    n, c, lo, hi = args
    idx = np.arange(lo, hi, dtype=np.int64)
    S = _digits(idx, c, n) + 1
    # sentinel column forces a run break at each row boundary
    flat = np.concatenate([S, np.zeros((S.shape[0], 1), np.uint8)], axis=1).ravel()
    breaks = np.flatnonzero(flat[1:] != flat[:-1]) + 1
    bounds = np.concatenate([[0], breaks, [flat.size]])
    starts, lengths = bounds[:-1], np.diff(bounds)
    keep = flat[starts] != 0
    return np.bincount(lengths[keep], minlength=n + 2).tolist()


def _protocol_chunk(args):
    n, c, mask, lo, hi = args
    spec = ProtocolSpec.from_mask(mask)
    R = (c - 1) ** n
    m = np.arange(lo, hi, dtype=np.int64)
    S = _digits(m // R, c, n) + 1
    U = _digits(m % R, c - 1, n)
    d = batch_final_defects(S, U, spec)
    return np.bincount(d, minlength=n).tolist()


def _run_chunks(fn, argses, workers: int):
    if workers <= 1 or len(argses) <= 1:
        results = [fn(a) for a in argses]
    else:
        with multiprocessing.Pool(workers) as pool:
            results = pool.map(fn, argses)
    merged = None
    for r in results:  # fixed chunk order; integer sums commute exactly anyway
        if merged is None:
            merged = list(r)
        else:
            merged = [a + b for a, b in zip(merged, r)]
    return merged


def oracle_random_distribution(
    n: int, c: int, budget: EnumerationBudget | None = None, workers: int = 1
) -> DefectDistribution:
    """Defect tally of every one of the c^n starting states."""
    if n < 1 or c < 2:
        raise ValueError("need n >= 1 and c >= 2")
    budget = budget or EnumerationBudget()
    total = c**n
    budget.charge(total, f"random-assignment census for n={n}, c={c}")
    argses = [(n, c, lo, hi) for lo, hi in _chunk_ranges(total)]
    counts = _run_chunks(_random_chunk, argses, workers)
    return DefectDistribution(counts=tuple(counts[:n]), total=total)


def oracle_group_counts(
    n: int, c: int, budget: EnumerationBudget | None = None, workers: int = 1
) -> GroupCountVector:
    """Run-length tally over every state: occurrences of size-i groups."""
    if n < 1 or c < 2:
        raise ValueError("need n >= 1 and c >= 2")
    budget = budget or EnumerationBudget()
    total = c**n
    budget.charge(total, f"group census for n={n}, c={c}")
    argses = [(n, c, lo, hi) for lo, hi in _chunk_ranges(total)]
    counts = _run_chunks(_groups_chunk, argses, workers)
    return GroupCountVector(n=n, c=c, counts=tuple(counts[1 : n + 1]))


def oracle_protocol_distribution(
    n: int,
    c: int,
    spec: ProtocolSpec,
    budget: EnumerationBudget | None = None,
    workers: int = 1,
) -> DefectDistribution:
    """Exact expected final-defect census of a protocol over all starts.

    Equivalent to summing execute_all_outcomes over every starting state;
    counts are exact rationals with denominator (c-1)^n (plain integers at
    c=2, where the step is deterministic).
    """
    if n < 2 or c < 2:
        raise ValueError("need n >= 2 and c >= 2")
    budget = budget or EnumerationBudget()
    R = (c - 1) ** n
    work = c**n * R
    budget.charge(work, f"protocol census for {spec.ascii_name}, n={n}, c={c}")
    argses = [(n, c, spec.mask, lo, hi) for lo, hi in _chunk_ranges(work)]
    tallies = _run_chunks(_protocol_chunk, argses, workers)
    counts = tuple(
        int(f) if f.denominator == 1 else f
        for f in (Fraction(t, R) for t in tallies[:n])
    )
    return DefectDistribution(counts=counts, total=c**n)
