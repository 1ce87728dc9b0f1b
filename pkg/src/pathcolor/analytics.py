"""Exact closed forms for defect censuses on paths.

Everything here is arbitrary-precision: counts are Python ints, probabilities
and averages are fractions.Fraction.  c^n overflows 64-bit machine words
around n=50, c=3, so no float ever touches a count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


class AnalyticsError(ValueError):
    pass


CENTER_CORRECTING_VARIANTS = ("statement", "proof", "derivation")


def binom(m: int, r: int) -> int:
    """C(m, r) with the zero convention for r < 0, m < 0 or r > m."""
    if r < 0 or m < 0 or r > m:
        return 0
    return comb(m, r)


@dataclass(frozen=True)
class DefectDistribution:
    """Census of final defect counts: counts[d] states (or expected state
    mass) end with d defects; total is the number of starting states times
    any exact outcome weighting."""

    counts: tuple
    total: int

    def __post_init__(self):
        if self.total <= 0:
            raise AnalyticsError("total must be positive")
        if sum(self.counts) != self.total:
            raise AnalyticsError("counts must sum to the state-space total")
        if any(x < 0 for x in self.counts):
            raise AnalyticsError("negative count")

    def __len__(self):
        return len(self.counts)

    def probabilities(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x) / self.total for x in self.counts)

    def average(self) -> Fraction:
        return sum(
            (Fraction(d) * Fraction(x) for d, x in enumerate(self.counts)),
            start=Fraction(0),
        ) / self.total


@dataclass(frozen=True)
class GroupCountVector:
    """counts[i-1] = total occurrences of maximal monochromatic runs of
    length i across all c^n colorings of the n-node path."""

    n: int
    c: int
    counts: tuple[int, ...]

    def total_weighted_length(self) -> int:
        return sum(i * g for i, g in enumerate(self.counts, start=1))

    def partition_identity_holds(self) -> bool:
        # every node of every state sits in exactly one group
        return self.total_weighted_length() == self.n * self.c**self.n


def average_defects(dist: DefectDistribution) -> Fraction:
    return dist.average()


def chromatic_polynomial_path(n: int, c: int) -> int:
    """Number of proper c-colorings of the n-node path: c (c-1)^(n-1)."""
    if n < 1:
        raise AnalyticsError("need n >= 1")
    if c < 1:
        raise AnalyticsError("need c >= 1")
    return c * (c - 1) ** (n - 1)


def random_defect_distribution(n: int, c: int) -> DefectDistribution:
    """Defect census of a uniform random assignment:
    N0(d) = c (c-1)^(n-d-1) C(n-1, d)."""
    if n < 1:
        raise AnalyticsError("need n >= 1")
    if c < 2:
        raise AnalyticsError("need c >= 2")
    counts = tuple(
        c * (c - 1) ** (n - d - 1) * binom(n - 1, d) for d in range(n)
    )
    return DefectDistribution(counts=counts, total=c**n)


def pascal_row_property(n: int) -> bool:
    """At c=2 the census collapses to twice a Pascal-triangle row."""
    dist = random_defect_distribution(n, 2)
    return dist.counts == tuple(2 * binom(n - 1, d) for d in range(n))


def group_count_vector(n: int, c: int) -> GroupCountVector:
    """Occurrences G_i of size-i groups over all c^n states of the path."""
    if n < 1:
        raise AnalyticsError("need n >= 1")
    if c < 2:
        raise AnalyticsError("need c >= 2")
    counts = [0] * n
    counts[n - 1] = c
    if n >= 2:
        counts[n - 2] = 2 * c * (c - 1)
    for i in range(1, n - 1):
        m = n - i
        counts[i - 1] = c ** (m - 1) * (c - 1) * ((m + 1) * c - (m - 1))
    return GroupCountVector(n=n, c=c, counts=tuple(counts))


def edge_correcting_distribution(n: int, c: int) -> DefectDistribution:
    """Final-defect census of the edge-correcting protocol (C,φ):
    N1(d) = c^3 (c-1)^(n-d-3) C(n-3, d), zero for d > n-3.

    The two endpoint redraws deterministically clear the boundary edges, so
    the census does not depend on the redraw randomness."""
    if n < 4:
        raise AnalyticsError("need n >= 4")
    if c < 2:
        raise AnalyticsError("need c >= 2")
    counts = tuple(
        c**3 * (c - 1) ** (n - d - 3) * binom(n - 3, d) if d <= n - 3 else 0
        for d in range(n)
    )
    return DefectDistribution(counts=counts, total=c**n)


def center_correcting_distribution_c2(n: int, variant: str) -> DefectDistribution:
    """Final-defect census of the center-correcting protocol (φ,C) at c=2.

    This closed form circulates with its inner binomial rendered two
    different ways; both renderings are implemented verbatim ('statement',
    'proof'), along with the binomial that the generating-function counting
    step behind them actually produces ('derivation').  The enumeration
    oracle adjudicates which, if any, is exact; nothing here repairs the
    formula silently.

    Shared scaffolding: with K*_k = floor((n-1-d+2k)/2) and d_s = d+2(i-k),

      N2(d) = 2 sum_{k=0..d} sum_{i=k+1..K*_k}
                  C(n-d_s, i) C(i, k) B(d, i, k)  +  2 C(n-d, d)

    where B is C(d_s+i-2k-1, i-k-1) for 'statement', C(d_s+i-1, i-k-1) for
    'proof', and C(d+i-2k-1, i-k-1) for 'derivation'.
    """
    if n < 3:
        raise AnalyticsError("need n >= 3")
    if variant not in CENTER_CORRECTING_VARIANTS:
        raise AnalyticsError(
            f"variant must be one of {CENTER_CORRECTING_VARIANTS}, got {variant!r}"
        )
    counts = []
    for d in range(n):
        total = 2 * binom(n - d, d)
        for k in range(0, d + 1):
            for i in range(k + 1, (n - 1 - d + 2 * k) // 2 + 1):
                ds = d + 2 * (i - k)
                if variant == "statement":
                    top = ds + i - 2 * k - 1
                elif variant == "proof":
                    top = ds + i - 1
                else:
                    top = d + i - 2 * k - 1
                total += 2 * binom(n - ds, i) * binom(i, k) * binom(top, i - k - 1)
        counts.append(total)
    # an exact census sums to 2^n; a variant that misses that total has
    # already failed adjudication, so carry the raw sum rather than faking it
    return DefectDistribution(counts=tuple(counts), total=sum(counts))


def center_correcting_convolution(groups, c: int) -> DefectDistribution:
    """Per-decomposition final-defect census of (φ,C) for c >= 3.

    Each group of size k >= 3 redraws its k-2 interior nodes uniformly over
    the c-1 colors other than the group's own, which is exactly a random
    assignment of a (k-2)-node path with c-1 colors; its census convolves
    with the other groups'.  Sizes 1 and 2 contribute fixed defect counts
    0 and 1.  Counts are unnormalized: total = prod (c-1)^(k-2) over k >= 3.
    """
    groups = tuple(groups)
    if c < 3:
        raise AnalyticsError("need c >= 3 (two colors flip deterministically)")
    if not groups or any(k < 1 for k in groups):
        raise AnalyticsError("group sizes must be positive")
    acc = [1]
    for k in groups:
        if k == 1:
            part = [1]
        elif k == 2:
            part = [0, 1]
        else:
            part = list(random_defect_distribution(k - 2, c - 1).counts)
        new = [0] * (len(acc) + len(part) - 1)
        for a, xa in enumerate(acc):
            if xa:
                for b, xb in enumerate(part):
                    new[a + b] += xa * xb
        acc = new
    n = sum(groups)
    acc += [0] * (n - len(acc))
    total = 1
    for k in groups:
        if k >= 3:
            total *= (c - 1) ** (k - 2)
    return DefectDistribution(counts=tuple(acc[:n]), total=total)


def center_correcting_average(n: int, c: int) -> Fraction:
    """Exact mean final defects of (φ,C) via the group census: a size-2 group
    keeps its defect, a size-i group (i >= 3) contributes the mean of a
    random (i-2)-node assignment with c-1 colors, (i-3)/(c-1)."""
    if n < 2:
        raise AnalyticsError("need n >= 2")
    if c < 2:
        raise AnalyticsError("need c >= 2")
    g = group_count_vector(n, c).counts
    num = Fraction(0)
    if n >= 2:
        num += Fraction(g[1])
    for i in range(3, n + 1):
        num += Fraction(g[i - 1] * (i - 3), c - 1)
    return num / c**n
