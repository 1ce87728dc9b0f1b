"""Indistinguishable adjacent pairs and the impossibility demonstration.

Two adjacent nodes are R-hop symmetric when, for every r <= R, their r-hop
neighborhoods carry the same multiset of node types (degree plus neighbor
degree multiset).  On such a pair an adversarially mirrored starting state
gives both nodes identical anonymized views, hence identical decisions, and
the shared edge keeps a positive defect probability under every one-round
protocol.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .coloring import ColorState, count_defects
from .graph import FlowGraph, diameter, node_type, r_hop_neighbors
from .messaging import anonymize, run_rounds
from .protocols import ProtocolSpec, decide, enumerate_protocols, execute_all_outcomes

HYPOTHESIS_NOTE = (
    "radius gate: pairs are sought only for R < diameter (strict); the "
    "mirrored-state argument itself needs only R <= diameter"
)


class SymmetryError(ValueError):
    pass


@dataclass(frozen=True)
class SymmetricPair:
    i: int
    j: int
    radius: int


@dataclass(frozen=True)
class ImpossibilityRow:
    protocol: ProtocolSpec
    views_equal: bool
    decisions_equal: bool
    final_defects: int | None           # deterministic final count, c=2 only
    edge_defect_probability: Fraction   # exact, over all joint redraws


@dataclass(frozen=True)
class ImpossibilityReport:
    pair: SymmetricPair
    c: int
    state: ColorState
    rows: tuple[ImpossibilityRow, ...]
    note: str

    @property
    def all_views_equal(self) -> bool:
        return all(r.views_equal for r in self.rows)

    @property
    def min_edge_defect_probability(self) -> Fraction:
        return min(r.edge_defect_probability for r in self.rows)

    @property
    def theorem_upheld(self) -> bool:
        return self.all_views_equal and self.min_edge_defect_probability > 0


def _pair_nodes(pair) -> tuple[int, int]:
    if isinstance(pair, SymmetricPair):
        return pair.i, pair.j
    i, j = pair
    return i, j


def pair_is_symmetric(g: FlowGraph, i: int, j: int, radius: int) -> bool:
    if (min(i, j), max(i, j)) not in g.edges:
        raise SymmetryError(f"({i},{j}) is not an edge")
    if radius < 1:
        raise SymmetryError("radius must be >= 1")
    for r in range(1, radius + 1):
        ti = Counter(node_type(g, v) for v in r_hop_neighbors(g, i, r))
        tj = Counter(node_type(g, v) for v in r_hop_neighbors(g, j, r))
        if ti != tj:
            return False
    return True


def find_symmetric_pair(g: FlowGraph, r_max: int) -> SymmetricPair | None:
    """Largest R <= r_max admitting a symmetric pair, lexicographically
    smallest pair for that R; None when no pair works even at R=1."""
    if r_max < 1:
        raise SymmetryError("r_max must be >= 1")
    if r_max >= diameter(g):
        raise SymmetryError(
            f"r_max={r_max} not below the graph diameter {diameter(g)}; "
            "the impossibility hypothesis requires R < diameter"
        )
    for radius in range(r_max, 0, -1):
        for i, j in g.edges:  # already sorted lexicographically
            if pair_is_symmetric(g, i, j, radius):
                return SymmetricPair(i=i, j=j, radius=radius)
    return None


def adversarial_state(g: FlowGraph, pair, c: int) -> ColorState:
    """Mirror coloring across the pair: color 1 + (t mod 2) at distance t
    from the pair, so matched layers are colored identically and the pair
    edge is the lone defect on a path."""
    if c < 2:
        raise SymmetryError("need c >= 2")
    i, j = _pair_nodes(pair)
    di = g.distances_from(i)
    dj = g.distances_from(j)
    colors = tuple(1 + min(di[v], dj[v]) % 2 for v in range(g.node_count))
    return ColorState(colors=colors, palette_size=c)


def impossibility_check(
    g: FlowGraph, pair, c: int, state: ColorState | None = None
) -> ImpossibilityReport:
    """Run all 32 protocols against the (default: mirrored) start.

    For each protocol: are the pair's anonymized one-round views equal, do
    the two nodes decide identically, and what is the exact probability that
    the pair edge stays defective over the joint redraws.  At c=2 the step
    is deterministic and the final defect count is reported too.
    """
    i, j = _pair_nodes(pair)
    if state is None:
        state = adversarial_state(g, (i, j), c)
    if state.palette_size != c:
        raise SymmetryError("state palette does not match c")
    views = [anonymize(t) for t in run_rounds(g, state, 1)]
    rows = []
    for spec in enumerate_protocols():
        views_equal = views[i] == views[j]
        decisions_equal = decide(spec, views[i]) == decide(spec, views[j])
        outcomes = execute_all_outcomes(g, state, spec)
        p_edge = sum(
            (
                w.probability
                for w in outcomes
                if w.outcome.state.colors[i] == w.outcome.state.colors[j]
            ),
            start=Fraction(0),
        )
        final_defects = None
        if c == 2:
            final_defects = count_defects(g, outcomes[0].outcome.state)
        rows.append(
            ImpossibilityRow(
                protocol=spec,
                views_equal=views_equal,
                decisions_equal=decisions_equal,
                final_defects=final_defects,
                edge_defect_probability=p_edge,
            )
        )
    pair_obj = pair if isinstance(pair, SymmetricPair) else SymmetricPair(i, j, 1)
    return ImpossibilityReport(
        pair=pair_obj, c=c, state=state, rows=tuple(rows), note=HYPOTHESIS_NOTE
    )
