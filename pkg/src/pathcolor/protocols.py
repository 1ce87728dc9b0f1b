"""One-round conflict-correcting protocols on paths.

A protocol is the pair of change sets (deg1 ⊆ {C, C̄}, deg2 ⊆ {C, C̄, X}):
after one communication round every node simultaneously keeps its color or
redraws uniformly from the other c-1 colors, depending only on its degree and
conflict state.  There are exactly 2^2 * 2^3 = 32 such protocols.

Protocol identifiers, all interchangeable:
  display name  (C̄,C̄X)          change sets joined in the order C, C̄, X
  ascii alias   Cbar|CbarX       phi for the empty set, random == phi|phi
  mask          0..31            bit0 deg1:C, bit1 deg1:C̄,
                                 bit2 deg2:C, bit3 deg2:C̄, bit4 deg2:X
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .coloring import ColorState, ColoringError, ConflictState, conflict_state
from .graph import FlowGraph
from .messaging import LocalView, anonymize, run_rounds


class ProtocolError(ValueError):
    pass


_DEG1_BITS = (ConflictState.CONFLICT, ConflictState.NO_CONFLICT)
_DEG2_BITS = (ConflictState.CONFLICT, ConflictState.NO_CONFLICT, ConflictState.CONFUSED)
_ASCII = {
    ConflictState.CONFLICT: "C",
    ConflictState.NO_CONFLICT: "Cbar",
    ConflictState.CONFUSED: "X",
}
_SYMBOL = {
    ConflictState.CONFLICT: "C",
    ConflictState.NO_CONFLICT: "C̄",
    ConflictState.CONFUSED: "X",
}


def _part(states, order):
    chosen = [s for s in order if s in states]
    return chosen


@dataclass(frozen=True)
class ProtocolSpec:
    deg1_change: frozenset
    deg2_change: frozenset

    def __post_init__(self):
        if not self.deg1_change <= frozenset(_DEG1_BITS):
            raise ProtocolError("degree-1 change set may only contain C and C̄")
        if not self.deg2_change <= frozenset(_DEG2_BITS):
            raise ProtocolError("degree-2 change set may only contain C, C̄ and X")

    @property
    def mask(self) -> int:
        m = 0
        for b, s in enumerate(_DEG1_BITS):
            if s in self.deg1_change:
                m |= 1 << b
        for b, s in enumerate(_DEG2_BITS):
            if s in self.deg2_change:
                m |= 1 << (b + 2)
        return m

    @property
    def name(self) -> str:
        p1 = "".join(_SYMBOL[s] for s in _part(self.deg1_change, _DEG1_BITS)) or "φ"
        p2 = "".join(_SYMBOL[s] for s in _part(self.deg2_change, _DEG2_BITS)) or "φ"
        return f"({p1},{p2})"

    @property
    def ascii_name(self) -> str:
        p1 = "".join(_ASCII[s] for s in _part(self.deg1_change, _DEG1_BITS)) or "phi"
        p2 = "".join(_ASCII[s] for s in _part(self.deg2_change, _DEG2_BITS)) or "phi"
        return f"{p1}|{p2}"

    def changes(self, degree: int, state: ConflictState) -> bool:
        if degree == 1:
            return state in self.deg1_change
        if degree == 2:
            return state in self.deg2_change
        raise ProtocolError(f"protocols are defined for degrees 1 and 2, got {degree}")

    def __str__(self):
        return self.name

    @classmethod
    def from_mask(cls, mask: int) -> "ProtocolSpec":
        if not (0 <= mask <= 31):
            raise ProtocolError(f"mask {mask} outside 0..31")
        d1 = frozenset(s for b, s in enumerate(_DEG1_BITS) if mask & (1 << b))
        d2 = frozenset(s for b, s in enumerate(_DEG2_BITS) if mask & (1 << (b + 2)))
        return cls(deg1_change=d1, deg2_change=d2)

    @classmethod
    def parse(cls, token: str) -> "ProtocolSpec":
        """Accepts an ascii alias (C|phi), a mask (0..31), or 'random'."""
        token = token.strip()
        if token == "random":
            return cls.from_mask(0)
        if token.isdigit():
            return cls.from_mask(int(token))
        if token.count("|") != 1:
            raise ProtocolError(f"cannot parse protocol {token!r}")
        raw1, raw2 = token.split("|")
        return cls(
            deg1_change=_parse_part(raw1, token, degree=1),
            deg2_change=_parse_part(raw2, token, degree=2),
        )


def _parse_part(raw: str, token: str, degree: int) -> frozenset:
    if raw == "phi":
        return frozenset()
    states = set()
    pos = 0
    while pos < len(raw):
        if raw.startswith("Cbar", pos):
            s, pos = ConflictState.NO_CONFLICT, pos + 4
        elif raw.startswith("C", pos):
            s, pos = ConflictState.CONFLICT, pos + 1
        elif raw.startswith("X", pos):
            s, pos = ConflictState.CONFUSED, pos + 1
        else:
            raise ProtocolError(f"cannot parse protocol {token!r}")
        if s in states:
            raise ProtocolError(f"duplicate state in protocol {token!r}")
        states.add(s)
    if degree == 1 and ConflictState.CONFUSED in states:
        raise ProtocolError("degree-1 nodes are never confused")
    return frozenset(states)


def enumerate_protocols() -> tuple[ProtocolSpec, ...]:
    """All 32 one-round protocols, in ascending mask order."""
    return tuple(ProtocolSpec.from_mask(m) for m in range(32))


def decide(spec: ProtocolSpec, view: LocalView) -> bool:
    """Redraw decision from a one-round anonymized view alone."""
    if view.depth != 1:
        raise ProtocolError("decision needs a view of depth exactly 1")
    deg = view.root_degree
    if deg not in (1, 2):
        raise ProtocolError(f"protocols are defined for degrees 1 and 2, got {deg}")
    same = sum(col == view.root_color for col in view.child_colors())
    if same == deg:
        st = ConflictState.CONFLICT
    elif same == 0:
        st = ConflictState.NO_CONFLICT
    else:
        st = ConflictState.CONFUSED
    return spec.changes(deg, st)


@dataclass(frozen=True)
class ProtocolOutcome:
    state: ColorState
    changed: frozenset[int]


@dataclass(frozen=True)
class WeightedOutcome:
    outcome: ProtocolOutcome
    probability: Fraction


def _check_execute_args(g: FlowGraph, state: ColorState):
    if not g.is_path():
        raise ProtocolError("protocols run on path graphs")
    if g.node_count < 2:
        raise ProtocolError("need at least two nodes")
    if state.palette_size < 2:
        raise ProtocolError("need at least two colors")
    if len(state) != g.node_count:
        raise ColoringError("state length does not match node count")


def _redrawing_nodes(g: FlowGraph, state: ColorState, spec: ProtocolSpec) -> list[int]:
    return [
        v
        for v in range(g.node_count)
        if spec.changes(g.degree(v), conflict_state(g, state, v))
    ]


def execute(g, state: ColorState, spec: ProtocolSpec, rng) -> ProtocolOutcome:
    """One synchronous protocol step.

    Redraws are uniform over the other c-1 colors, independent per node, and
    consume exactly one draw per redrawing node in ascending node order, so a
    given seed fixes the outcome.
    """
    _check_execute_args(g, state)
    if isinstance(rng, int):
        rng = random.Random(rng)
    todo = _redrawing_nodes(g, state, spec)
    c = state.palette_size
    out = list(state.colors)
    for v in todo:
        choices = [x for x in range(1, c + 1) if x != state.colors[v]]
        out[v] = choices[rng.randrange(c - 1)]
    return ProtocolOutcome(
        state=ColorState(colors=tuple(out), palette_size=c),
        changed=frozenset(todo),
    )


def execute_all_outcomes(
    g, state: ColorState, spec: ProtocolSpec, max_outcomes: int = 1_000_000
) -> tuple[WeightedOutcome, ...]:
    """Every joint redraw outcome with its exact probability.

    k redrawing nodes yield (c-1)^k equally likely outcomes; the probabilities
    are exact rationals summing to 1.
    """
    _check_execute_args(g, state)
    todo = _redrawing_nodes(g, state, spec)
    c = state.palette_size
    k = len(todo)
    total = (c - 1) ** k
    if total > max_outcomes:
        raise ProtocolError(
            f"{total} joint outcomes exceed the cap of {max_outcomes}: "
            "too large, use Monte Carlo"
        )
    prob = Fraction(1, total)
    complements = [
        [x for x in range(1, c + 1) if x != state.colors[v]] for v in todo
    ]
    outcomes = []
    for picks in itertools.product(*complements):
        out = list(state.colors)
        for v, col in zip(todo, picks):
            out[v] = col
        outcomes.append(
            WeightedOutcome(
                outcome=ProtocolOutcome(
                    state=ColorState(colors=tuple(out), palette_size=c),
                    changed=frozenset(todo),
                ),
                probability=prob,
            )
        )
    return tuple(outcomes)


def view_decisions(g, state: ColorState, spec: ProtocolSpec) -> tuple[bool, ...]:
    """Reference decision path: one message round, anonymize, decide.

    execute() classifies conflicts directly; this is the ID-free route the
    protocol model actually grants, kept as the equivalence reference.
    """
    trees = run_rounds(g, state, 1)
    return tuple(decide(spec, anonymize(t)) for t in trees)


# ---------------------------------------------------------------------------
# vectorized kernel shared by the enumeration oracle and the sampler;
# assumes nodes 0..n-1 in path order (build_path layout)

def batch_change_mask(S: np.ndarray, spec: ProtocolSpec) -> np.ndarray:
    """Boolean redraw-decision matrix for a (B, n) matrix of path states."""
    B, n = S.shape
    eq = S[:, :-1] == S[:, 1:]
    change = np.zeros((B, n), dtype=bool)
    d1 = spec.deg1_change
    d2 = spec.deg2_change
    if ConflictState.CONFLICT in d1:
        change[:, 0] |= eq[:, 0]
        change[:, -1] |= eq[:, -1]
    if ConflictState.NO_CONFLICT in d1:
        change[:, 0] |= ~eq[:, 0]
        change[:, -1] |= ~eq[:, -1]
    if n > 2:
        L, R = eq[:, :-1], eq[:, 1:]
        if ConflictState.CONFLICT in d2:
            change[:, 1:-1] |= L & R
        if ConflictState.NO_CONFLICT in d2:
            change[:, 1:-1] |= ~L & ~R
        if ConflictState.CONFUSED in d2:
            change[:, 1:-1] |= L ^ R
    return change


def batch_apply(S: np.ndarray, U: np.ndarray, change: np.ndarray) -> np.ndarray:
    """Apply redraws: U holds a draw in [0, c-2] per node, mapped to the
    ascending enumeration of the c-1 colors different from the current one."""
    repl = (U + 1 + (U + 1 >= S)).astype(S.dtype)
    return np.where(change, repl, S)


def batch_final_defects(
    S: np.ndarray, U: np.ndarray, spec: ProtocolSpec
) -> np.ndarray:
    F = batch_apply(S, U, batch_change_mask(S, spec))
    return (F[:, :-1] == F[:, 1:]).sum(axis=1, dtype=np.int64)
