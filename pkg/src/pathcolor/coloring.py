"""Color assignments on flow graphs: conflict classification, defect counting,
and the defect-group decomposition of path states."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import FlowGraph


class ColoringError(ValueError):
    pass


class ConflictState(enum.Enum):
    CONFLICT = "C"        # every neighbor shares the node's color
    NO_CONFLICT = "C̄"     # no neighbor shares it
    CONFUSED = "X"        # some do, some don't (degree >= 2 only)

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ColorState:
    """Color vector (1-based colors) plus the palette size it draws from."""

    colors: tuple[int, ...]
    palette_size: int

    def __post_init__(self):
        if self.palette_size < 1:
            raise ColoringError("palette must have at least one color")
        if not self.colors:
            raise ColoringError("empty color vector")
        for x in self.colors:
            if not (1 <= x <= self.palette_size):
                raise ColoringError(f"color {x} outside 1..{self.palette_size}")

    def __len__(self):
        return len(self.colors)


@dataclass(frozen=True)
class DefectGroup:
    start: int    # 0-based position along the path order
    length: int
    color: int


@dataclass(frozen=True)
class DefectGroupDecomposition:
    groups: tuple[DefectGroup, ...]

    @property
    def defects(self) -> int:
        return sum(g.length - 1 for g in self.groups)

    def sizes(self) -> tuple[int, ...]:
        return tuple(g.length for g in self.groups)


def conflict_state(g: FlowGraph, state: ColorState, v: int) -> ConflictState:
    if len(state) != g.node_count:
        raise ColoringError("state length does not match node count")
    nbrs = g.neighbors(v)
    if not nbrs:
        raise ColoringError(f"node {v} is isolated; conflict state undefined")
    same = sum(state.colors[w] == state.colors[v] for w in nbrs)
    if same == len(nbrs):
        return ConflictState.CONFLICT
    if same == 0:
        return ConflictState.NO_CONFLICT
    return ConflictState.CONFUSED


def count_defects(g: FlowGraph, state: ColorState) -> int:
    if len(state) != g.node_count:
        raise ColoringError("state length does not match node count")
    c = state.colors
    return sum(c[i] == c[j] for i, j in g.edges)


def defect_groups(g: FlowGraph, state: ColorState) -> DefectGroupDecomposition:
    """Maximal monochromatic runs along the path, in path order.

    A run of length k carries k-1 defects; group starts are 0-based
    positions in the traversal order.
    """
    if len(state) != g.node_count:
        raise ColoringError("state length does not match node count")
    order = g.path_order()
    seq = [state.colors[v] for v in order]
    groups = []
    pos = 0
    while pos < len(seq):
        end = pos
        while end + 1 < len(seq) and seq[end + 1] == seq[pos]:
            end += 1
        groups.append(DefectGroup(start=pos, length=end - pos + 1, color=seq[pos]))
        pos = end + 1
    return DefectGroupDecomposition(groups=tuple(groups))
