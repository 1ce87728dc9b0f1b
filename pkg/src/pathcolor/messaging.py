"""Synchronous broadcast message passing that builds per-node local topology
trees, and the ID-erasing view used by the decision layer.

Round r delivers, from every node to every neighbor, the triplets
(node id, initial color, parent id) of the sender's depth r-1 frontier; the
receiver attaches unseen nodes as leaves under the named parent.  Colors are
the *initial* colors throughout: phase one never recolors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import ColorState, ColoringError
from .graph import FlowGraph


class MessagingError(ValueError):
    pass


@dataclass(frozen=True)
class TreeEntry:
    node: int
    color: int
    parent: int | None  # None only for the root


@dataclass(frozen=True)
class RoundMessage:
    sender: int
    round_index: int
    entries: tuple[TreeEntry, ...]


@dataclass(frozen=True)
class LocalTree:
    root: int
    layers: tuple[tuple[TreeEntry, ...], ...]  # layers[0] holds just the root

    @property
    def depth(self) -> int:
        return len(self.layers) - 1

    def nodes(self) -> frozenset[int]:
        return frozenset(e.node for layer in self.layers for e in layer)


@dataclass(frozen=True)
class LocalView:
    """Anonymized local tree: nested (color, children) tuples with children in
    canonical order (subtree shape first, then color), so isomorphic relabeled
    neighborhoods compare equal."""

    canonical: tuple

    @property
    def root_color(self) -> int:
        return self.canonical[0]

    @property
    def root_degree(self) -> int:
        return len(self.canonical[1])

    def child_colors(self) -> tuple[int, ...]:
        return tuple(ch[0] for ch in self.canonical[1])

    @property
    def depth(self) -> int:
        def d(t):
            return 0 if not t[1] else 1 + max(d(ch) for ch in t[1])
        return d(self.canonical)


def _prepare_messages(trees: list[dict], r: int) -> list[RoundMessage]:
    msgs = []
    for v, tree in enumerate(trees):
        frontier = [
            TreeEntry(node=u, color=col, parent=(v if par is None else par))
            for u, (depth, col, par) in tree.items()
            if depth == r - 1
        ]
        frontier.sort(key=lambda e: e.node)
        msgs.append(RoundMessage(sender=v, round_index=r, entries=tuple(frontier)))
    return msgs


def run_rounds(g: FlowGraph, state: ColorState, rounds: int) -> list[LocalTree]:
    """Local topology tree of every node after `rounds` synchronous rounds.

    On trees and paths each node is heard exactly once; on graphs with cycles
    we keep the first-heard parent (senders processed in ascending id) and
    ignore duplicates.
    """
    if rounds < 0:
        raise MessagingError("rounds must be >= 0")
    if len(state) != g.node_count:
        raise ColoringError("state length does not match node count")
    # node -> (depth, color, parent); parent None for the root
    trees: list[dict] = [
        {v: (0, state.colors[v], None)} for v in range(g.node_count)
    ]
    for r in range(1, rounds + 1):
        msgs = _prepare_messages(trees, r)
        for msg in msgs:  # ascending sender id
            for j in g.neighbors(msg.sender):
                tree = trees[j]
                for e in msg.entries:
                    if e.node in tree:
                        continue
                    attach = j if e.node == msg.sender else e.parent
                    if attach not in tree:
                        continue  # cannot place without a known parent
                    tree[e.node] = (tree[attach][0] + 1, e.color, attach)
    out = []
    for v, tree in enumerate(trees):
        depth = max(d for d, _, _ in tree.values())
        layers = [[] for _ in range(depth + 1)]
        for u, (d, col, par) in tree.items():
            layers[d].append(TreeEntry(node=u, color=col, parent=par))
        for layer in layers:
            layer.sort(key=lambda e: e.node)
        out.append(LocalTree(root=v, layers=tuple(tuple(l) for l in layers)))
    return out


def _shape(t):
    # color-free skeleton, used to order siblings shape-first
    return tuple(sorted(_shape(ch) for ch in t[1]))


def _canonical(node: int, color_of, children_of) -> tuple:
    kids = [_canonical(ch, color_of, children_of) for ch in children_of(node)]
    kids.sort(key=lambda t: (_shape(t), t))
    return (color_of(node), tuple(kids))


def anonymize(tree: LocalTree) -> LocalView:
    """Erase node ids, producing the view actually available to a decision."""
    colors = {}
    children: dict[int, list[int]] = {}
    for layer in tree.layers:
        for e in layer:
            colors[e.node] = e.color
            children.setdefault(e.node, [])
            if e.parent is not None:
                children.setdefault(e.parent, []).append(e.node)
    return LocalView(
        canonical=_canonical(tree.root, colors.__getitem__, lambda v: children[v])
    )
