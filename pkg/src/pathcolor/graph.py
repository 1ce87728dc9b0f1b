"""Undirected flow-graph container and the small amount of graph theory we need.

Nodes are 0-based ints everywhere in the library; the CLI converts to the
1-based labels used in graph files and human-facing reports.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class NodeType:
    """Degree plus the multiset of neighbor degrees, the node 'type' used by
    the symmetry machinery.  neighbor_degrees is sorted ascending."""

    degree: int
    neighbor_degrees: tuple[int, ...]

    def __post_init__(self):
        if len(self.neighbor_degrees) != self.degree:
            raise GraphError("neighbor degree multiset must have one entry per neighbor")


@dataclass(frozen=True)
class FlowGraph:
    node_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)

    def __init__(self, node_count: int, edges):
        if node_count < 1:
            raise GraphError("graph needs at least one node")
        seen = set()
        norm = []
        for i, j in edges:
            if i == j:
                raise GraphError(f"self loop at node {i}")
            if not (0 <= i < node_count and 0 <= j < node_count):
                raise GraphError(f"edge ({i},{j}) out of range")
            e = (min(i, j), max(i, j))
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        norm.sort()
        adj = [[] for _ in range(node_count)]
        for i, j in norm:
            adj[i].append(j)
            adj[j].append(i)
        object.__setattr__(self, "node_count", node_count)
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        if node_count > 1:
            # connectivity is part of the contract
            if len(self._bfs_dist(0)) != node_count:
                raise GraphError("graph must be connected")

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def _bfs_dist(self, src: int) -> dict[int, int]:
        dist = {src: 0}
        q = deque([src])
        while q:
            u = q.popleft()
            for w in self.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return dist

    def distances_from(self, src: int) -> dict[int, int]:
        if not (0 <= src < self.node_count):
            raise GraphError(f"node {src} out of range")
        return self._bfs_dist(src)

    def is_path(self) -> bool:
        n = self.node_count
        if n == 1:
            return not self.edges
        if len(self.edges) != n - 1:
            return False
        degs = sorted(self.degree(v) for v in range(n))
        return degs[:2] == [1, 1] and all(d == 2 for d in degs[2:])

    def path_order(self) -> tuple[int, ...]:
        """Traversal order along a path graph, starting at the smaller endpoint."""
        if not self.is_path():
            raise GraphError("not a path graph")
        if self.node_count == 1:
            return (0,)
        start = min(v for v in range(self.node_count) if self.degree(v) == 1)
        order = [start]
        prev, cur = None, start
        while len(order) < self.node_count:
            nxt = [w for w in self.adjacency[cur] if w != prev]
            prev, cur = cur, nxt[0]
            order.append(cur)
        return tuple(order)


def build_path(n: int) -> FlowGraph:
    """Path graph P_n with nodes 0..n-1 and edges (i, i+1)."""
    if n < 1:
        raise GraphError("path needs at least one node")
    return FlowGraph(n, [(i, i + 1) for i in range(n - 1)])


def r_hop_neighbors(g: FlowGraph, v: int, r: int) -> frozenset[int]:
    """Nodes at distance exactly r from v (empty beyond the eccentricity)."""
    if r < 0:
        raise GraphError("hop count must be >= 0")
    dist = g.distances_from(v)
    return frozenset(u for u, d in dist.items() if d == r)


def node_type(g: FlowGraph, v: int) -> NodeType:
    degs = tuple(sorted(g.degree(w) for w in g.neighbors(v)))
    return NodeType(degree=g.degree(v), neighbor_degrees=degs)


def diameter(g: FlowGraph) -> int:
    return max(max(g._bfs_dist(v).values()) for v in range(g.node_count))


def parse_graph_text(text: str) -> FlowGraph:
    """Graph file format: one `n <count>` header line, then `e <i> <j>` lines
    with 1-based endpoints.  Blank lines and `#` comments are ignored."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise GraphError(f"line {lineno}: duplicate n header")
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphError(f"line {lineno}: malformed n header")
            n = int(parts[1])
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before n header")
            if len(parts) != 3 or not (parts[1].isdigit() and parts[2].isdigit()):
                raise GraphError(f"line {lineno}: malformed edge")
            i, j = int(parts[1]), int(parts[2])
            if not (1 <= i <= n and 1 <= j <= n):
                raise GraphError(f"line {lineno}: edge endpoint out of 1..{n}")
            edges.append((i - 1, j - 1))
        else:
            raise GraphError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise GraphError("missing n header")
    return FlowGraph(n, edges)
