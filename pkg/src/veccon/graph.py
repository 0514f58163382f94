"""Undirected simple graphs and biconnected-component machinery.

Vertices are dense integers 0..n-1.  Graphs are immutable after
construction and every query here is pure, so instances can be shared
freely across threads.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import InputError

__all__ = [
    "Graph",
    "BlockDecomposition",
    "StructuralReport",
    "induced_subgraph",
    "open_neighborhood",
    "block_decomposition",
    "structural_checks",
    "is_connected",
]


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1.

    ``edges`` is a frozenset of sorted pairs; ``adj`` a tuple of sorted
    neighbor tuples.  No self-loops, no parallel edges.
    """

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        norm = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def is_cycle(self) -> bool:
        return (
            self.n >= 3
            and all(len(a) == 2 for a in self.adj)
            and _is_connected(self)
        )

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InputError(f"unknown vertex id {v}")


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal biconnected subgraphs), cut vertices and their tree.

    ``block_tree`` lists the (block index, cut vertex) incidences of the
    bipartite block-cut tree.  ``leaf_blocks`` are the tree leaves; a graph
    with a single block reports that block as its only leaf.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_tree: tuple[tuple[int, int], ...]
    leaf_blocks: tuple[int, ...]

    def block_of_edge(self, u: int, v: int) -> int:
        for i, b in enumerate(self.blocks):
            if u in b and v in b:
                return i
        raise InputError(f"edge ({u},{v}) not in any block")


@dataclass(frozen=True)
class StructuralReport:
    is_connected: bool
    is_biconnected: bool
    is_bipartite: bool
    max_degree: int
    girth: float  # math.inf for forests


def induced_subgraph(g: Graph, x: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``x``, plus the map from new ids back to g's ids.

    New vertex i corresponds to original vertex ``mapping[i]``; the mapping
    is sorted so relabeling is deterministic.
    """
    xs = sorted(set(x))
    for v in xs:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(xs)}
    inset = set(xs)
    edges = [
        (index[u], index[v]) for (u, v) in g.edges if u in inset and v in inset
    ]
    return Graph(len(xs), edges), tuple(xs)


def open_neighborhood(g: Graph, x: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``x`` adjacent to some vertex of ``x``."""
    xs = set(x)
    if not xs:
        raise InputError("open neighborhood of the empty set is undefined")
    out = set()
    for v in xs:
        g._check_vertex(v)
        out.update(g.adj[v])
    return frozenset(out - xs)


def is_connected(g: Graph) -> bool:
    """True iff the graph has at most one connected component."""
    return _is_connected(g)


def _is_connected(g: Graph, skip: frozenset[int] = frozenset()) -> bool:
    verts = [v for v in range(g.n) if v not in skip]
    if not verts:
        return True
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in skip and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def _biconnected_components(g: Graph) -> tuple[list[frozenset[int]], set[int]]:
    """Hopcroft-Tarjan, iterative to survive deep block chains.

    Works per connected component; isolated vertices become singleton
    blocks.  Returns (blocks as vertex sets, cut vertices).
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    edge_stack: list[tuple[int, int]] = []
    timer = 0

    for root in range(n):
        if disc[root] != -1:
            continue
        if not g.adj[root]:
            blocks.append(frozenset((root,)))
            continue
        root_children = 0
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, iter(g.adj[root]))]
        while stack:
            u, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    parent[w] = u
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((w, iter(g.adj[w])))
                    advanced = True
                    break
                if w != parent[u] and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    if disc[w] < low[u]:
                        low[u] = disc[w]
            if advanced:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            if low[u] < low[p]:
                low[p] = low[u]
            if low[u] >= disc[p]:
                # p separates the subtree at u: edges above (p, u) on the
                # stack are exactly this block's edges
                comp: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.add(a)
                    comp.add(b)
                    if (a, b) == (p, u):
                        break
                blocks.append(frozenset(comp))
                if p != root or root_children > 1:
                    cuts.add(p)
    return blocks, cuts


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Decompose a connected graph into its blocks and block-cut tree."""
    if g.n < 1:
        raise InputError("graph must have at least one vertex")
    if not _is_connected(g):
        raise InputError("block decomposition requires a connected graph")
    blocks, cuts = _biconnected_components(g)
    tree = []
    for i, b in enumerate(blocks):
        for v in sorted(b & cuts):
            tree.append((i, v))
    if len(blocks) == 1:
        leaves: tuple[int, ...] = (0,)
    else:
        incident = [0] * len(blocks)
        for i, _ in tree:
            incident[i] += 1
        leaves = tuple(i for i in range(len(blocks)) if incident[i] == 1)
    return BlockDecomposition(
        blocks=tuple(blocks),
        cut_vertices=frozenset(cuts),
        block_tree=tuple(tree),
        leaf_blocks=leaves,
    )


def _girth(g: Graph) -> float:
    """Exact girth: shortest cycle through any edge, by edge-removal BFS."""
    best = math.inf
    for (u, v) in g.edges:
        # distance from u to v avoiding the edge uv
        dist = {u: 0}
        q = deque((u,))
        while q:
            a = q.popleft()
            if a == v:
                break
            da = dist[a]
            if da + 1 >= best:
                continue
            for w in g.adj[a]:
                if a == u and w == v:
                    continue
                if w not in dist:
                    dist[w] = da + 1
                    q.append(w)
        if v in dist and dist[v] + 1 < best:
            best = dist[v] + 1
    return best


def _is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        q = deque((s,))
        while q:
            u = q.popleft()
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = color[u] ^ 1
                    q.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def structural_checks(g: Graph) -> StructuralReport:
    """Connectivity, 2-connectivity, bipartiteness, max degree and girth.

    2-connectivity follows the |V| > k convention, so K2 is connected but
    not biconnected here.  Girth is math.inf for forests.
    """
    connected = _is_connected(g)
    if g.n >= 3 and connected:
        _, cuts = _biconnected_components(g)
        biconnected = not cuts
    else:
        biconnected = False
    return StructuralReport(
        is_connected=connected,
        is_biconnected=biconnected,
        is_bipartite=_is_bipartite(g),
        max_degree=max((len(a) for a in g.adj), default=0),
        girth=_girth(g),
    )
