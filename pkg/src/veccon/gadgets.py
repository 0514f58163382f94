"""Reduction gadget from vertex cover in cubic graphs.

Each source edge e = xy becomes a 5-vertex path x, w_xe, w_e, w_ye, y with
a triangle tip z_xe glued over w_xe w_e and a tip z_ye over w_e w_ye; the
three w-vertices of a source vertex form a triangle.  Requirements are 4 on
the side w's, 3 on the middle w, 0 elsewhere.  Feasible sets are exactly
those hitting, for every source edge, the triples

    {x, w_xe, z_xe},  {z_xe, w_e, z_ye},  {z_ye, w_ye, y},

which ties the gadget optimum to (minimum vertex cover) + (edge count) and
lets any feasible set be folded back to a cover losing at most |E| vertices.
A variant subdividing every gadget edge an odd number of times yields
bipartite instances of arbitrarily high girth with the same requirements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import InputError, SizeLimitError
from .graph import Graph, is_connected
from .instance import Instance
from .oracle import ViolatingFamily

__all__ = [
    "GadgetMapping",
    "build_gadget",
    "build_bipartite_gadget",
    "claim1_family",
    "solution_from_cover",
    "normalize_solution",
    "extract_vertex_cover",
    "exact_vertex_cover",
]

# role tags for gadget vertices
ORIGINAL = "original"
W_SIDE = "w_side"
W_MID = "w_mid"
Z_SIDE = "z_side"
SUBDIVISION = "subdivision"


@dataclass(frozen=True)
class GadgetMapping:
    """Bidirectional correspondence between a cubic graph and its gadget.

    ``edge_index`` maps each (sorted) source edge to the vertex quintuple
    (w_xe, w_e, w_ye, z_xe, z_ye).  ``roles[v]`` tags every gadget vertex:
    ("original", x), ("w_side", x, e), ("w_mid", e), ("z_side", x, e) or
    ("subdivision", owner) where owner is the gadget id of the simplicial
    vertex whose clique the subdivided edge belonged to.
    ``subdivision_steps`` is 0 for the plain gadget, else the odd number of
    new vertices placed on every gadget edge.
    """

    source: Graph
    gadget: Graph
    requirements: tuple[int, ...]
    roles: tuple[tuple, ...]
    edge_index: dict[tuple[int, int], tuple[int, int, int, int, int]] = field(
        compare=False
    )
    subdivision_steps: int = 0

    def instance(self) -> Instance:
        return Instance(self.gadget, self.requirements, frozenset())

    def source_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edge_index)


def _check_cubic(g: Graph) -> None:
    if g.n == 0 or any(len(a) != 3 for a in g.adj):
        raise InputError("gadget construction requires a cubic graph")
    if not is_connected(g):
        raise InputError("gadget construction requires a connected graph")


def build_gadget(g: Graph) -> GadgetMapping:
    """Cubic graph -> gadget instance with requirements in {0, 3, 4}."""
    _check_cubic(g)
    n = g.n
    src_edges = sorted(g.edges)
    roles: list[tuple] = [(ORIGINAL, x) for x in range(n)]
    reqs = [0] * n
    edge_index: dict[tuple[int, int], tuple[int, int, int, int, int]] = {}
    edges: list[tuple[int, int]] = []
    nxt = n
    wside_of: dict[tuple[int, int], int] = {}  # (vertex, edge id) -> w vertex
    for ei, (x, y) in enumerate(src_edges):
        wx, wm, wy, zx, zy = nxt, nxt + 1, nxt + 2, nxt + 3, nxt + 4
        nxt += 5
        roles += [
            (W_SIDE, x, (x, y)),
            (W_MID, (x, y)),
            (W_SIDE, y, (x, y)),
            (Z_SIDE, x, (x, y)),
            (Z_SIDE, y, (x, y)),
        ]
        reqs += [4, 3, 4, 0, 0]
        edge_index[(x, y)] = (wx, wm, wy, zx, zy)
        wside_of[(x, ei)] = wx
        wside_of[(y, ei)] = wy
        # replaced path, then the two glued triangles
        edges += [(x, wx), (wx, wm), (wm, wy), (wy, y)]
        edges += [(wx, zx), (zx, wm), (wm, zy), (zy, wy)]
    eid = {e: i for i, e in enumerate(src_edges)}
    for x in range(n):
        incident = [eid[(x, w) if x < w else (w, x)] for w in g.adj[x]]
        ws = sorted(wside_of[(x, ei)] for ei in incident)
        edges += [(ws[0], ws[1]), (ws[0], ws[2]), (ws[1], ws[2])]
    gadget = Graph(nxt, edges)
    return GadgetMapping(
        source=g,
        gadget=gadget,
        requirements=tuple(reqs),
        roles=tuple(roles),
        edge_index=edge_index,
    )


def _edge_owner(m: GadgetMapping) -> dict[tuple[int, int], int]:
    """Owner (simplicial vertex) of every gadget edge: each edge lies in a
    unique simplicial clique rooted at an original or a z vertex."""
    owner: dict[tuple[int, int], int] = {}

    def key(a, b):
        return (a, b) if a < b else (b, a)

    for (x, y), (wx, wm, wy, zx, zy) in m.edge_index.items():
        owner[key(x, wx)] = x
        owner[key(wy, y)] = y
        owner[key(wx, wm)] = zx
        owner[key(wx, zx)] = zx
        owner[key(zx, wm)] = zx
        owner[key(wm, wy)] = zy
        owner[key(wm, zy)] = zy
        owner[key(zy, wy)] = zy
    # step-3 triangle edges belong to the original vertex's clique
    for (a, b) in m.gadget.edges:
        if (a, b) not in owner:
            ra, rb = m.roles[a], m.roles[b]
            assert ra[0] == W_SIDE and rb[0] == W_SIDE and ra[1] == rb[1]
            owner[(a, b)] = ra[1]
    return owner


def build_bipartite_gadget(g: Graph, k: int) -> GadgetMapping:
    """Gadget with every edge subdivided 2k+1 times: bipartite, girth > k,
    same maximum degree, requirements still in {0, 3, 4}."""
    if k < 1:
        raise InputError("subdivision parameter k must be >= 1")
    base = build_gadget(g)
    owner = _edge_owner(base)
    steps = 2 * k + 1
    roles = list(base.roles)
    reqs = list(base.requirements)
    edges: list[tuple[int, int]] = []
    nxt = base.gadget.n
    for (a, b) in sorted(base.gadget.edges):
        chain = list(range(nxt, nxt + steps))
        nxt += steps
        for v in chain:
            roles.append((SUBDIVISION, owner[(a, b)]))
            reqs.append(0)
        path = [a] + chain + [b]
        edges += list(zip(path, path[1:]))
    gadget = Graph(nxt, edges)
    return GadgetMapping(
        source=g,
        gadget=gadget,
        requirements=tuple(reqs),
        roles=tuple(roles),
        edge_index=dict(base.edge_index),
        subdivision_steps=steps,
    )


def claim1_family(m: GadgetMapping) -> ViolatingFamily:
    """The exact feasibility characterization of a gadget instance.

    Plain gadget: three triples per source edge.  Subdivided variant: the
    same sets with every simplicial vertex s absorbed into A(s), its class
    of owned subdivision vertices.
    """
    if m.subdivision_steps == 0:
        sets = []
        for (x, y) in m.source_edges():
            wx, wm, wy, zx, zy = m.edge_index[(x, y)]
            sets.append(frozenset((x, wx, zx)))
            sets.append(frozenset((zx, wm, zy)))
            sets.append(frozenset((zy, wy, y)))
        return ViolatingFamily(sets=tuple(sets))
    absorbed: dict[int, set[int]] = {}
    for v, role in enumerate(m.roles):
        if role[0] == SUBDIVISION:
            absorbed.setdefault(role[1], set()).add(v)

    def a_of(s: int) -> frozenset[int]:
        return frozenset(absorbed.get(s, set()) | {s})

    sets = []
    for (x, y) in m.source_edges():
        wx, wm, wy, zx, zy = m.edge_index[(x, y)]
        sets.append(a_of(x) | {wx} | a_of(zx))
        sets.append(a_of(zx) | {wm} | a_of(zy))
        sets.append(a_of(zy) | {wy} | a_of(y))
    return ViolatingFamily(sets=tuple(sets))


def _require_feasible(m: GadgetMapping, s: set[int], what: str) -> ViolatingFamily:
    fam = claim1_family(m)
    for v in s:
        if not (0 <= v < m.gadget.n):
            raise InputError(f"unknown gadget vertex {v}")
    if not fam.is_hit_by(s):
        raise InputError(f"{what} is not feasible for the gadget instance")
    return fam


def solution_from_cover(m: GadgetMapping, c: Iterable[int]) -> frozenset[int]:
    """Feasible gadget solution of size |c| + |E(source)| from a cover.

    Per edge one z tip is added on the side whose endpoint is missing from
    the cover (x side, deterministically, when both endpoints are covered).
    """
    cover = set(c)
    for v in cover:
        if not (0 <= v < m.source.n):
            raise InputError(f"unknown source vertex {v}")
    s = set(cover)
    for (x, y) in m.source_edges():
        wx, wm, wy, zx, zy = m.edge_index[(x, y)]
        if x in cover and y in cover:
            s.add(zx)
        elif x in cover:
            s.add(zy)
        elif y in cover:
            s.add(zx)
        else:
            raise InputError(f"edge ({x},{y}) is not covered")
    return frozenset(s)


def normalize_solution(m: GadgetMapping, s: Iterable[int]) -> frozenset[int]:
    """Same-or-smaller feasible solution free of w and subdivision vertices.

    Each w is swapped for the adjacent z tip of its triple (w_xe and w_e for
    z_xe, w_ye for z_ye), subdivision vertices for their owner, and the
    replacement is dropped outright when the hitting condition survives
    without it.
    """
    cur = set(s)
    fam = _require_feasible(m, cur, "input solution")
    swap: dict[int, int] = {}
    for (x, y) in m.source_edges():
        wx, wm, wy, zx, zy = m.edge_index[(x, y)]
        swap[wx] = zx
        swap[wm] = zx
        swap[wy] = zy
    for v, role in enumerate(m.roles):
        if role[0] == SUBDIVISION:
            swap[v] = role[1]
    for w in sorted(cur):
        if w not in swap:
            continue
        cur.discard(w)
        if not fam.is_hit_by(cur):
            cur.add(swap[w])
    assert fam.is_hit_by(cur)
    return frozenset(cur)


def extract_vertex_cover(m: GadgetMapping, s: Iterable[int]) -> frozenset[int]:
    """Fold a feasible gadget solution into a source cover of size
    <= |s| - |E(source)|.

    Normalization leaves only original and z vertices; reading the z's as
    the double-subdivision cover and collapsing each edge (promoting one
    endpoint when both tips but neither endpoint are present) yields the
    cover.
    """
    s_in = set(s)
    norm = normalize_solution(m, s_in)
    cover = {v for v in norm if m.roles[v][0] == ORIGINAL}
    for (x, y) in m.source_edges():
        if x in cover or y in cover:
            continue
        _, _, _, zx, zy = m.edge_index[(x, y)]
        assert zx in norm and zy in norm, "hitting property violated"
        cover.add(x)
    m_src = len(m.source.edges)
    assert len(cover) <= len(s_in) - m_src, "cover exceeds |S| - |E|"
    for (x, y) in m.source.edges:
        assert x in cover or y in cover
    return frozenset(cover)


def exact_vertex_cover(g: Graph, cap: int = 24) -> frozenset[int]:
    """Minimum vertex cover by branch and bound on a maximum-degree vertex."""
    if g.n > cap:
        raise SizeLimitError(f"exact cover capped at {cap} vertices (got {g.n})")
    n = g.n
    adj0 = [0] * n
    for u, v in g.edges:
        adj0[u] |= 1 << v
        adj0[v] |= 1 << u
    best: list[tuple[int, ...]] = [tuple(range(n))]

    def strip(adj: list[int], v: int) -> list[int]:
        out = list(adj)
        mask = ~(1 << v)
        for w in range(n):
            out[w] &= mask
        out[v] = 0
        return out

    def rec(adj: list[int], chosen: list[int]):
        degs = [bin(a).count("1") for a in adj]
        maxdeg = max(degs, default=0)
        if maxdeg == 0:
            if len(chosen) < len(best[0]):
                best[0] = tuple(sorted(chosen))
            return
        edges_left = sum(degs) // 2
        if len(chosen) + (edges_left + maxdeg - 1) // maxdeg >= len(best[0]):
            return
        v = degs.index(maxdeg)
        # branch: v in the cover, else all its neighbors are
        rec(strip(adj, v), chosen + [v])
        nbrs = [w for w in range(n) if adj[v] >> w & 1]
        sub = adj
        for w in nbrs:
            sub = strip(sub, w)
        rec(sub, chosen + nbrs)

    rec(adj0, [])
    return frozenset(best[0])
