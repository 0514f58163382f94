"""Reduction of free-set vector connectivity to biconnected blocks.

The solver repeatedly inspects a leaf block B with cut vertex v and asks
whether F together with v already satisfies the block side (beta) and the
remaining side (rho).  Both true: {v} is optimal.  Exactly one true: the
unsatisfied side is solved on its own, after v's requirement is discounted
by its linkage into the satisfied side and v is made free.  Neither true:
the block is solved for every possible demand i on v, the largest i whose
optimum is no bigger than the i=0 optimum fixes the block-side choice, and
the rest is solved with v free and requirement r(v) - i* + 2.

Biconnected base cases are solved exactly for complete graphs and cycles;
any other biconnected block falls back to the exhaustive oracle, so answers
are always exact and only ever expensive inside an unsupported block.

The recursion is unrolled into a loop over one shared workspace: peeling a
leaf block never changes the remaining block structure, so the block-cut
tree is maintained incrementally, and linkage scans remember the last
failing vertex, whose requirement stays unmet across peels, to short-cut
the next round's feasibility checks.
"""

from __future__ import annotations

from itertools import combinations

from .errors import BlockTypeError, InputError
from .fans import bounded_kappa
from .graph import Graph, block_decomposition, induced_subgraph, is_connected
from .instance import Instance
from .oracle import brute_force_min, is_feasible

__all__ = [
    "fsveccon",
    "fsveccon_biconnect",
    "complete_solver",
    "cycle_solver",
    "solve_block_cactus",
    "is_block_cactus",
]


# ---------------------------------------------------------------------------
# linkage scans with cheap screens


def _one_linked(adj, mask, targets, tsize, w, rw) -> bool:
    """Is w rw-linked to `targets` in the mask-induced graph?

    The induced graph must be connected; targets must be inside the mask.
    Screens by cardinality, connectivity, adjacent targets and live degree
    before paying for a flow.
    """
    if rw == 0:
        return True
    bonus = 1 if w in targets else 0
    if rw > tsize:
        return False
    if rw <= bonus + 1:
        # bonus covers rw <= bonus; otherwise rw <= tsize guarantees some
        # other target exists, reachable by connectivity
        return True
    near = 0
    live_deg = 0
    for x in adj[w]:
        if mask is None or mask[x]:
            live_deg += 1
            if x in targets:
                near += 1
    if bonus + near >= rw:
        return True
    if rw > live_deg + bonus:
        return False
    return bounded_kappa(adj, w, targets, rw, mask) >= rw


def _scan_linked(adj, mask, targets, r, verts, hint=-1):
    """(True, -1) if every vertex of `verts` is r(w)-linked to targets,
    else (False, witness).  ``hint`` is tried first."""
    tsize = len(targets)
    if hint >= 0 and not _one_linked(adj, mask, targets, tsize, hint, r[hint]):
        return False, hint
    for w in verts:
        if w == hint:
            continue
        if not _one_linked(adj, mask, targets, tsize, w, r[w]):
            return False, w
    return True, -1


# ---------------------------------------------------------------------------
# biconnected base solvers


def complete_solver(inst: Instance) -> frozenset[int]:
    """Exact solver for complete graphs.

    Some optimum takes the k highest-requirement free vertices plus the l
    highest-requirement non-free ones; in a clique a vertex outside S sees
    kappa = |F| + l (targets minus itself, plus its own self-path when
    free), so a prefix pair works iff no left-out requirement exceeds it.
    """
    g = inst.graph
    if not g.is_complete():
        raise InputError("complete_solver requires a complete graph")
    r = inst.requirements
    free = sorted(inst.free_set, key=lambda v: (-r[v], v))
    other = sorted(set(range(g.n)) - inst.free_set, key=lambda v: (-r[v], v))
    nf, no = len(free), len(other)

    def suffix_max(seq):
        out = [-1] * (len(seq) + 1)
        for i in range(len(seq) - 1, -1, -1):
            out[i] = max(out[i + 1], r[seq[i]])
        return out

    suf_f = suffix_max(free)
    suf_o = suffix_max(other)
    for total in range(g.n + 1):
        for k in range(max(0, total - no), min(total, nf) + 1):
            l = total - k
            if max(suf_f[k], suf_o[l]) <= nf + l:
                return frozenset(free[:k] + other[:l])
    raise AssertionError("S = V is always feasible")  # pragma: no cover


def cycle_solver(inst: Instance) -> frozenset[int]:
    """Exact solver for cycles: vertices demanding more than both cycle
    directions (plus their own self-path) are forced, and at most two
    further vertices are ever needed."""
    g = inst.graph
    if not g.is_cycle():
        raise InputError("cycle_solver requires a cycle")
    r = inst.requirements
    forced = frozenset(
        v for v in range(g.n) if r[v] > 2 + (1 if v in inst.free_set else 0)
    )
    rest = sorted(set(range(g.n)) - forced)
    for extra in range(3):
        for combo in combinations(rest, extra):
            s = forced | set(combo)
            if is_feasible(inst, s):
                return frozenset(s)
    raise AssertionError("a cycle solution needs at most two non-forced vertices")


def fsveccon_biconnect(inst: Instance) -> frozenset[int]:
    """Exact solver for biconnected instances (and K1/K2).

    Complete graphs and cycles are polynomial; anything else falls back to
    the exhaustive oracle, subject to its size cap.
    """
    g = inst.graph
    if g.n <= 2 or g.is_complete():
        return complete_solver(inst)
    if g.is_cycle():
        return cycle_solver(inst)
    return brute_force_min(inst)


# ---------------------------------------------------------------------------
# the block-tree reduction


class _Workspace:
    """Mutable view of the shrinking instance plus its block-cut tree."""

    def __init__(self, inst: Instance):
        g = inst.graph
        self.g = g
        self.adj = g.adj
        n = g.n
        self.alive = bytearray(b"\x01") * n
        self.r = list(inst.requirements)
        self.free: set[int] = set(inst.free_set)
        dec = block_decomposition(g)
        self.blocks = [frozenset(b) for b in dec.blocks]
        self.block_alive = bytearray(b"\x01") * len(self.blocks)
        self.nblocks = len(self.blocks)
        self.minvert = [min(b) for b in self.blocks]
        self.vblocks: list[set[int]] = [set() for _ in range(n)]
        for bi, b in enumerate(self.blocks):
            for u in b:
                self.vblocks[u].add(bi)
        self.cutcount = [
            sum(1 for u in b if len(self.vblocks[u]) >= 2) for b in self.blocks
        ]

    def alive_vertices(self) -> list[int]:
        return [v for v in range(self.g.n) if self.alive[v]]

    def pick_leaf(self) -> tuple[int, int]:
        """Leaf block with the smallest contained vertex id, plus its cut
        vertex (deterministic tie-break by block index)."""
        best = -1
        for bi in range(len(self.blocks)):
            if self.block_alive[bi] and self.cutcount[bi] == 1:
                if best < 0 or self.minvert[bi] < self.minvert[best]:
                    best = bi
        assert best >= 0, "a multi-block tree always has a leaf"
        cut = next(u for u in self.blocks[best] if len(self.vblocks[u]) >= 2)
        return best, cut

    def peel(self, bi: int, v: int) -> None:
        """Remove V(B) - {v}; the other blocks keep their structure."""
        for u in self.blocks[bi]:
            if u == v:
                continue
            self.alive[u] = 0
            self.free.discard(u)
            self.vblocks[u].discard(bi)
        self.vblocks[v].discard(bi)
        if len(self.vblocks[v]) == 1:
            (other,) = self.vblocks[v]
            self.cutcount[other] -= 1
        self.block_alive[bi] = 0
        self.nblocks -= 1

    def sub_instance(
        self, verts, extra_free=(), r_patch=None
    ) -> tuple[Instance, tuple[int, ...]]:
        sub, mapping = induced_subgraph(self.g, verts)
        r_sub = [self.r[old] for old in mapping]
        if r_patch:
            for old, val in r_patch.items():
                r_sub[mapping.index(old)] = val
        free_sub = {
            i for i, old in enumerate(mapping) if old in self.free or old in extra_free
        }
        return Instance(sub, tuple(r_sub), frozenset(free_sub)), mapping


def fsveccon(inst: Instance) -> frozenset[int]:
    """Minimum vector connectivity set for (G, F, r) on a connected graph.

    Exact on every connected graph; polynomial whenever all biconnected
    blocks are complete graphs or cycles.
    """
    g = inst.graph
    if g.n == 0:
        raise InputError("fsveccon needs a nonempty graph")
    if not is_connected(g):
        raise InputError("fsveccon requires a connected graph")
    ws = _Workspace(inst)
    rmax_bound = max(2, max(inst.requirements, default=0))
    adj = ws.adj
    acc: set[int] = set()
    witness = -1

    while True:
        if ws.nblocks == 1:
            sub, mapping = ws.sub_instance(ws.alive_vertices())
            sol = fsveccon_biconnect(sub)
            return frozenset(acc | {mapping[i] for i in sol})

        # is the empty set already feasible for the current instance?
        hint = witness if witness >= 0 and ws.alive[witness] else -1
        ok, bad = _scan_linked(
            adj,
            ws.alive,
            ws.free,
            ws.r,
            (w for w in range(g.n) if ws.alive[w]),
            hint,
        )
        if ok:
            return frozenset(acc)
        witness = bad

        bi, v = ws.pick_leaf()
        block = ws.blocks[bi]

        mask_b = bytearray(g.n)
        for u in block:
            mask_b[u] = 1
        t_block = {x for x in block if x in ws.free} | {v}
        beta, _ = _scan_linked(
            adj, mask_b, t_block, ws.r, (u for u in sorted(block) if u != v)
        )

        mask_r = bytearray(ws.alive)
        for u in block:
            if u != v:
                mask_r[u] = 0
        t_rest = {x for x in ws.free if mask_r[x]} | {v}
        hint = (
            witness
            if witness >= 0 and mask_r[witness] and witness != v
            else -1
        )
        rho, bad = _scan_linked(
            adj,
            mask_r,
            t_rest,
            ws.r,
            (w for w in range(g.n) if mask_r[w] and w != v),
            hint,
        )
        if not rho:
            witness = bad

        if beta and rho:
            return frozenset(acc | {v})

        if beta != rho:
            # one side is satisfied by F + v; recurse on the other
            if beta:
                # H = R: discount v by its linkage into the block side
                stray = {x for x in block if x != v and x in ws.free}
                if stray or v in ws.free:
                    kap = bounded_kappa(adj, v, stray, ws.r[v] + 1, mask_b)
                    ws.r[v] = max(
                        ws.r[v] - kap + (0 if v in ws.free else 1), 0
                    )
                    ws.free.add(v)
                ws.peel(bi, v)
                continue
            # H = B: discount v by its linkage into the rest
            stray = {x for x in ws.free if mask_r[x] and x != v}
            if stray or v in ws.free:
                kap = bounded_kappa(adj, v, stray, ws.r[v] + 1, mask_r)
                ws.r[v] = max(ws.r[v] - kap + (0 if v in ws.free else 1), 0)
                ws.free.add(v)
            sub, mapping = ws.sub_instance(sorted(block))
            sol = fsveccon_biconnect(sub)
            return frozenset(acc | {mapping[i] for i in sol})

        # neither side satisfied: solve the block for every demand on v
        rv = ws.r[v]
        sub, mapping = ws.sub_instance(sorted(block), extra_free=(v,))
        v_loc = mapping.index(v)
        r_base = list(sub.requirements)
        sols = []
        for i in range(rv + 1):
            r_base[v_loc] = i
            sols.append(
                fsveccon_biconnect(Instance(sub.graph, tuple(r_base), sub.free_set))
            )
        size0 = len(sols[0])
        i_star = max(j for j in range(rv + 1) if len(sols[j]) == size0)
        chosen = {mapping[i] for i in sols[i_star]}
        if v in chosen:
            raise AssertionError("block solution must avoid the cut vertex")
        # hand the rest r(v) - i* + 2 when v was not free, one less when it
        # was: the self-path v gains by becoming free must only count once
        new_r = max(rv - i_star + 1 + (0 if v in ws.free else 1), 0)
        if new_r > rmax_bound:
            raise AssertionError(
                f"rewritten requirement {new_r} exceeds the bound {rmax_bound}"
            )
        acc |= chosen
        ws.r[v] = new_r
        ws.free.add(v)
        ws.peel(bi, v)


def is_block_cactus(g: Graph) -> bool:
    """True iff every block is a clique or a cycle (needs a connected g)."""
    dec = block_decomposition(g)
    for b in dec.blocks:
        sub, _ = induced_subgraph(g, b)
        if not (sub.n <= 2 or sub.is_complete() or sub.is_cycle()):
            return False
    return True


def solve_block_cactus(inst: Instance) -> frozenset[int]:
    """fsveccon restricted to block-cactus graphs; rejects anything else so
    callers never silently hit the exponential fallback."""
    g = inst.graph
    if g.n == 0:
        raise InputError("empty graph")
    if not is_connected(g):
        raise InputError("solve_block_cactus requires a connected graph")
    dec = block_decomposition(g)
    for b in dec.blocks:
        sub, _ = induced_subgraph(g, b)
        if not (sub.n <= 2 or sub.is_complete() or sub.is_cycle()):
            raise BlockTypeError(
                f"block {sorted(b)} is neither a clique nor a cycle"
            )
    return fsveccon(inst)
