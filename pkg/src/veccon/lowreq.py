"""Polynomial solver for instances whose requirements are all at most 2.

Works on the block tree: leaf blocks whose interior only asks for single
paths are pruned away, since any nonempty solution elsewhere serves them.
If pruning collapses the tree to one node the optimum has size at most 2
and is found by direct search; otherwise picking one non-cut vertex per
surviving leaf block is optimal, matching the lower bound given by the
pairwise-disjoint violating sets hanging off those leaves.
"""

from __future__ import annotations

from itertools import combinations

from .errors import InputError
from .graph import block_decomposition, induced_subgraph, is_connected
from .instance import Instance
from .oracle import is_feasible

__all__ = ["solve_lowreq"]


def solve_lowreq(inst: Instance) -> frozenset[int]:
    """Minimum vector connectivity set when every requirement is <= 2."""
    g = inst.graph
    if g.n == 0:
        raise InputError("empty graph")
    if not is_connected(g):
        raise InputError("solve_lowreq requires a connected graph")
    if inst.free_set:
        raise InputError("solve_lowreq does not take free vertices")
    if any(rv > 2 for rv in inst.requirements):
        raise InputError("solve_lowreq requires all requirements <= 2")
    r = inst.requirements

    if is_feasible(inst, ()):
        return frozenset()

    # prune leaf blocks whose interiors only need one path
    alive = set(range(g.n))
    while True:
        sub, mapping = induced_subgraph(g, alive)
        dec = block_decomposition(sub)
        if len(dec.blocks) == 1:
            break
        pruned = False
        for bi in dec.leaf_blocks:
            block = dec.blocks[bi]
            (cut,) = [u for u in block if u in dec.cut_vertices]
            interior = [mapping[u] for u in block if u != cut]
            if all(r[u] <= 1 for u in interior):
                alive.difference_update(interior)
                pruned = True
        if not pruned:
            break

    if len(dec.blocks) == 1:
        # fully pruned to one biconnected piece: optimum has size <= 2
        for size in (1, 2):
            for combo in combinations(range(g.n), size):
                if is_feasible(inst, combo):
                    return frozenset(combo)
        raise AssertionError("a 1-node pruned tree admits a solution of size <= 2")

    # one non-cut vertex per remaining leaf block: the max-requirement one,
    # smallest id on ties
    chosen = set()
    for bi in dec.leaf_blocks:
        block = dec.blocks[bi]
        candidates = sorted(
            (mapping[u] for u in block if u not in dec.cut_vertices),
            key=lambda w: (-r[w], w),
        )
        chosen.add(candidates[0])
    assert is_feasible(inst, chosen), "leaf picks must satisfy the instance"
    return frozenset(chosen)
