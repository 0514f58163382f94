"""Greedy heuristic: grow the solution by largest deficiency decrease.

A vertex's deficiency is how far its requirement exceeds its current fan
order to S | F (zero once it joins S).  Adding the deficient vertex itself
always helps, so every round makes strict progress and the result is
feasible; the size is compared against oracle optima empirically rather
than carrying the logarithmic guarantee of the submodular-cover view.
"""

from __future__ import annotations

from .errors import InputError
from .fans import bounded_kappa
from .graph import is_connected
from .instance import Instance

__all__ = ["greedy"]


def _deficiency(inst: Instance, s: set[int]) -> int:
    adj = inst.graph.adj
    targets = s | inst.free_set
    total = 0
    for v in range(inst.graph.n):
        rv = inst.requirements[v]
        if rv == 0 or v in s:
            continue
        total += rv - bounded_kappa(adj, v, targets, rv)
    return total


def greedy(inst: Instance) -> frozenset[int]:
    """Feasible solution by greedy deficiency reduction, ties to low ids."""
    if not is_connected(inst.graph):
        raise InputError("greedy requires a connected graph")
    s: set[int] = set()
    total = _deficiency(inst, s)
    while total > 0:
        best_vertex = -1
        best_total = total
        for u in range(inst.graph.n):
            if u in s:
                continue
            t = _deficiency(inst, s | {u})
            if t < best_total:
                best_total = t
                best_vertex = u
        if best_vertex < 0:
            raise AssertionError("adding a deficient vertex always lowers deficiency")
        s.add(best_vertex)
        total = best_total
    return frozenset(s)
