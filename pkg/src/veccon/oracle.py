"""Ground-truth solvers: feasibility, exhaustive optimum, and the
violating-set hypergraph whose hitting sets are exactly the solutions.

A connected set X with R(X) > |N(X)| can never satisfy its neediest vertex
from outside, so every solution must intersect it; conversely a set hitting
all such X is feasible.  These oracles are deliberately simple and are used
to validate every polynomial algorithm in the package.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError, SizeLimitError
from .fans import bounded_kappa
from .graph import Graph, open_neighborhood
from .instance import Instance

__all__ = [
    "ViolatingFamily",
    "is_feasible",
    "brute_force_min",
    "violating_family",
    "min_hitting_set",
    "solve_via_hitting",
    "brute_cap",
]

_DEFAULT_CAP = 16


def brute_cap(default: int = _DEFAULT_CAP) -> int:
    """Size cap for exhaustive oracles; VECCON_BRUTE_CAP overrides."""
    env = os.environ.get("VECCON_BRUTE_CAP")
    if env is None:
        return default
    try:
        return int(env)
    except ValueError as e:
        raise InputError(f"bad VECCON_BRUTE_CAP value {env!r}") from e


@dataclass(frozen=True)
class ViolatingFamily:
    """Connected sets X with R(X) > |N(X)|; every solution hits each one."""

    sets: tuple[frozenset[int], ...]
    minimal_only: bool = False

    def is_hit_by(self, s: Iterable[int]) -> bool:
        ss = set(s)
        return all(x & ss for x in self.sets)


def is_feasible(inst: Instance, s: Iterable[int]) -> bool:
    """True iff every vertex outside s is r(v)-linked to s | free_set."""
    ss = set(s)
    targets = ss | inst.free_set
    return _feasible(inst, ss, targets, range(inst.graph.n))


def _feasible(inst, ss, targets, order) -> bool:
    adj = inst.graph.adj
    r = inst.requirements
    tsize = len(targets)
    for v in order:
        if v in ss:
            continue
        rv = r[v]
        if rv == 0:
            continue
        # kappa is at most |targets| and at most degree + self-path
        if rv > tsize or rv > len(adj[v]) + (1 if v in targets else 0):
            return False
        if bounded_kappa(adj, v, targets, rv) < rv:
            return False
    return True


def brute_force_min(inst: Instance, cap: int | None = None) -> frozenset[int]:
    """Minimum solution by subset enumeration, smallest size first, ties by
    lexicographic vertex order.  Exponential; guarded by the size cap."""
    n = inst.graph.n
    limit = brute_cap() if cap is None else cap
    if n > limit:
        raise SizeLimitError(f"brute force capped at {limit} vertices (got {n})")
    # scan needy vertices first so infeasible candidates fail fast
    order = sorted(range(n), key=lambda v: -inst.requirements[v])
    free = inst.free_set
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            ss = set(combo)
            if _feasible(inst, ss, ss | free, order):
                return frozenset(combo)
    raise AssertionError("S = V is always feasible")  # pragma: no cover


def _connected_subsets(g: Graph, max_size: int | None = None):
    """All vertex sets inducing connected subgraphs, each exactly once.

    Grow-from-seed with the minimum vertex as canonical seed: sets are
    extended only by vertices larger than the seed, and once a candidate is
    skipped it stays excluded along that branch.
    """
    adj = g.adj
    cap = g.n if max_size is None else max_size

    def rec(seed, members, border, excluded):
        yield frozenset(members)
        if len(members) >= cap:
            return
        local_excluded = set(excluded)
        for u in sorted(border):
            if u in local_excluded:
                continue
            new_border = set(border)
            new_border.discard(u)
            for w in adj[u]:
                if w > seed and w not in members and w not in local_excluded:
                    new_border.add(w)
            members.add(u)
            yield from rec(seed, members, new_border, local_excluded)
            members.remove(u)
            local_excluded.add(u)

    for s in range(g.n):
        border = {w for w in adj[s] if w > s}
        yield from rec(s, {s}, border, set())


def violating_family(
    g: Graph,
    requirements: Sequence[int],
    *,
    minimal_only: bool = False,
    max_size: int | None = None,
    cap: int | None = None,
) -> ViolatingFamily:
    """Enumerate the connected sets X with R(X) > |N(X)| (all, or only the
    inclusion-minimal ones).  Applies to instances without free vertices.

    ``max_size`` restricts enumeration to sets of at most that many
    vertices; the truncated family still lower-bounds every solution.
    """
    if len(requirements) != g.n:
        raise InputError("requirement map must cover every vertex")
    limit = brute_cap() if cap is None else cap
    if max_size is None and g.n > limit:
        raise SizeLimitError(
            f"violating-set enumeration capped at {limit} vertices (got {g.n})"
        )
    found = []
    for x in _connected_subsets(g, max_size):
        rx = max(requirements[v] for v in x)
        if rx == 0:
            continue
        if len(open_neighborhood(g, x)) < rx:
            found.append(x)
    found.sort(key=lambda x: (len(x), sorted(x)))
    if minimal_only:
        kept: list[frozenset[int]] = []
        for x in found:
            if not any(y <= x for y in kept):
                kept.append(x)
        found = kept
    return ViolatingFamily(sets=tuple(found), minimal_only=minimal_only)


def solve_via_hitting(inst: Instance) -> frozenset[int]:
    """Exact solve by hitting the violating family, size-capped iteratively.

    A family truncated to sets of at most s vertices is hit by every
    solution, so its minimum hitting set lower-bounds the optimum; as soon
    as that hitting set is itself feasible it must be optimal.  Terminates
    at s = n, where the family is the complete characterization.
    """
    if inst.free_set:
        raise InputError("hitting-set solving applies to empty free sets only")
    g = inst.graph
    for size in range(1, g.n + 1):
        fam = violating_family(
            g, inst.requirements, minimal_only=True, max_size=size
        )
        hs = min_hitting_set(fam, range(g.n))
        if is_feasible(inst, hs):
            return hs
    raise AssertionError("the full family certifies its own hitting set")


def min_hitting_set(
    fam: ViolatingFamily | Iterable[frozenset[int]],
    universe: Iterable[int],
) -> frozenset[int]:
    """Exact minimum hitting set by branch and bound.

    Branches on the vertices of an uncovered set with fewest options and
    prunes with a disjoint-set lower bound.
    """
    sets = list(fam.sets) if isinstance(fam, ViolatingFamily) else list(fam)
    uni = set(universe)
    for x in sets:
        if not x:
            raise InputError("family contains an empty set")
        if not x <= uni:
            raise InputError("family set not contained in the universe")
    if not sets:
        return frozenset()
    sets = [frozenset(x) for x in sets]

    best = [frozenset(uni)]

    def lower_bound(remaining: list[frozenset[int]]) -> int:
        blocked: set[int] = set()
        lb = 0
        for x in remaining:
            if not (x & blocked):
                lb += 1
                blocked |= x
        return lb

    def rec(chosen: set[int], remaining: list[frozenset[int]]):
        remaining = [x for x in remaining if not (x & chosen)]
        if not remaining:
            if best[0] is None or len(chosen) < len(best[0]):
                best[0] = frozenset(chosen)
            return
        if len(chosen) + lower_bound(remaining) >= len(best[0]):
            return
        pivot = min(remaining, key=lambda x: (len(x), sorted(x)))
        for v in sorted(pivot):
            chosen.add(v)
            rec(chosen, remaining)
            chosen.remove(v)

    rec(set(), sets)
    return best[0]
