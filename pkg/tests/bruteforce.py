"""Independent brute-force oracles used to validate the package.

These deliberately avoid the package's flow machinery: fans are found by
enumerating disjoint path systems, and the dual bound by enumerating
separators.  Both stay exponential and tiny.
"""

from __future__ import annotations

from itertools import combinations

from veccon.graph import Graph


def fan_paths(g: Graph, v: int, targets: set[int]) -> list[tuple[int, ...]]:
    """All simple paths from v ending at their first target vertex."""
    out: list[tuple[int, ...]] = []

    def extend(path: list[int], used: set[int]) -> None:
        for w in g.adj[path[-1]]:
            if w in used:
                continue
            if w in targets:
                out.append(tuple(path) + (w,))
            else:
                path.append(w)
                used.add(w)
                extend(path, used)
                used.remove(w)
                path.pop()

    extend([v], {v})
    return out


def max_fan_order(g: Graph, v: int, targets) -> int:
    """Maximum fan order by exhaustive search over disjoint path systems."""
    tset = set(targets)
    base = 1 if v in tset else 0
    rest = tset - {v}
    if not rest:
        return base
    bodies = [frozenset(p[1:]) for p in fan_paths(g, v, rest)]
    cap = min(len(rest), len(g.adj[v]))
    best = 0

    def search(idx: int, used: frozenset[int], count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if best >= cap or count + (len(bodies) - idx) <= best:
            return
        for j in range(idx, len(bodies)):
            if not (bodies[j] & used):
                search(j + 1, used | bodies[j], count + 1)

    search(0, frozenset(), 0)
    return base + best


def min_separator_bound(g: Graph, v: int, targets) -> int:
    """Smallest C (v excluded) cutting v from all targets outside C, plus
    the self-path; by Menger this equals the maximum fan order."""
    tset = set(targets)
    base = 1 if v in tset else 0
    rest = tset - {v}
    if not rest:
        return base
    others = [u for u in range(g.n) if u != v]
    for size in range(len(others) + 1):
        for combo in combinations(others, size):
            blocked = set(combo)
            goals = rest - blocked
            if not goals:
                return base + size
            seen = {v}
            stack = [v]
            hit = False
            while stack and not hit:
                u = stack.pop()
                for w in g.adj[u]:
                    if w in blocked or w in seen:
                        continue
                    if w in goals:
                        hit = True
                        break
                    seen.add(w)
                    stack.append(w)
            if not hit:
                return base + size
    raise AssertionError("removing all other vertices always separates")


def connected_subsets_naive(g: Graph) -> set[frozenset[int]]:
    """All connected vertex subsets by filtering the power set."""
    out = set()
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            seed = combo[0]
            inside = set(combo)
            seen = {seed}
            stack = [seed]
            while stack:
                u = stack.pop()
                for w in g.adj[u]:
                    if w in inside and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == size:
                out.add(frozenset(combo))
    return out


def min_hitting_naive(sets, universe) -> int:
    """Minimum hitting set size by subset enumeration."""
    uni = sorted(universe)
    fam = [set(x) for x in sets]
    if not fam:
        return 0
    for size in range(len(uni) + 1):
        for combo in combinations(uni, size):
            cs = set(combo)
            if all(x & cs for x in fam):
                return size
    raise AssertionError("the universe hits everything")


def min_vertex_cover_naive(g: Graph) -> int:
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            cs = set(combo)
            if all(u in cs or v in cs for u, v in g.edges):
                return size
    raise AssertionError("V covers everything")
