"""Seeded instance generators for test corpora.

All generators draw from ``random.Random(seed)`` (Mersenne Twister), so a
fixed seed reproduces the exact same instance on any platform; generated
files record the algorithm tag ``mt19937`` together with the seed.
"""

from __future__ import annotations

import random

from .errors import InputError
from .graph import Graph, is_connected
from .instance import Instance

__all__ = [
    "PRNG_TAG",
    "gen_block_graph",
    "gen_block_cactus",
    "gen_random_connected",
    "gen_requirements",
    "cubic_catalog",
]

PRNG_TAG = "mt19937"


def gen_block_graph(n: int, seed: int, clique_max: int = 4) -> Graph:
    """Connected graph whose blocks are cliques of size <= clique_max,
    grown by gluing random cliques onto random existing vertices."""
    if n < 1:
        raise InputError("need at least one vertex")
    if clique_max < 2:
        raise InputError("clique_max must be at least 2")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    built = 1
    while built < n:
        size = min(rng.randint(2, clique_max), n - built + 1)
        attach = rng.randrange(built)
        fresh = list(range(built, built + size - 1))
        members = [attach] + fresh
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                edges.append((members[i], members[j]))
        built += size - 1
    return Graph(n, edges)


def gen_block_cactus(n: int, seed: int) -> Graph:
    """Like gen_block_graph but mixing clique blocks with cycle blocks."""
    if n < 1:
        raise InputError("need at least one vertex")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    built = 1
    while built < n:
        room = n - built
        if rng.random() < 0.5 or room < 2:
            size = min(rng.randint(2, 4), room + 1)
            attach = rng.randrange(built)
            members = [attach] + list(range(built, built + size - 1))
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    edges.append((members[i], members[j]))
            built += size - 1
        else:
            size = min(rng.randint(3, 6), room + 1)
            attach = rng.randrange(built)
            ring = [attach] + list(range(built, built + size - 1))
            for a, b in zip(ring, ring[1:]):
                edges.append((a, b))
            edges.append((ring[-1], ring[0]))
            built += size - 1
    return Graph(n, edges)


def gen_random_connected(n: int, p: float, seed: int, max_tries: int = 10000) -> Graph:
    """G(n, p) resampled until connected."""
    if not 0.0 <= p <= 1.0:
        raise InputError("edge probability must lie in [0, 1]")
    if n < 1:
        raise InputError("need at least one vertex")
    rng = random.Random(seed)
    for _ in range(max_tries):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        g = Graph(n, edges)
        if is_connected(g):
            return g
    raise InputError(f"no connected sample after {max_tries} tries (n={n}, p={p})")


def gen_requirements(
    g: Graph, r_max: int, seed: int, free_fraction: float = 0.0
) -> Instance:
    """Uniform requirements in 0..r_max and an independent Bernoulli free set."""
    if r_max < 0:
        raise InputError("r_max must be nonnegative")
    if not 0.0 <= free_fraction <= 1.0:
        raise InputError("free_fraction must lie in [0, 1]")
    rng = random.Random(seed)
    reqs = tuple(rng.randint(0, r_max) for _ in range(g.n))
    free = frozenset(v for v in range(g.n) if rng.random() < free_fraction)
    return Instance(g, reqs, free)


def cubic_catalog() -> list[tuple[str, Graph]]:
    """Named cubic graphs used as reduction sources: K4, the triangular
    prism, K_{3,3} and the Petersen graph (all 2-connected)."""
    k4 = Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    prism = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                      (0, 3), (1, 4), (2, 5)])
    k33 = Graph(6, [(a, b) for a in (0, 1, 2) for b in (3, 4, 5)])
    petersen = Graph(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                          (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                          (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)])
    return [("K4", k4), ("prism", prism), ("K33", k33), ("petersen", petersen)]
