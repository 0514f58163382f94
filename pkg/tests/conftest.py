from __future__ import annotations

import sys
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from veccon.graph import Graph


def complete_graph(n: int) -> Graph:
    return Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 7):
    """Random connected graph: a random tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    perm = draw(st.permutations(list(range(n))))
    edges = set()
    for i in range(1, n):
        j = draw(st.integers(0, i - 1))
        a, b = perm[i], perm[j]
        edges.add((a, b) if a < b else (b, a))
    pairs = list(combinations(range(n), 2))
    if pairs:
        edges |= draw(st.sets(st.sampled_from(pairs), max_size=len(pairs)))
    return Graph(n, edges)


@st.composite
def requirement_maps(draw, graph: Graph, r_max: int = 4):
    return tuple(
        draw(st.integers(0, r_max)) for _ in range(graph.n)
    )


@pytest.fixture(scope="session")
def k4() -> Graph:
    return complete_graph(4)
