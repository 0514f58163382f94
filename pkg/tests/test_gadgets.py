from __future__ import annotations

import random
from collections import Counter

import pytest

from bruteforce import min_vertex_cover_naive
from veccon.errors import InputError, SizeLimitError
from veccon.gadgets import (
    build_bipartite_gadget,
    build_gadget,
    claim1_family,
    exact_vertex_cover,
    extract_vertex_cover,
    normalize_solution,
    solution_from_cover,
)
from veccon.generators import cubic_catalog, gen_random_connected
from veccon.graph import (
    Graph,
    induced_subgraph,
    is_connected,
    open_neighborhood,
    structural_checks,
)
from veccon.oracle import is_feasible, min_hitting_set

CATALOG = dict(cubic_catalog())


def test_counts_and_structure():
    for name, g in CATALOG.items():
        m = build_gadget(g)
        n, e = g.n, len(g.edges)
        assert m.gadget.n == n + 5 * e
        assert len(m.gadget.edges) == 6 * n + 6 * e
        report = structural_checks(m.gadget)
        assert report.max_degree == 5
        assert report.is_biconnected  # all catalog sources are 2-connected
        counts = Counter(m.requirements)
        assert counts[4] == 2 * e and counts[3] == e


def test_non_cubic_rejected():
    with pytest.raises(InputError):
        build_gadget(Graph(4, [(0, 1), (1, 2), (2, 3)]))
    with pytest.raises(InputError):
        build_bipartite_gadget(CATALOG["K4"], 0)


def test_claim1_triples_are_violating():
    m = build_gadget(CATALOG["K4"])
    fam = claim1_family(m)
    assert len(fam.sets) == 18
    for x in fam.sets:
        assert len(x) == 3
        sub, _ = induced_subgraph(m.gadget, x)
        assert is_connected(sub)
        assert max(m.requirements[v] for v in x) > len(
            open_neighborhood(m.gadget, x)
        )


def test_claim1_equivalence_random_subsets():
    m = build_gadget(CATALOG["K4"])
    fam = claim1_family(m)
    inst = m.instance()
    rng = random.Random(31)
    for _ in range(200):
        s = {v for v in range(m.gadget.n) if rng.random() < rng.choice((0.2, 0.5, 0.8))}
        assert is_feasible(inst, s) == fam.is_hit_by(s)


def test_solution_from_cover():
    for name in ("K4", "prism"):
        g = CATALOG[name]
        m = build_gadget(g)
        cover = exact_vertex_cover(g)
        s = solution_from_cover(m, cover)
        assert len(s) == len(cover) + len(g.edges)
        assert claim1_family(m).is_hit_by(s)
        assert is_feasible(m.instance(), s)
        # no w vertices by construction, so normalization fixes it
        assert normalize_solution(m, s) == s
    with pytest.raises(InputError):
        solution_from_cover(build_gadget(CATALOG["K4"]), {0})  # not a cover


def test_normalize_removes_w_vertices():
    m = build_gadget(CATALOG["K4"])
    fam = claim1_family(m)
    wx, wm, wy, zx, zy = m.edge_index[m.source_edges()[0]]
    base = solution_from_cover(m, exact_vertex_cover(m.source))
    s = set(base) | {wx, wm, wy}
    norm = normalize_solution(m, s)
    assert len(norm) <= len(s)
    assert fam.is_hit_by(norm)
    kinds = {m.roles[v][0] for v in norm}
    assert not kinds & {"w_side", "w_mid"}
    with pytest.raises(InputError):
        normalize_solution(m, set())  # infeasible input


def test_extract_cover_round_trip():
    rng = random.Random(77)
    for name in ("K4", "prism"):
        g = CATALOG[name]
        m = build_gadget(g)
        inst = m.instance()
        tau = len(exact_vertex_cover(g))
        base = solution_from_cover(m, exact_vertex_cover(g))
        # optimal solutions fold back to optimal covers
        cover = extract_vertex_cover(m, base)
        assert len(cover) <= len(base) - len(g.edges) == tau
        # sloppy feasible supersets still fold within the bound
        for _ in range(15):
            s = set(base) | {
                v for v in range(m.gadget.n) if rng.random() < 0.3
            }
            c = extract_vertex_cover(m, s)
            assert len(c) <= len(s) - len(g.edges)
            assert all(u in c or v in c for u, v in g.edges)
    m = build_gadget(CATALOG["K4"])
    big = extract_vertex_cover(m, frozenset(range(m.gadget.n)))
    assert len(big) <= 34 - 6


def test_lemma1_identity_catalog():
    for name, g in CATALOG.items():
        m = build_gadget(g)
        tau = len(exact_vertex_cover(g))
        opt = len(min_hitting_set(claim1_family(m), range(m.gadget.n)))
        assert opt == tau + len(g.edges), name


def test_bipartite_variant():
    g = CATALOG["K4"]
    for k in (1, 2):
        m = build_bipartite_gadget(g, k)
        steps = 2 * k + 1
        assert m.gadget.n == 34 + steps * 60
        report = structural_checks(m.gadget)
        assert report.is_bipartite
        assert report.girth > k
        assert report.max_degree == 5
        assert set(m.requirements) == {0, 3, 4}
        counts = Counter(m.requirements)
        assert counts[4] == 12 and counts[3] == 6


def test_bipartite_claim1_and_extraction():
    g = CATALOG["K4"]
    m = build_bipartite_gadget(g, 1)
    fam = claim1_family(m)
    assert len(fam.sets) == 18
    inst = m.instance()
    cover = exact_vertex_cover(g)
    s = solution_from_cover(m, cover)
    assert fam.is_hit_by(s)
    assert is_feasible(inst, s)  # flow agrees on the subdivided instance
    c = extract_vertex_cover(m, s)
    assert len(c) <= len(s) - len(g.edges)
    assert all(u in c or v in c for u, v in g.edges)
    # hitting sets of the absorbed family are feasible by flow too
    hs = min_hitting_set(fam, range(m.gadget.n))
    assert is_feasible(inst, hs)
    assert len(hs) == len(exact_vertex_cover(g)) + len(g.edges)


def test_exact_vertex_cover():
    assert len(exact_vertex_cover(CATALOG["K4"])) == 3
    assert len(exact_vertex_cover(CATALOG["prism"])) == 4
    assert exact_vertex_cover(Graph(3, [])) == frozenset()
    with pytest.raises(SizeLimitError):
        exact_vertex_cover(Graph(30, []))
    rng = random.Random(55)
    for trial in range(25):
        g = gen_random_connected(rng.randint(1, 9), 0.4, seed=trial)
        c = exact_vertex_cover(g)
        assert all(u in c or v in c for u, v in g.edges)
        assert len(c) == min_vertex_cover_naive(g)
