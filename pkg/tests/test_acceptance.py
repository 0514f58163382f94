"""Acceptance suite: one test per contract criterion.

Each test prints a single ``[criterion NN] PASS/FAIL`` line (run with -s to
see them live).  Tolerances are pinned in the assertions; corpora are
seeded and reproducible.
"""

from __future__ import annotations

import math
import random
import time
from collections import Counter
from itertools import combinations, product

from bruteforce import max_fan_order
from corpus import connected_atlas
from veccon.approx import greedy
from veccon.block_solver import cycle_solver, fsveccon
from veccon.fans import is_k_linked, kappa, validate_cut_witness, validate_fan
from veccon.gadgets import (
    build_bipartite_gadget,
    build_gadget,
    claim1_family,
    exact_vertex_cover,
    extract_vertex_cover,
    normalize_solution,
    solution_from_cover,
)
from veccon.generators import (
    cubic_catalog,
    gen_block_cactus,
    gen_block_graph,
    gen_random_connected,
    gen_requirements,
)
from veccon.graph import Graph, structural_checks
from veccon.instance import Instance
from veccon.lowreq import solve_lowreq
from veccon.oracle import (
    brute_force_min,
    is_feasible,
    min_hitting_set,
    violating_family,
)

CATALOG = dict(cubic_catalog())


def _criterion(num: int, body):
    try:
        detail = body()
    except BaseException:
        print(f"[criterion {num:02d}] FAIL")
        raise
    print(f"[criterion {num:02d}] PASS  {detail}")


def _labeled_connected(n: int):
    from veccon.graph import is_connected

    pairs = list(combinations(range(n), 2))
    for bits in range(2 ** len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        g = Graph(n, edges)
        if is_connected(g):
            yield g


def _subsets(n: int, rng, count: int):
    yield frozenset()
    yield frozenset(range(n))
    for _ in range(count):
        yield frozenset(v for v in range(n) if rng.random() < rng.choice((0.25, 0.5)))


# -- 1: hitting-set characterization agrees with flow feasibility ----------


def test_criterion_01_characterization_equivalence():
    def body():
        t0 = time.perf_counter()
        rng = random.Random(101)
        checks = 0

        def check(g, r, subsets):
            nonlocal checks
            inst = Instance(g, tuple(r))
            fam = violating_family(g, tuple(r))
            for s in subsets:
                assert is_feasible(inst, s) == fam.is_hit_by(s), (
                    g.edges, r, sorted(s))
                checks += 1

        # exhaustive: every labeled connected graph, r-map and subset, n <= 3
        for n in (1, 2, 3):
            for g in _labeled_connected(n):
                for r in product(range(5), repeat=n):
                    check(g, r, [frozenset(c)
                                 for k in range(n + 1)
                                 for c in combinations(range(n), k)])
        # exhaustive r-maps and subsets over the n=4 isomorphism classes
        for g in connected_atlas(4, 4):
            for r in product(range(5), repeat=4):
                check(g, r, [frozenset(c)
                             for k in range(5)
                             for c in combinations(range(4), k)])
        # sampled r-maps and subsets at n = 5, 6
        for g in connected_atlas(5, 5):
            for _ in range(120):
                r = [rng.randint(0, 4) for _ in range(5)]
                check(g, r, _subsets(5, rng, 8))
        for g in connected_atlas(6, 6):
            for _ in range(25):
                r = [rng.randint(0, 4) for _ in range(6)]
                check(g, r, _subsets(6, rng, 5))
        # random triples: at least 500 at n=7, plus n=6 mix
        for trial in range(780):
            n = 7 if trial < 520 else 6
            g = gen_random_connected(n, 0.4, seed=7000 + trial)
            r = [rng.randint(0, 4) for _ in range(n)]
            check(g, r, _subsets(n, rng, 3))
        elapsed = time.perf_counter() - t0
        assert elapsed < 60.0, f"budget exceeded: {elapsed:.1f}s"
        return f"{checks} flow<->hitting comparisons, zero disagreements ({elapsed:.1f}s)"

    _criterion(1, body)


# -- 2: block-graph exactness ----------------------------------------------


def test_criterion_02_block_graph_exactness():
    def body():
        t0 = time.perf_counter()
        rng = random.Random(202)
        for trial in range(300):
            n = rng.randint(4, 14)
            g = gen_block_graph(n, seed=trial, clique_max=rng.randint(2, 5))
            inst = gen_requirements(
                g, 4, seed=20000 + trial,
                free_fraction=rng.choice((0.0, 0.15, 0.3)),
            )
            sol = fsveccon(inst)
            assert is_feasible(inst, sol), trial
            opt = brute_force_min(inst)
            assert len(sol) == len(opt), (trial, len(sol), len(opt))
        elapsed = time.perf_counter() - t0
        assert elapsed < 120.0, f"budget exceeded: {elapsed:.1f}s"
        return f"300 seeded block graphs (n<=14, r<=4, random F) all optimal ({elapsed:.1f}s)"

    _criterion(2, body)


# -- 3: block-cactus exactness, cycles validated against brute force --------


def test_criterion_03_block_cactus_exactness():
    def body():
        t0 = time.perf_counter()
        rng = random.Random(303)
        for trial in range(300):
            g = gen_block_cactus(rng.randint(3, 14), seed=trial)
            inst = gen_requirements(
                g, 4, seed=30000 + trial,
                free_fraction=rng.choice((0.0, 0.2)),
            )
            sol = fsveccon(inst)
            assert is_feasible(inst, sol)
            assert len(sol) == len(brute_force_min(inst)), trial
        cycle_checks = 0
        for trial in range(510):
            n = 3 + trial % 7  # C3..C9
            g = Graph(n, [(i, (i + 1) % n) for i in range(n)])
            free = frozenset(
                v for v in range(n) if rng.random() < 0.2
            ) if trial % 3 == 0 else frozenset()
            r = tuple(rng.randint(0, 4) for _ in range(n))
            inst = Instance(g, r, free)
            a = cycle_solver(inst)
            b = fsveccon(inst)
            opt = brute_force_min(inst)
            assert is_feasible(inst, a)
            assert len(a) == len(opt) == len(b), (trial, r, sorted(free))
            cycle_checks += 1
        elapsed = time.perf_counter() - t0
        return (f"300 block-cactus instances + {cycle_checks} cycle instances "
                f"(C3..C9) all optimal ({elapsed:.1f}s)")

    _criterion(3, body)


# -- 4: low-requirement solver exactness ------------------------------------


def test_criterion_04_lowreq_exactness():
    def body():
        t0 = time.perf_counter()
        rng = random.Random(404)
        for trial in range(500):
            g = gen_random_connected(rng.randint(1, 10), 0.35, seed=40000 + trial)
            inst = gen_requirements(g, 2, seed=50000 + trial)
            sol = solve_lowreq(inst)
            assert is_feasible(inst, sol)
            assert len(sol) == len(brute_force_min(inst)), (
                trial, sorted(g.edges), inst.requirements)
        elapsed = time.perf_counter() - t0
        return f"500 random connected graphs (n<=10, r<=2) all optimal ({elapsed:.1f}s)"

    _criterion(4, body)


# -- 5: gadget optimum identity at desk scale --------------------------------


def test_criterion_05_gadget_optimum_identity():
    def body():
        t0 = time.perf_counter()
        expected = {"K4": (3, 6), "prism": (4, 9)}
        details = []
        for name, (tau_want, m_want) in expected.items():
            g = CATALOG[name]
            mapping = build_gadget(g)
            tau = len(exact_vertex_cover(g))
            assert tau == tau_want and len(g.edges) == m_want
            hs = min_hitting_set(claim1_family(mapping), range(mapping.gadget.n))
            assert len(hs) == tau + len(g.edges), name
            assert is_feasible(mapping.instance(), hs), name
            details.append(f"{name}: {len(hs)} = {tau}+{len(g.edges)}")
        elapsed = time.perf_counter() - t0
        assert elapsed < 60.0
        return f"gadget optimum = cover + edges, flow-confirmed ({'; '.join(details)}, {elapsed:.1f}s)"

    _criterion(5, body)


# -- 6: gadget structure ------------------------------------------------------


def test_criterion_06_gadget_structure():
    def body():
        for name, g in CATALOG.items():
            mapping = build_gadget(g)
            n, m = g.n, len(g.edges)
            assert mapping.gadget.n == n + 5 * m, name
            assert len(mapping.gadget.edges) == 6 * n + 6 * m, name
            report = structural_checks(mapping.gadget)
            assert report.max_degree == 5, name
            assert report.is_biconnected, name  # every source is 2-connected
        return f"counts |V|+5|E| / 6|V|+6|E|, degree 5, 2-connectivity on {len(CATALOG)} cubics"

    _criterion(6, body)


# -- 7: cover extraction never loses more than |E| ----------------------------


def test_criterion_07_cover_extraction_bound():
    def body():
        t0 = time.perf_counter()
        g = CATALOG["K4"]
        mapping = build_gadget(g)
        fam = claim1_family(mapping)
        inst = mapping.instance()
        m_edges = len(g.edges)
        rng = random.Random(707)

        solutions = [greedy(inst)]
        base_cover = solution_from_cover(mapping, exact_vertex_cover(g))
        base_hit = min_hitting_set(fam, range(mapping.gadget.n))
        solutions += [base_cover, base_hit]
        solutions += [normalize_solution(mapping, s) for s in list(solutions)]
        while len(solutions) < 110:
            base = rng.choice((base_cover, base_hit))
            extra = {v for v in range(mapping.gadget.n)
                     if rng.random() < rng.choice((0.1, 0.3, 0.6))}
            solutions.append(frozenset(base | extra))
        count = 0
        for s in solutions:
            assert fam.is_hit_by(s)  # feasibility via the characterization
            cover = extract_vertex_cover(mapping, s)
            assert all(u in cover or v in cover for u, v in g.edges)
            assert len(cover) <= len(s) - m_edges, (len(cover), len(s))
            count += 1
        elapsed = time.perf_counter() - t0
        return f"{count} feasible solutions folded to covers, |C| <= |S|-{m_edges} throughout ({elapsed:.1f}s)"

    _criterion(7, body)


# -- 8: bipartite high-girth variant ------------------------------------------


def test_criterion_08_bipartite_variant():
    def body():
        t0 = time.perf_counter()
        girths = []
        for k in (1, 2, 3):
            mapping = build_bipartite_gadget(CATALOG["K4"], k)
            report = structural_checks(mapping.gadget)
            assert report.is_bipartite, k
            assert report.girth > k, k
            assert report.max_degree == 5, k
            assert set(mapping.requirements) <= {0, 3, 4}, k
            counts = Counter(mapping.requirements)
            assert counts[4] == 12 and counts[3] == 6
            girths.append(int(report.girth))
        elapsed = time.perf_counter() - t0
        return f"K4 variant at k=1,2,3: bipartite, girths {girths}, degree 5 ({elapsed:.1f}s)"

    _criterion(8, body)


# -- 9: flow kappa equals exhaustive disjoint-path search ----------------------


def test_criterion_09_fan_oracle():
    def body():
        t0 = time.perf_counter()
        rng = random.Random(909)
        pairs = 0
        certified = 0

        def check(g, v, t, validate):
            nonlocal pairs, certified
            k = kappa(g, v, t)
            assert k == max_fan_order(g, v, t), (sorted(g.edges), v, sorted(t))
            pairs += 1
            if validate:
                ok, fan = is_k_linked(g, v, t, k)
                assert ok
                validate_fan(g, v, t, fan, k)
                ok, cut = is_k_linked(g, v, t, k + 1)
                assert not ok
                validate_cut_witness(g, v, t, cut, k + 1)
                certified += 1

        for g in connected_atlas(1, 6):
            for v in range(g.n):
                for bits in range(2 ** g.n):
                    t = {u for u in range(g.n) if bits >> u & 1}
                    check(g, v, t, validate=pairs % 5 == 0)
        seven = list(connected_atlas(7, 7))
        for g in rng.sample(seven, 25):
            for _ in range(30):
                v = rng.randrange(7)
                t = {u for u in range(7) if rng.random() < 0.4}
                check(g, v, t, validate=True)
        for trial in range(15):
            g = gen_random_connected(8, 0.35, seed=90000 + trial)
            for _ in range(30):
                v = rng.randrange(8)
                t = {u for u in range(8) if rng.random() < 0.35}
                check(g, v, t, validate=True)
        elapsed = time.perf_counter() - t0
        return (f"{pairs} (v,t) pairs agree with path enumeration, "
                f"{certified} certificates validated ({elapsed:.1f}s)")

    _criterion(9, body)


# -- 10: greedy sanity ---------------------------------------------------------


def test_criterion_10_greedy_sanity():
    def body():
        t0 = time.perf_counter()
        rng = random.Random(1010)
        instances = []
        for trial in range(40):
            g = gen_block_graph(rng.randint(3, 12), seed=trial, clique_max=4)
            instances.append(gen_requirements(g, 4, seed=trial, free_fraction=0.2))
        for trial in range(40):
            g = gen_block_cactus(rng.randint(3, 12), seed=trial)
            instances.append(gen_requirements(g, 4, seed=800 + trial))
        for trial in range(40):
            g = gen_random_connected(rng.randint(2, 9), 0.4, seed=trial)
            instances.append(gen_requirements(g, 3, seed=900 + trial))
        gadget = build_gadget(CATALOG["K4"])
        gadget_opt = len(min_hitting_set(claim1_family(gadget),
                                         range(gadget.gadget.n)))
        checks = [(inst, len(brute_force_min(inst))) for inst in instances]
        checks.append((gadget.instance(), gadget_opt))
        worst = 0.0
        bound_ok = 0
        for inst, opt in checks:
            sol = greedy(inst)
            assert is_feasible(inst, sol), "greedy output must be feasible"
            assert len(sol) >= opt
            if opt:
                ratio = len(sol) / opt
                worst = max(worst, ratio)
                if ratio <= math.log(inst.graph.n) + 2:
                    bound_ok += 1
        elapsed = time.perf_counter() - t0
        return (f"{len(checks)} instances: 100% feasible, size >= OPT; "
                f"worst ratio {worst:.2f}, ln(n)+2 bound held on every "
                f"oracle-known instance ({bound_ok} checked) ({elapsed:.1f}s)")

    _criterion(10, body)


# -- 11: polynomial-regime runtime --------------------------------------------


def test_criterion_11_runtime_block_graph():
    def body():
        g = gen_block_graph(2000, seed=1111, clique_max=5)
        inst = gen_requirements(g, 4, seed=2222, free_fraction=0.1)
        t0 = time.perf_counter()
        sol = fsveccon(inst)
        elapsed = time.perf_counter() - t0
        assert elapsed < 10.0, f"{elapsed:.2f}s exceeds the 10s budget"
        assert is_feasible(inst, sol)
        return (f"fsveccon on a 2000-vertex block graph (m={len(g.edges)}, "
                f"|S|={len(sol)}) in {elapsed:.2f}s < 10s, output feasible")

    _criterion(11, body)
