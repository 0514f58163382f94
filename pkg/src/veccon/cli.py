"""Command-line interface.

Exit codes: 0 success / feasible, 1 infeasible solution, 2 parse error,
3 violated precondition or dispatch error.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import fileio
from .approx import greedy
from .block_solver import fsveccon, is_block_cactus, solve_block_cactus
from .errors import InputError, ParseError, VecconError
from .fans import is_k_linked, validate_cut_witness, validate_fan
from .gadgets import build_bipartite_gadget, build_gadget, extract_vertex_cover
from .generators import (
    PRNG_TAG,
    cubic_catalog,
    gen_block_cactus,
    gen_block_graph,
    gen_random_connected,
    gen_requirements,
)
from .graph import is_connected
from .instance import Instance
from .lowreq import solve_lowreq
from .oracle import (
    brute_cap,
    brute_force_min,
    solve_via_hitting,
    violating_family,
)

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3

ALGOS = ("auto", "exact", "block", "lowreq", "greedy", "brute", "brute-hitting")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _dispatch(inst: Instance, algo: str) -> tuple[str, frozenset[int]]:
    if algo == "auto":
        if is_connected(inst.graph) and is_block_cactus(inst.graph):
            return "block", fsveccon(inst)
        if not inst.free_set and all(r <= 2 for r in inst.requirements):
            return "lowreq", solve_lowreq(inst)
        if inst.graph.n <= brute_cap():
            return "brute", brute_force_min(inst)
        print(
            "c warning: no exact algorithm applies at this size, "
            "falling back to the greedy heuristic",
            file=sys.stderr,
        )
        return "greedy", greedy(inst)
    if algo == "exact":
        return algo, fsveccon(inst)
    if algo == "block":
        return algo, solve_block_cactus(inst)
    if algo == "lowreq":
        return algo, solve_lowreq(inst)
    if algo == "greedy":
        return algo, greedy(inst)
    if algo == "brute":
        return algo, brute_force_min(inst)
    if algo == "brute-hitting":
        return algo, solve_via_hitting(inst)
    raise InputError(f"unknown algorithm {algo!r}")


def cmd_solve(args) -> int:
    inst = fileio.parse_instance(_read(args.instance))
    t0 = time.perf_counter()
    used, sol = _dispatch(inst, args.algo)
    elapsed = time.perf_counter() - t0
    comments = [
        f"algo={used} n={inst.graph.n} m={len(inst.graph.edges)} "
        f"time={elapsed:.3f}s"
    ]
    if args.certify:
        targets = sol | inst.free_set
        for v in range(inst.graph.n):
            rv = inst.requirements[v]
            if v in sol or rv == 0:
                continue
            ok, cert = is_k_linked(inst.graph, v, targets, rv)
            if not ok:
                raise AssertionError(f"solver output leaves vertex {v + 1} unserved")
            validate_fan(inst.graph, v, targets, cert, rv)
            pretty = "; ".join(
                "-".join(str(x + 1) for x in path) for path in cert.paths
            )
            comments.append(f"fan {v + 1}: {pretty}")
    _write(args.out, fileio.serialize_solution(sol, comments))
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = fileio.parse_instance(_read(args.instance))
    sol = fileio.parse_solution(_read(args.solution), inst.graph.n)
    targets = sol | inst.free_set
    for v in range(inst.graph.n):
        if v in sol:
            continue
        rv = inst.requirements[v]
        if rv == 0:
            continue
        ok, cert = is_k_linked(inst.graph, v, targets, rv)
        if not ok:
            validate_cut_witness(inst.graph, v, targets, cert, rv)
            sep = " ".join(str(x + 1) for x in sorted(cert.separator))
            print(f"infeasible: vertex {v + 1} needs {rv} disjoint paths;")
            print(f"separator of size {len(cert.separator)}: {sep}")
            return EXIT_INFEASIBLE
    print("feasible")
    return EXIT_OK


def cmd_reduce(args) -> int:
    inst = fileio.parse_instance(_read(args.graph))
    if any(inst.requirements) or inst.free_set:
        print("c note: requirement/free lines in the source file are ignored",
              file=sys.stderr)
    if args.bipartite:
        mapping = build_bipartite_gadget(inst.graph, args.bipartite)
    else:
        mapping = build_gadget(inst.graph)
    out_inst = args.out_instance or _derived(args.graph, ".gadget.vcn")
    out_map = args.out_mapping or _derived(args.graph, ".mapping")
    _write(out_inst, fileio.serialize_instance(
        mapping.instance(),
        [f"gadget of {Path(args.graph).name}"
         + (f" subdivided {mapping.subdivision_steps}x" if args.bipartite else "")],
    ))
    _write(out_map, fileio.serialize_mapping(mapping))
    print(f"wrote {out_inst} and {out_map}")
    return EXIT_OK


def _derived(path: str, suffix: str) -> str:
    p = Path(path)
    return str(p.with_suffix(suffix))


def cmd_extract_cover(args) -> int:
    mapping = fileio.parse_mapping(_read(args.mapping))
    sol = fileio.parse_solution(_read(args.solution), mapping.gadget.n)
    cover = extract_vertex_cover(mapping, sol)
    _write(args.out, fileio.serialize_solution(
        cover, [f"vertex cover extracted from a size-{len(sol)} solution"]
    ))
    return EXIT_OK


def cmd_hypergraph(args) -> int:
    inst = fileio.parse_instance(_read(args.instance))
    if inst.free_set:
        raise InputError("the violating-set characterization needs an empty free set")
    fam = violating_family(
        inst.graph,
        inst.requirements,
        minimal_only=args.minimal,
        max_size=args.max_size,
    )
    _write(args.out, fileio.serialize_family(fam))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "block":
        g = gen_block_graph(args.n, args.seed, args.clique_max)
    elif args.kind == "cactus":
        g = gen_block_cactus(args.n, args.seed)
    elif args.kind == "random":
        g = gen_random_connected(args.n, args.p, args.seed)
    else:
        names = dict(cubic_catalog())
        if args.name not in names:
            raise InputError(f"unknown catalog graph {args.name!r}")
        g = names[args.name]
    inst = gen_requirements(g, args.r_max, args.seed + 1, args.free_fraction)
    comments = [
        f"generator={args.kind} prng={PRNG_TAG} seed={args.seed} "
        f"r_max={args.r_max} free_fraction={args.free_fraction}"
    ]
    _write(args.out, fileio.serialize_instance(inst, comments))
    return EXIT_OK


def cmd_dot(args) -> int:
    inst = fileio.parse_instance(_read(args.instance))
    sol = None
    if args.solution:
        sol = fileio.parse_solution(_read(args.solution), inst.graph.n)
    _write(args.out, fileio.to_dot(inst, sol))
    return EXIT_OK


def cmd_bench(args) -> int:
    paths = sorted(
        p for p in Path(args.corpus).iterdir()
        if p.is_file() and p.suffix == ".vcn"
    )
    if not paths:
        raise InputError(f"no .vcn instances under {args.corpus}")
    algos = args.algo or ["auto", "greedy"]
    out = sys.stdout if args.out in (None, "-") else open(args.out, "w")
    writer = csv.writer(out)
    writer.writerow(
        ["instance", "n", "m", "r_max", "algo", "size", "optimal?", "wall-time"]
    )
    lock = threading.Lock()

    def run_one(path: Path):
        inst = fileio.parse_instance(path.read_text())
        opt = None
        if inst.graph.n <= brute_cap():
            opt = len(brute_force_min(inst))
        for algo in algos:
            t0 = time.perf_counter()
            try:
                _, sol = _dispatch(inst, algo)
                size, note = len(sol), ""
            except VecconError as e:
                size, note = "", f"error: {e}"
            elapsed = time.perf_counter() - t0
            optimal = "" if opt is None or note else ("yes" if size == opt else "no")
            with lock:
                writer.writerow(
                    [path.name, inst.graph.n, len(inst.graph.edges),
                     inst.r_max, algo, size, optimal, f"{elapsed:.4f}"]
                )
                out.flush()

    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        list(pool.map(run_one, paths))
    if out is not sys.stdout:
        out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="veccon",
        description="Exact and approximate vector connectivity solvers",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("instance")
    p.add_argument("--algo", choices=ALGOS, default="auto")
    p.add_argument("--certify", action="store_true",
                   help="attach a validated fan per non-solution vertex")
    p.add_argument("--out", default=None, help="solution file (default stdout)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a solution file against an instance")
    p.add_argument("instance")
    p.add_argument("solution")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="build the hardness gadget of a cubic graph")
    p.add_argument("graph", help="instance file; only the graph part is used")
    p.add_argument("--bipartite", type=int, metavar="K", default=0,
                   help="subdivide 2K+1 times for a bipartite, girth>K gadget")
    p.add_argument("--out-instance", default=None)
    p.add_argument("--out-mapping", default=None)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("extract-cover",
                       help="fold a gadget solution back to a vertex cover")
    p.add_argument("mapping")
    p.add_argument("solution")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_extract_cover)

    p = sub.add_parser("hypergraph", help="emit the violating-set family")
    p.add_argument("instance")
    p.add_argument("--minimal", action="store_true")
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_hypergraph)

    p = sub.add_parser("gen", help="generate a seeded instance")
    p.add_argument("kind", choices=("block", "cactus", "random", "cubic"))
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--clique-max", type=int, default=4)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--r-max", type=int, default=4)
    p.add_argument("--free-fraction", type=float, default=0.0)
    p.add_argument("--name", default="K4", help="catalog graph for kind=cubic")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("dot", help="render an instance (and solution) as DOT")
    p.add_argument("instance")
    p.add_argument("--solution", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("bench", help="run solvers over a corpus directory")
    p.add_argument("corpus")
    p.add_argument("--algo", action="append", choices=ALGOS, default=None)
    p.add_argument("--jobs", type=int, default=min(4, os.cpu_count() or 1))
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except VecconError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
