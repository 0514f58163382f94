"""Line-oriented text formats, DIMACS style, 1-indexed externally.

Instance files::

    c free-form comment
    p vcn <n> <m>
    e <u> <v>        one line per edge
    r <v> <k>        nonzero requirements only (absent means 0)
    f <v>            free vertices

Solution files carry ``s <size>`` then ``v <id>`` lines.  Mapping files
embed the source graph plus a ``map <subdivision>`` header and ``role``
lines; the gadget is rebuilt from the source on load and the roles are
cross-checked against the file.
"""

from __future__ import annotations

from typing import Iterable

from .errors import ParseError
from .gadgets import GadgetMapping, build_bipartite_gadget, build_gadget
from .graph import Graph
from .instance import Instance
from .oracle import ViolatingFamily

__all__ = [
    "parse_instance",
    "serialize_instance",
    "parse_solution",
    "serialize_solution",
    "parse_mapping",
    "serialize_mapping",
    "serialize_family",
    "to_dot",
]


def _parse_graph_lines(text: str, kind: str):
    """Shared p/e/r/f scanner; returns (n, edges, reqs, free, extras)."""
    n = m = None
    edges: list[tuple[int, int]] = []
    seen_edges = set()
    reqs: dict[int, int] = {}
    free: set[int] = set()
    extras: list[tuple[int, list[str]]] = []

    def vertex(tok: str, ln: int) -> int:
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"bad vertex id {tok!r}", ln) from None
        if n is None:
            raise ParseError("vertex line before the p header", ln)
        if not (1 <= v <= n):
            raise ParseError(f"vertex id {v} out of range 1..{n}", ln)
        return v - 1

    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tok = line.split()
        if tok[0] == "p":
            if n is not None:
                raise ParseError("duplicate p header", ln)
            if len(tok) != 4 or tok[1] != kind:
                raise ParseError(f"expected 'p {kind} <n> <m>'", ln)
            try:
                n, m = int(tok[2]), int(tok[3])
            except ValueError:
                raise ParseError("non-numeric sizes in p header", ln) from None
            if n < 0 or m < 0:
                raise ParseError("negative sizes in p header", ln)
        elif tok[0] == "e":
            if len(tok) != 3:
                raise ParseError("expected 'e <u> <v>'", ln)
            u, v = vertex(tok[1], ln), vertex(tok[2], ln)
            if u == v:
                raise ParseError("self-loop", ln)
            key = (u, v) if u < v else (v, u)
            if key in seen_edges:
                raise ParseError(f"duplicate edge {u + 1} {v + 1}", ln)
            seen_edges.add(key)
            edges.append(key)
        elif tok[0] == "r":
            if len(tok) != 3:
                raise ParseError("expected 'r <v> <k>'", ln)
            v = vertex(tok[1], ln)
            try:
                k = int(tok[2])
            except ValueError:
                raise ParseError(f"bad requirement {tok[2]!r}", ln) from None
            if k < 0:
                raise ParseError("negative requirement", ln)
            if v in reqs:
                raise ParseError(f"duplicate requirement for vertex {v + 1}", ln)
            reqs[v] = k
        elif tok[0] == "f":
            if len(tok) != 2:
                raise ParseError("expected 'f <v>'", ln)
            free.add(vertex(tok[1], ln))
        else:
            extras.append((ln, tok))
    if n is None:
        raise ParseError("missing p header")
    if m != len(edges):
        raise ParseError(f"p header announces {m} edges, found {len(edges)}")
    return n, edges, reqs, free, extras


def parse_instance(text: str) -> Instance:
    n, edges, reqs, free, extras = _parse_graph_lines(text, "vcn")
    if extras:
        ln, tok = extras[0]
        raise ParseError(f"unknown record {tok[0]!r}", ln)
    r = [0] * n
    for v, k in reqs.items():
        r[v] = k
    return Instance(Graph(n, edges), tuple(r), frozenset(free))


def serialize_instance(inst: Instance, comments: Iterable[str] = ()) -> str:
    g = inst.graph
    out = [f"c {c}" for c in comments]
    out.append(f"p vcn {g.n} {len(g.edges)}")
    for u, v in sorted(g.edges):
        out.append(f"e {u + 1} {v + 1}")
    for v, k in enumerate(inst.requirements):
        if k:
            out.append(f"r {v + 1} {k}")
    for v in sorted(inst.free_set):
        out.append(f"f {v + 1}")
    return "\n".join(out) + "\n"


def parse_solution(text: str, n: int) -> frozenset[int]:
    size = None
    verts: set[int] = set()
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tok = line.split()
        if tok[0] == "s":
            if size is not None:
                raise ParseError("duplicate s line", ln)
            try:
                size = int(tok[1])
            except (IndexError, ValueError):
                raise ParseError("expected 's <size>'", ln) from None
        elif tok[0] == "v":
            try:
                v = int(tok[1])
            except (IndexError, ValueError):
                raise ParseError("expected 'v <id>'", ln) from None
            if not (1 <= v <= n):
                raise ParseError(f"vertex id {v} out of range 1..{n}", ln)
            verts.add(v - 1)
        else:
            raise ParseError(f"unknown record {tok[0]!r}", ln)
    if size is None:
        raise ParseError("missing s line")
    if size != len(verts):
        raise ParseError(f"s line says {size}, found {len(verts)} vertices")
    return frozenset(verts)


def serialize_solution(s: Iterable[int], comments: Iterable[str] = ()) -> str:
    verts = sorted(s)
    out = [f"c {c}" for c in comments]
    out.append(f"s {len(verts)}")
    out += [f"v {v + 1}" for v in verts]
    return "\n".join(out) + "\n"


def serialize_mapping(m: GadgetMapping) -> str:
    src = m.source
    out = ["c gadget mapping: source graph plus per-vertex roles"]
    out.append(f"map {m.subdivision_steps}")
    out.append(f"p vcn {src.n} {len(src.edges)}")
    for u, v in sorted(src.edges):
        out.append(f"e {u + 1} {v + 1}")
    for gid, role in enumerate(m.roles):
        if role[0] == "original":
            out.append(f"role {gid + 1} original {role[1] + 1}")
        elif role[0] == "w_side":
            (x, (a, b)) = role[1], role[2]
            out.append(f"role {gid + 1} w_side {x + 1} {a + 1} {b + 1}")
        elif role[0] == "w_mid":
            a, b = role[1]
            out.append(f"role {gid + 1} w_mid {a + 1} {b + 1}")
        elif role[0] == "z_side":
            (x, (a, b)) = role[1], role[2]
            out.append(f"role {gid + 1} z_side {x + 1} {a + 1} {b + 1}")
        else:
            out.append(f"role {gid + 1} subdivision {role[1] + 1}")
    return "\n".join(out) + "\n"


def parse_mapping(text: str) -> GadgetMapping:
    """Rebuild the gadget from the embedded source graph and verify that
    the recorded roles match the deterministic construction."""
    steps = None
    role_lines: list[tuple[int, list[str]]] = []
    graph_lines: list[str] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tok = line.split()
        if tok[0] == "map":
            if steps is not None:
                raise ParseError("duplicate map header", ln)
            try:
                steps = int(tok[1])
            except (IndexError, ValueError):
                raise ParseError("expected 'map <steps>'", ln) from None
        elif tok[0] == "role":
            role_lines.append((ln, tok))
        else:
            graph_lines.append(raw)
    if steps is None:
        raise ParseError("missing map header")
    n, edges, reqs, free, extras = _parse_graph_lines("\n".join(graph_lines), "vcn")
    if reqs or free or extras:
        raise ParseError("mapping source section must contain only p/e lines")
    source = Graph(n, edges)
    if steps == 0:
        m = build_gadget(source)
    else:
        if steps % 2 == 0 or steps < 3:
            raise ParseError(f"subdivision count {steps} is not of the form 2k+1")
        m = build_bipartite_gadget(source, (steps - 1) // 2)
    for ln, tok in role_lines:
        try:
            gid = int(tok[1]) - 1
        except (IndexError, ValueError):
            raise ParseError("bad role line", ln) from None
        if not (0 <= gid < m.gadget.n):
            raise ParseError(f"role vertex {tok[1]} out of range", ln)
        role = m.roles[gid]
        kind = tok[2] if len(tok) > 2 else "?"
        if role[0] != kind:
            raise ParseError(
                f"role mismatch for vertex {gid + 1}: file says {kind}, "
                f"construction says {role[0]}",
                ln,
            )
    return m


def serialize_family(fam: ViolatingFamily, comments: Iterable[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"p family {len(fam.sets)} {'minimal' if fam.minimal_only else 'all'}")
    for x in fam.sets:
        out.append("h " + " ".join(str(v + 1) for v in sorted(x)))
    return "\n".join(out) + "\n"


def to_dot(inst: Instance, solution: Iterable[int] | None = None) -> str:
    """GraphViz rendering: requirement labels, doubled circles for free
    vertices, filled nodes for the solution."""
    sol = set(solution or ())
    out = ["graph veccon {", "  node [shape=circle];"]
    for v in range(inst.graph.n):
        attrs = [f'label="{v + 1}:r{inst.requirements[v]}"']
        if v in inst.free_set:
            attrs.append("shape=doublecircle")
        if v in sol:
            attrs.append('style=filled fillcolor="gray80"')
        out.append(f"  v{v + 1} [{' '.join(attrs)}];")
    for u, v in sorted(inst.graph.edges):
        out.append(f"  v{u + 1} -- v{v + 1};")
    out.append("}")
    return "\n".join(out) + "\n"
