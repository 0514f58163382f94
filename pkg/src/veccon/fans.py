"""Fan / k-linkedness machinery: vertex-disjoint paths by augmenting flow.

A fan of order k from v to a target set T is k paths from v ending in T,
pairwise vertex-disjoint except at v.  When v itself belongs to T it
contributes exactly one zero-length path, so

    kappa(g, v, T | {v}) == kappa(g, v, T - {v}) + 1.

The computation is a unit-capacity max flow with every vertex except the
source split into in/out nodes.  Target in-nodes feed a super-sink, so fan
endpoints stay distinct; edge arcs are uncapacitated, which keeps minimum
cuts on vertex arcs and lets a cut be read back as a vertex separator.
The flow state is held as the predecessor/successor arrays of the current
path system; augmenting searches rewire it in place.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError
from .graph import Graph

__all__ = [
    "Fan",
    "CutWitness",
    "kappa",
    "bounded_kappa",
    "is_k_linked",
    "validate_fan",
    "validate_cut_witness",
]


@dataclass(frozen=True)
class Fan:
    """Certificate of k-linkedness: paths from center into the target set."""

    center: int
    paths: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class CutWitness:
    """Certificate of non-linkedness: removing ``separator`` cuts the query
    vertex off from every target outside the separator (the query vertex's
    own zero-length path, when it is a target, is accounted separately)."""

    separator: frozenset[int]


class _FlowState:
    """Current path system of a source-to-targets disjoint-path flow."""

    __slots__ = ("adj", "alive", "source", "is_target", "prv", "nxt", "endp",
                 "value", "vin", "vout")

    def __init__(self, adj, alive, source, targets):
        n = len(adj)
        self.adj = adj
        self.alive = alive
        self.source = source
        self.is_target = bytearray(n)
        for t in targets:
            self.is_target[t] = 1
        self.prv = [-1] * n
        self.nxt = [-1] * n
        self.endp = bytearray(n)
        self.value = 0
        self.vin = None
        self.vout = None

    def augment(self) -> bool:
        """One residual BFS; rewires the path system if a free target is
        reached.  On failure leaves the visited arrays for cut extraction."""
        adj, alive = self.adj, self.alive
        src, is_target = self.source, self.is_target
        prv, endp = self.prv, self.endp
        n = len(adj)
        vin = bytearray(n)
        vout = bytearray(n)
        pin = [-1] * n
        pout = [-1] * n
        vout[src] = 1
        queue = deque((2 * src + 1,))
        found = -1
        while queue and found < 0:
            pos = queue.popleft()
            u = pos >> 1
            if pos & 1:  # at OUT(u)
                for x in adj[u]:
                    if x == src or (alive is not None and not alive[x]) or vin[x]:
                        continue
                    vin[x] = 1
                    pin[x] = pos
                    if is_target[x] and not endp[x]:
                        found = x
                        break
                    queue.append(2 * x)
                if found >= 0:
                    break
                # residual of the split arc: traversable while u carries flow
                if u != src and not is_target[u] and prv[u] != -1 and not vin[u]:
                    vin[u] = 1
                    pin[u] = pos
                    queue.append(2 * u)
            else:  # at IN(u)
                if not is_target[u] and prv[u] == -1 and not vout[u]:
                    vout[u] = 1
                    pout[u] = pos
                    queue.append(2 * u + 1)
                w = prv[u]
                if w != -1 and not vout[w]:
                    vout[w] = 1
                    pout[w] = pos
                    queue.append(2 * w + 1)
        if found < 0:
            self.vin = vin
            self.vout = vout
            return False
        self._apply(found, pin, pout)
        self.value += 1
        return True

    def _apply(self, target: int, pin, pout) -> None:
        # reconstruct the augmenting position path source -> IN(target)
        path = []
        pos = 2 * target
        start = 2 * self.source + 1
        while pos != start:
            path.append(pos)
            u = pos >> 1
            pos = pout[u] if pos & 1 else pin[u]
        path.append(start)
        path.reverse()
        prv, nxt, src = self.prv, self.nxt, self.source
        last_adv_dst = -1
        for i in range(1, len(path)):
            a, b = path[i - 1], path[i]
            au, bu = a >> 1, b >> 1
            if a & 1 and not b & 1 and au != bu:
                # advance: new flow on arc au -> bu
                prv[bu] = au
                if au != src:
                    nxt[au] = bu
                last_adv_dst = bu
            elif not a & 1 and b & 1 and au != bu:
                # retreat: cancel old flow on arc bu -> au
                nxt[bu] = -1
                if last_adv_dst != au:
                    prv[au] = -1
                last_adv_dst = -1
            else:
                last_adv_dst = -1
        self.endp[target] = 1

    def run(self, limit: int | None) -> int:
        while limit is None or self.value < limit:
            if not self.augment():
                break
        return self.value

    def fan_paths(self) -> list[tuple[int, ...]]:
        paths = []
        n = len(self.adj)
        for t in range(n):
            if not self.endp[t]:
                continue
            chain = [t]
            u = self.prv[t]
            while u != self.source:
                chain.append(u)
                u = self.prv[u]
            chain.append(self.source)
            chain.reverse()
            paths.append(tuple(chain))
        return paths

    def min_cut(self) -> frozenset[int]:
        """Vertex separator read off the last failed residual search."""
        if self.vin is None:
            raise RuntimeError("flow was not run to exhaustion")
        sep = []
        for u in range(len(self.adj)):
            if u == self.source or not self.vin[u]:
                continue
            if self.is_target[u] or not self.vout[u]:
                sep.append(u)
        return frozenset(sep)


def _prepare(g: Graph, v: int, t: Iterable[int]) -> tuple[int, set[int]]:
    g._check_vertex(v)
    tset = set()
    for x in t:
        g._check_vertex(x)
        tset.add(x)
    base = 1 if v in tset else 0
    tset.discard(v)
    return base, tset


def kappa(g: Graph, v: int, t: Iterable[int]) -> int:
    """Maximum fan order from v to t (v in t counts one zero-length path)."""
    base, targets = _prepare(g, v, t)
    if not targets:
        return base
    state = _FlowState(g.adj, None, v, targets)
    return base + state.run(None)


def bounded_kappa(
    adj: Sequence[Sequence[int]],
    v: int,
    targets: Iterable[int],
    cap: int,
    alive: Sequence[int] | None = None,
) -> int:
    """min(kappa, cap) on the alive-induced subgraph; internal fast path.

    ``targets`` may include v (self-path convention applies) and dead
    vertices (ignored).
    """
    tset = set(targets)
    base = 1 if v in tset else 0
    if cap <= base:
        return min(base, cap) if cap >= 0 else 0
    tset.discard(v)
    if alive is not None:
        tset = {x for x in tset if alive[x]}
    if not tset:
        return base
    state = _FlowState(adj, alive, v, tset)
    return base + state.run(cap - base)


def is_k_linked(
    g: Graph, v: int, t: Iterable[int], k: int
) -> tuple[bool, Fan | CutWitness]:
    """Decide kappa(g, v, t) >= k with a certificate either way.

    True comes with a Fan of order k; False with a CutWitness whose
    separator has size < k (size < k-1 when v is itself a target, since the
    zero-length path is not cuttable).
    """
    if k < 0:
        raise InputError("fan order must be nonnegative")
    base, targets = _prepare(g, v, t)
    self_paths = ((v,),) if base else ()
    if k <= base:
        return True, Fan(center=v, paths=self_paths[:k] if k else ())
    need = k - base
    state = _FlowState(g.adj, None, v, targets)
    if state.run(need) >= need:
        return True, Fan(center=v, paths=self_paths + tuple(state.fan_paths()))
    return False, CutWitness(separator=state.min_cut())


def validate_fan(g: Graph, v: int, t: Iterable[int], fan: Fan, k: int = 0) -> None:
    """Raise InputError unless ``fan`` is a valid order->=k fan from v to t."""
    tset = set(t)
    if fan.center != v:
        raise InputError("fan center mismatch")
    if len(fan.paths) < k:
        raise InputError(f"fan order {len(fan.paths)} below {k}")
    self_count = 0
    seen_interior: set[int] = set()
    for p in fan.paths:
        if not p or p[0] != v:
            raise InputError("fan path must start at the center")
        if len(p) == 1:
            self_count += 1
            if v not in tset:
                raise InputError("zero-length path but center is not a target")
            continue
        if p[-1] not in tset:
            raise InputError(f"fan path ends at {p[-1]}, not a target")
        if len(set(p)) != len(p):
            raise InputError("fan path is not simple")
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                raise InputError(f"fan path uses missing edge ({a},{b})")
        body = set(p[1:])
        if body & seen_interior:
            raise InputError("fan paths share a vertex besides the center")
        seen_interior |= body
    if self_count > 1:
        raise InputError("more than one zero-length path")


def validate_cut_witness(
    g: Graph, v: int, t: Iterable[int], witness: CutWitness, k: int
) -> None:
    """Raise InputError unless the witness proves kappa(g, v, t) < k."""
    sep = witness.separator
    tset = set(t)
    if v in sep:
        raise InputError("separator contains the query vertex")
    if len(sep) + (1 if v in tset else 0) >= k:
        raise InputError("separator too large to refute the fan order")
    # BFS in G - sep must reach no target outside sep
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w in sep or w in seen:
                continue
            if w in tset:
                raise InputError(f"target {w} still reachable despite separator")
            seen.add(w)
            stack.append(w)
