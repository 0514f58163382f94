"""Problem instances: a graph, per-vertex requirements, and free vertices."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import InputError
from .graph import Graph

__all__ = ["Instance"]


@dataclass(frozen=True)
class Instance:
    """A vector connectivity instance (G, r, F).

    ``requirements[v]`` is the number of internally disjoint paths vertex v
    demands to the solution-plus-free set.  Requirements may exceed vertex
    degrees; such vertices can only be satisfied by membership.  ``free_set``
    vertices count as path targets without being paid for.
    """

    graph: Graph
    requirements: tuple[int, ...]
    free_set: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if len(self.requirements) != self.graph.n:
            raise InputError(
                f"expected {self.graph.n} requirements, got {len(self.requirements)}"
            )
        if any(r < 0 for r in self.requirements):
            raise InputError("requirements must be nonnegative")
        for v in self.free_set:
            if not (0 <= v < self.graph.n):
                raise InputError(f"free vertex {v} out of range")
        object.__setattr__(self, "requirements", tuple(self.requirements))
        object.__setattr__(self, "free_set", frozenset(self.free_set))

    @property
    def r_max(self) -> int:
        return max(self.requirements, default=0)

    def with_requirement(self, v: int, value: int) -> "Instance":
        r = list(self.requirements)
        r[v] = value
        return Instance(self.graph, tuple(r), self.free_set)


def make_instance(
    graph: Graph,
    requirements: Iterable[int] | dict[int, int],
    free_set: Iterable[int] = (),
) -> Instance:
    """Build an Instance from a dense sequence or a sparse {vertex: r} map."""
    if isinstance(requirements, dict):
        r = [0] * graph.n
        for v, k in requirements.items():
            if not (0 <= v < graph.n):
                raise InputError(f"requirement for unknown vertex {v}")
            r[v] = k
        reqs = tuple(r)
    else:
        reqs = tuple(requirements)
    return Instance(graph, reqs, frozenset(free_set))
