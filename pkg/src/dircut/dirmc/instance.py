"""Vertex-weighted directed multicut instances and cutsets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from ..errors import InputError
from ..graph import Digraph, reachable


@dataclass(frozen=True)
class DirMcInstance:
    """Delete non-terminal vertices of total weight at most ``budget`` so that
    no terminal pair ``(s, t)`` keeps an ``s -> t`` path.

    ``weights[v]`` is ``None`` exactly for terminals.  Any weight above the
    budget makes a vertex undeletable; constructions use ``budget + 1``.
    ``M`` is the gadget constant when the instance came out of the reduction.
    """

    graph: Digraph
    terminal_pairs: tuple[tuple[int, int], ...]
    weights: tuple[Optional[int], ...]
    budget: int
    M: Optional[int] = None

    def __post_init__(self) -> None:
        g = self.graph
        pairs = tuple((int(s), int(t)) for s, t in self.terminal_pairs)
        object.__setattr__(self, "terminal_pairs", pairs)
        object.__setattr__(self, "weights", tuple(self.weights))
        if self.budget < 0:
            raise InputError("negative budget")
        for s, t in pairs:
            g.check_vertex(s)
            g.check_vertex(t)
            if s == t:
                raise InputError(f"terminal pair ({s}, {t}) has equal endpoints")
        if len(self.weights) != g.n:
            raise InputError(f"{len(self.weights)} weights for {g.n} vertices")
        terminals = self.terminals
        for v, w in enumerate(self.weights):
            if v in terminals:
                if w is not None:
                    raise InputError(f"terminal {v} carries a weight")
            elif not (isinstance(w, int) and w >= 1):
                raise InputError(f"vertex {v} needs a positive integer weight, got {w!r}")

    @property
    def undeletable_weight(self) -> int:
        return self.budget + 1

    @cached_property
    def terminals(self) -> frozenset[int]:
        return frozenset(v for pair in self.terminal_pairs for v in pair)

    @cached_property
    def deletable(self) -> tuple[int, ...]:
        """Non-terminals whose weight fits in the budget, in id order."""
        return tuple(
            v for v, w in enumerate(self.weights) if w is not None and w <= self.budget
        )

    def is_undeletable(self, v: int) -> bool:
        w = self.weights[v]
        return w is None or w > self.budget

    @cached_property
    def vertex_of(self) -> dict[str, int]:
        """Label -> vertex id (requires labels)."""
        if self.graph.labels is None:
            raise InputError("instance carries no vertex labels")
        return {label: v for v, label in enumerate(self.graph.labels)}

    def cutset(self, vertices: Iterable[int]) -> "Cutset":
        """Validate a vertex set as a cutset of this instance."""
        vs = tuple(sorted(set(vertices)))
        for v in vs:
            self.graph.check_vertex(v)
            if v in self.terminals:
                raise InputError(f"cutset contains terminal {v}")
            if self.is_undeletable(v):
                raise InputError(f"cutset contains undeletable vertex {v} ({self.graph.label(v)})")
        return Cutset(vs, sum(self.weights[v] for v in vs))


@dataclass(frozen=True)
class Cutset:
    vertices: tuple[int, ...]
    weight: int

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)


def separates_all(inst: DirMcInstance, removed: Iterable[int]) -> bool:
    removed = frozenset(removed)
    return all(
        t not in reachable(inst.graph, {s}, blocked=removed) for s, t in inst.terminal_pairs
    )


def verify_multicut(inst: DirMcInstance, cut: Cutset | Iterable[int]) -> bool:
    """Whether ``cut`` fits the budget and separates every terminal pair.

    A cut containing a terminal or an undeletable vertex is an input error,
    not a ``False``.
    """
    vertices = cut.vertices if isinstance(cut, Cutset) else cut
    cut = inst.cutset(vertices)
    return cut.weight <= inst.budget and separates_all(inst, cut.vertices)
