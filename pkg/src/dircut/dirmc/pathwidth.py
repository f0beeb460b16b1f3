"""Directed path decompositions: a validator for arbitrary digraphs and the
width-2 decomposition of reduced multicut instances."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

from ..errors import InputError
from ..graph import Digraph
from .instance import DirMcInstance
from .reduction import SINKS, SOURCES


@dataclass(frozen=True)
class DirectedPathDecomposition:
    bags: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, bags: Iterable[Iterable[int]]) -> "DirectedPathDecomposition":
        return cls(tuple(frozenset(b) for b in bags))

    @property
    def width(self) -> int:
        # Bag size, not bag size minus one: DAGs have width 1.
        return max((len(b) for b in self.bags), default=0)


@dataclass(frozen=True)
class DecompositionCheck:
    width: Optional[int]
    violation: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.violation is None


def validate_path_decomposition(g: Digraph, d: DirectedPathDecomposition) -> DecompositionCheck:
    """Check both decomposition conditions.

    Each vertex must occupy a nonempty contiguous run of bags, and for each
    arc ``(u, v)`` some bag holding ``u`` must not come after some bag
    holding ``v``.
    """
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for idx, bag in enumerate(d.bags):
        for v in bag:
            if not (isinstance(v, int) and 0 <= v < g.n):
                return DecompositionCheck(None, f"bag {idx} holds unknown vertex {v!r}")
            first.setdefault(v, idx)
            last[v] = idx
    for v in range(g.n):
        if v not in first:
            return DecompositionCheck(None, f"vertex {v} ({g.label(v)}) is in no bag")
        for idx in range(first[v], last[v] + 1):
            if v not in d.bags[idx]:
                return DecompositionCheck(
                    None, f"bags holding vertex {v} ({g.label(v)}) are not contiguous (gap at {idx})"
                )
    for u, v in g.arcs:
        # Some i <= j with u in bag i, v in bag j  <=>  first(u) <= last(v).
        if first[u] > last[v]:
            return DecompositionCheck(
                None, f"arc ({u}, {v}) points backwards: {g.label(u)} only after {g.label(v)}"
            )
    return DecompositionCheck(d.width)


_ROLE = re.compile(r"^(xh?|zh?|yh?|p):([\d,]+):([\d,]+)$")
_RANK = {"x": 1, "z": 2, "p": 3, "y": 4}


def _order_key(label: str) -> tuple:
    if label in SOURCES:
        return (0, SOURCES.index(label))
    if label in SINKS:
        return (5, SINKS.index(label))
    m = _ROLE.match(label)
    if m is None:
        raise InputError(f"label {label!r} is not a reduction role; refusing to decompose")
    kind, owner, index = m.groups()
    owner_key = tuple(int(t) for t in owner.split(","))
    idx = tuple(int(t) for t in index.split(","))
    if kind == "p":
        return (3, owner_key, idx)
    # Position along the path: z_0, zh_1, z_1, zh_2, ...
    pos = 2 * idx[0] - (1 if kind.endswith("h") else 0)
    return (_RANK[kind[0]], owner_key, pos)


def vertex_order(reduced: DirMcInstance) -> list[int]:
    """Sources, x-paths, z-paths, grids, y-paths, sinks; each family sorted by
    owner then by position."""
    labels = reduced.graph.labels
    if labels is None:
        raise InputError("instance carries no reduction labels; refusing to decompose")
    return sorted(range(reduced.graph.n), key=lambda v: _order_key(labels[v]))


def build_pathwidth2_decomposition(reduced: DirMcInstance) -> DirectedPathDecomposition:
    order = vertex_order(reduced)
    if len(order) < 2:
        return DirectedPathDecomposition.of([order])
    return DirectedPathDecomposition.of([order[i], order[i + 1]] for i in range(len(order) - 1))
