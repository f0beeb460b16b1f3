"""Directed and mixed graphs plus the reachability and unit-capacity flow
primitives used throughout the package.

Vertices are the dense integers ``0..n-1``; optional string labels live in a
side table.  Graph values are immutable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import InputError

Arc = tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    """A directed graph on vertices ``0..n-1``.

    Parallel arcs are allowed (they matter for arc-cut capacities); self-loops
    are not.
    """

    n: int
    arcs: tuple[Arc, ...] = ()
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"negative vertex count {self.n}")
        arcs = tuple((int(u), int(v)) for u, v in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        for u, v in arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"arc ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.n:
                raise InputError(f"{len(labels)} labels for {self.n} vertices")
            object.__setattr__(self, "labels", labels)

    @cached_property
    def out_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            adj[u].append(v)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def in_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            adj[v].append(u)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def arc_set(self) -> frozenset[Arc]:
        return frozenset(self.arcs)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InputError(f"invalid vertex id {v!r} (graph has {self.n} vertices)")

    def is_simple(self) -> bool:
        return len(self.arc_set) == len(self.arcs)


@dataclass(frozen=True)
class MixedGraph:
    """Arcs plus undirected edges.  Edge ``i`` is stored as ``edges[i] = (u, v)``;
    an orientation refers to edges by that index."""

    n: int
    arcs: tuple[Arc, ...] = ()
    edges: tuple[Arc, ...] = ()
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        # Reuse the Digraph checks for both arc families.
        Digraph(self.n, self.arcs, self.labels)
        Digraph(self.n, self.edges)
        object.__setattr__(self, "arcs", tuple(tuple(a) for a in self.arcs))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        arc_pairs = {frozenset(a) for a in self.arcs}
        for u, v in self.edges:
            if frozenset((u, v)) in arc_pairs:
                raise InputError(f"edge {{{u}, {v}}} duplicates an arc")

    def oriented(self, forward: Sequence[bool]) -> Digraph:
        """The digraph obtained by orienting edge ``i`` as stored when
        ``forward[i]`` is true and reversed otherwise."""
        if len(forward) != len(self.edges):
            raise InputError(
                f"orientation covers {len(forward)} of {len(self.edges)} undirected edges"
            )
        oriented = [(u, v) if f else (v, u) for (u, v), f in zip(self.edges, forward)]
        return Digraph(self.n, self.arcs + tuple(oriented), self.labels)

    def bidirected(self) -> Digraph:
        """Arcs plus both directions of every undirected edge."""
        both = [a for u, v in self.edges for a in ((u, v), (v, u))]
        return Digraph(self.n, self.arcs + tuple(both), self.labels)


def _check_vertices(g: Digraph, vs: Iterable[int]) -> frozenset[int]:
    vs = frozenset(vs)
    for v in vs:
        g.check_vertex(v)
    return vs


def reachable(
    g: Digraph,
    sources: Iterable[int],
    *,
    blocked: Iterable[int] = (),
    removed_arcs: Iterable[Arc] = (),
) -> frozenset[int]:
    """Vertices reachable from ``sources`` (sources included).

    ``blocked`` vertices are treated as deleted; a blocked source is dropped.
    Every copy of an arc listed in ``removed_arcs`` is ignored.
    """
    sources = _check_vertices(g, sources)
    blocked = frozenset(blocked)
    removed = frozenset(removed_arcs)
    seen = set(sources - blocked)
    queue = deque(seen)
    adj = g.out_adj
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen and v not in blocked and (u, v) not in removed:
                seen.add(v)
                queue.append(v)
    return frozenset(seen)


def reaching(
    g: Digraph,
    targets: Iterable[int],
    *,
    blocked: Iterable[int] = (),
    removed_arcs: Iterable[Arc] = (),
) -> frozenset[int]:
    """Vertices from which some vertex of ``targets`` is reachable."""
    targets = _check_vertices(g, targets)
    blocked = frozenset(blocked)
    removed = frozenset(removed_arcs)
    seen = set(targets - blocked)
    queue = deque(seen)
    adj = g.in_adj
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in seen and u not in blocked and (u, v) not in removed:
                seen.add(u)
                queue.append(u)
    return frozenset(seen)


class _FlowNetwork:
    """Residual network for small integer-capacity max-flow (Edmonds-Karp)."""

    def __init__(self, size: int) -> None:
        self.head: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(size)]

    def add_edge(self, u: int, v: int, cap: int) -> int:
        e = len(self.head)
        self.head += [v, u]
        self.cap += [cap, 0]
        self.adj[u].append(e)
        self.adj[v].append(e + 1)
        return e

    def max_flow(self, source: int, sink: int, limit: int) -> int:
        """Augment until no path remains or the flow exceeds ``limit``."""
        flow = 0
        while flow <= limit:
            parent_edge = {source: -1}
            queue = deque([source])
            while queue and sink not in parent_edge:
                u = queue.popleft()
                for e in self.adj[u]:
                    v = self.head[e]
                    if self.cap[e] > 0 and v not in parent_edge:
                        parent_edge[v] = e
                        queue.append(v)
            if sink not in parent_edge:
                break
            path = []
            v = sink
            while v != source:
                e = parent_edge[v]
                path.append(e)
                v = self.head[e ^ 1]
            push = min(self.cap[e] for e in path)
            for e in path:
                self.cap[e] -= push
                self.cap[e ^ 1] += push
            flow += push
        return flow

    def residual_from(self, source: int) -> set[int]:
        seen = {source}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for e in self.adj[u]:
                v = self.head[e]
                if self.cap[e] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen

    def residual_to(self, sink: int) -> set[int]:
        seen = {sink}
        queue = deque([sink])
        while queue:
            v = queue.popleft()
            for e in self.adj[v]:
                # e goes v -> u; its partner u -> v has residual cap[e ^ 1]
                u = self.head[e]
                if self.cap[e ^ 1] > 0 and u not in seen:
                    seen.add(u)
                    queue.append(u)
        return seen


@dataclass(frozen=True)
class ArcCut:
    """A minimum arc cut and the source side it separates."""

    arcs: tuple[Arc, ...]
    source_side: frozenset[int] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.arcs)


def min_set_cut(
    g: Digraph,
    sources: Iterable[int],
    t: int,
    cap: int,
    *,
    removed_arcs: Iterable[Arc] = (),
    furthest: bool = False,
) -> Optional[ArcCut]:
    """Minimum arc cut between a source *set* and ``t``.

    Same contract as :func:`min_arc_cut`; arcs leaving the source set count,
    arcs inside it do not.
    """
    sources = _check_vertices(g, sources)
    g.check_vertex(t)
    if t in sources:
        raise InputError("sink belongs to the source set")
    removed = frozenset(removed_arcs)
    n = g.n
    net = _FlowNetwork(n + 1)
    root = n
    for v in sources:
        net.add_edge(root, v, cap + 1)
    for u, v in g.arcs:
        if (u, v) not in removed and v not in sources:
            net.add_edge(u, v, 1)
    value = net.max_flow(root, t, cap)
    if value > cap:
        return None
    if furthest:
        side = frozenset(range(n)) - net.residual_to(t)
    else:
        side = frozenset(net.residual_from(root) - {root})
    arcs = tuple(
        sorted((u, v) for u, v in g.arcs if u in side and v not in side and (u, v) not in removed)
    )
    assert len(arcs) == value
    return ArcCut(arcs, side)


def min_arc_cut(
    g: Digraph, s: int, t: int, k: int, *, furthest: bool = False
) -> Optional[ArcCut]:
    """A minimum set of arcs whose removal leaves no ``s -> t`` path.

    Returns ``None`` when the minimum exceeds ``k``.  Each parallel copy of an
    arc counts separately.  ``source_side`` is the residual-reachable set from
    ``s`` (the cut closest to ``s``), or the largest min-cut source side when
    ``furthest`` is set.
    """
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise InputError("s and t coincide")
    return min_set_cut(g, {s}, t, k, furthest=furthest)


def vertex_disjoint_paths(
    g: Digraph,
    xs: Iterable[int],
    ys: Iterable[int],
    forbidden: Iterable[int] = (),
) -> int:
    """Maximum number of pairwise vertex-disjoint paths from ``xs`` to ``ys`` in
    ``g - forbidden``.

    Every vertex, endpoints included, has capacity one, so the paths share no
    vertex at all; a vertex in both ``xs`` and ``ys`` is a path by itself.
    """
    xs = _check_vertices(g, xs)
    ys = _check_vertices(g, ys)
    forbidden = _check_vertices(g, forbidden)
    if (xs | ys) & forbidden:
        raise InputError("path endpoints intersect the forbidden set")
    n = g.n
    net = _FlowNetwork(2 * n + 2)
    src, snk = 2 * n, 2 * n + 1
    for v in range(n):
        if v not in forbidden:
            net.add_edge(2 * v, 2 * v + 1, 1)
    for u, v in g.arcs:
        if u not in forbidden and v not in forbidden:
            net.add_edge(2 * u + 1, 2 * v, 1)
    for x in xs:
        net.add_edge(src, 2 * x, 1)
    for y in ys:
        net.add_edge(2 * y + 1, snk, 1)
    return net.max_flow(src, snk, len(xs))


def reverse_graph(g: Digraph) -> Digraph:
    return Digraph(g.n, tuple((v, u) for u, v in g.arcs), g.labels)


def bypass_vertex(g: Digraph, v: int, terminals: Iterable[int] = ()) -> Digraph:
    """Delete ``v`` and connect each in-neighbour to each out-neighbour.

    Vertices above ``v`` shift down by one id; labels follow their vertices.
    Duplicate arcs are merged.  Bypassing a vertex listed in ``terminals``
    is refused.
    """
    g.check_vertex(v)
    if v in set(terminals):
        raise InputError(f"refusing to bypass terminal {v}")
    ins = set(g.in_adj[v])
    outs = set(g.out_adj[v])
    arcs: list[Arc] = []
    seen: set[Arc] = set()
    shortcuts = [(u, w) for u in sorted(ins) for w in sorted(outs) if u != w]
    for u, w in [a for a in g.arcs if v not in a] + shortcuts:
        a = (u - (u > v), w - (w > v))
        if a not in seen:
            seen.add(a)
            arcs.append(a)
    labels = None
    if g.labels is not None:
        labels = g.labels[:v] + g.labels[v + 1 :]
    return Digraph(g.n - 1, tuple(arcs), labels)


def induced_without(g: Digraph, removed: Iterable[int]) -> tuple[Digraph, list[int]]:
    """``g`` minus a vertex set, compacted; also returns the kept original ids."""
    removed = frozenset(removed)
    kept = [v for v in range(g.n) if v not in removed]
    index = {v: i for i, v in enumerate(kept)}
    arcs = tuple((index[u], index[v]) for u, v in g.arcs if u in index and v in index)
    labels = tuple(g.labels[v] for v in kept) if g.labels is not None else None
    return Digraph(len(kept), arcs, labels), kept
