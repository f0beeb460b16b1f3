"""Steiner orientation: instances, an exhaustive solver, the PSI reduction
and its witness maps.

Reduction layout, for a normalized PSI instance with class size ``n``:

* undirected paths ``C^i``, ``D^i`` per pattern vertex and ``X^{i,j}``,
  ``Y^{i,j}`` per ordered pair of a pattern edge, each on ``n`` vertices;
* arcs ``c_a -> d_a``, ``x^{i,j}_a -> d^i_a`` and ``c^i_a -> y^{i,j}_a``;
* one acyclic ``n x n`` grid per pattern edge ``i < j``; a cell
  ``(a, b)`` whose host pair ``v^i_a v^j_b`` is not an edge is split into a
  south-west and a north-east half joined by an undirected edge.

Labels: ``c:i:a``, ``d:i:a``, ``x:i,j:a``, ``y:i,j:a``, ``p:i,j:a,b`` and, for
split cells, ``p:i,j:a,b:SW`` / ``p:i,j:a,b:NE``.

Orientations are tuples of booleans, one per undirected edge index:
``True`` (``FORWARD``) keeps the stored direction ``(u, v)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from .errors import ContractViolation, InputError, ResourceLimitError
from .graph import MixedGraph, reachable
from .psi import Homomorphism, PsiInstance, is_partitioned_homomorphism

FORWARD = True
BACKWARD = False

Orientation = tuple[bool, ...]

DEFAULT_MAX_EDGES = 24


@dataclass(frozen=True)
class StorInstance:
    graph: MixedGraph
    terminal_pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple((int(s), int(t)) for s, t in self.terminal_pairs)
        object.__setattr__(self, "terminal_pairs", pairs)
        for s, t in pairs:
            for v in (s, t):
                if not 0 <= v < self.graph.n:
                    raise InputError(f"terminal {v} outside 0..{self.graph.n - 1}")

    @cached_property
    def vertex_of(self) -> dict[str, int]:
        if self.graph.labels is None:
            raise InputError("instance carries no vertex labels")
        return {label: v for v, label in enumerate(self.graph.labels)}

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: idx for idx, e in enumerate(self.graph.edges)}


def verify_orientation(inst: StorInstance, o: Sequence[bool]) -> bool:
    """True iff every terminal pair is connected once edges are oriented."""
    if len(o) != len(inst.graph.edges):
        raise InputError(
            f"orientation covers {len(o)} of {len(inst.graph.edges)} undirected edges"
        )
    g = inst.graph.oriented(o)
    return all(t in reachable(g, {s}) for s, t in inst.terminal_pairs)


def solve_stor_exact(
    inst: StorInstance, *, max_edges: int = DEFAULT_MAX_EDGES
) -> Optional[Orientation]:
    """First satisfying orientation in index order (forward before backward).

    Depth-first over edges by index.  A branch is abandoned as soon as some
    pair is disconnected even with every still-open edge usable both ways.
    """
    mg = inst.graph
    m = len(mg.edges)
    if m > max_edges:
        raise ResourceLimitError(f"{m} undirected edges exceed the search limit {max_edges}")
    n = mg.n
    base: list[list[int]] = [[] for _ in range(n)]
    for u, v in mg.arcs:
        base[u].append(v)
    # open_adj[u] lists (v, edge index) for edges usable u -> v while undecided
    open_adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for idx, (u, v) in enumerate(mg.edges):
        open_adj[u].append((v, idx))
        open_adj[v].append((u, idx))
    state: list[Optional[bool]] = [None] * m
    edges = mg.edges
    pairs = inst.terminal_pairs

    def connected(s: int, t: int) -> bool:
        seen = [False] * n
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if u == t:
                return True
            for v in base[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
            for v, idx in open_adj[u]:
                if seen[v]:
                    continue
                d = state[idx]
                if d is None or (edges[idx][0] == u) == d:
                    seen[v] = True
                    queue.append(v)
        return False

    def feasible() -> bool:
        return all(connected(s, t) for s, t in pairs)

    def dfs(idx: int) -> bool:
        if not feasible():
            return False
        if idx == m:
            return True
        for d in (FORWARD, BACKWARD):
            state[idx] = d
            if dfs(idx + 1):
                return True
        state[idx] = None
        return False

    if not dfs(0):
        return None
    return tuple(bool(d) for d in state)


def c_label(i: int, a: int) -> str:
    return f"c:{i}:{a}"


def d_label(i: int, a: int) -> str:
    return f"d:{i}:{a}"


def x_label(i: int, j: int, a: int) -> str:
    return f"x:{i},{j}:{a}"


def y_label(i: int, j: int, a: int) -> str:
    return f"y:{i},{j}:{a}"


def p_label(i: int, j: int, a: int, b: int, half: str = "") -> str:
    return f"p:{i},{j}:{a},{b}" + (f":{half}" if half else "")


def reduce_psi_to_stor(inst: PsiInstance) -> StorInstance:
    inst.require_normalized()
    if inst.k == 0:
        raise InputError("pattern graph has no edges")
    n = inst.n
    pairs = inst.ordered_pairs
    labels: list[str] = []
    paths: list[list[str]] = []
    for i in range(1, inst.ell + 1):
        paths.append([c_label(i, a) for a in range(1, n + 1)])
        paths.append([d_label(i, a) for a in range(1, n + 1)])
    for i, j in pairs:
        paths.append([x_label(i, j, a) for a in range(1, n + 1)])
        paths.append([y_label(i, j, a) for a in range(1, n + 1)])
    for path in paths:
        labels += path
    grids = sorted(inst.pattern_edges)
    split = {}
    for i, j in grids:
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                split[i, j, a, b] = not inst.has_host_edge(i, a, j, b)
                if split[i, j, a, b]:
                    labels += [p_label(i, j, a, b, "SW"), p_label(i, j, a, b, "NE")]
                else:
                    labels.append(p_label(i, j, a, b))
    vid = {lab: v for v, lab in enumerate(labels)}

    arcs: list[tuple[int, int]] = []
    edges: list[tuple[int, int]] = []
    for path in paths:
        edges += [(vid[u], vid[v]) for u, v in zip(path, path[1:])]

    def cell(i: int, j: int, a: int, b: int, half: str) -> int:
        return vid[p_label(i, j, a, b, half if split[i, j, a, b] else "")]

    for i in range(1, inst.ell + 1):
        for a in range(1, n + 1):
            arcs.append((vid[c_label(i, a)], vid[d_label(i, a)]))
    for i, j in pairs:
        for a in range(1, n + 1):
            arcs.append((vid[x_label(i, j, a)], vid[d_label(i, a)]))
            arcs.append((vid[c_label(i, a)], vid[y_label(i, j, a)]))
    for i, j in grids:
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if split[i, j, a, b]:
                    edges.append((cell(i, j, a, b, "SW"), cell(i, j, a, b, "NE")))
        # South arcs leave from SW, north arcs enter NE, west arcs enter SW,
        # east arcs leave from NE.
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if a < n:
                    arcs.append((cell(i, j, a, b, "SW"), cell(i, j, a + 1, b, "NE")))
                if b < n:
                    arcs.append((cell(i, j, a, b, "NE"), cell(i, j, a, b + 1, "SW")))
        for a in range(1, n + 1):
            arcs.append((vid[x_label(i, j, a)], cell(i, j, a, 1, "SW")))
            arcs.append((cell(i, j, a, n, "NE"), vid[y_label(i, j, a)]))
            arcs.append((vid[x_label(j, i, a)], cell(i, j, 1, a, "NE")))
            arcs.append((cell(i, j, n, a, "SW"), vid[y_label(j, i, a)]))

    terminal_pairs: list[tuple[str, str]] = []
    for i in range(1, inst.ell + 1):
        terminal_pairs += [(c_label(i, 1), d_label(i, n)), (c_label(i, n), d_label(i, 1))]
    for i, j in pairs:
        terminal_pairs += [
            (x_label(i, j, 1), d_label(i, n)),
            (x_label(i, j, n), d_label(i, 1)),
            (c_label(i, 1), y_label(i, j, n)),
            (c_label(i, n), y_label(i, j, 1)),
        ]
    for i, j in grids:
        terminal_pairs += [(x_label(i, j, n), y_label(i, j, 1)), (x_label(j, i, n), y_label(j, i, 1))]
    graph = MixedGraph(len(labels), tuple(arcs), tuple(edges), tuple(labels))
    return StorInstance(graph, tuple((vid[s], vid[t]) for s, t in terminal_pairs))


def _path_edges(reduced: StorInstance, labels: list[str]) -> list[int]:
    vid, idx = reduced.vertex_of, reduced.edge_index
    return [idx[vid[u], vid[v]] for u, v in zip(labels, labels[1:])]


def _check_shape(reduced: StorInstance, source: PsiInstance) -> None:
    source.require_normalized()
    n = source.n
    try:
        lookup = reduced.vertex_of
    except InputError:
        raise InputError("instance was not produced by the reduction (no labels)") from None
    expected_pairs = 2 * source.ell + 10 * source.k
    if (
        len(reduced.terminal_pairs) != expected_pairs
        or d_label(source.ell, n) not in lookup
        or d_label(source.ell, n + 1) in lookup
    ):
        raise InputError("reduced instance does not match the source PSI instance")


def lift_hom_to_orientation(
    inst: PsiInstance, h: Sequence[int], reduced: StorInstance
) -> Orientation:
    """Orient each path family around ``phi`` and route the two grid paths
    of every pattern edge; split edges off those routes point SW -> NE."""
    _check_shape(reduced, inst)
    if not is_partitioned_homomorphism(inst, h):
        raise InputError(
            "not a partitioned homomorphism: row and column routes would cross a split cell in opposite directions"
        )
    n = inst.n
    o = [FORWARD] * len(reduced.graph.edges)

    def towards(labels: list[str], a: int) -> None:
        for b, e in enumerate(_path_edges(reduced, labels), start=1):
            o[e] = FORWARD if b < a else BACKWARD

    def away(labels: list[str], a: int) -> None:
        for b, e in enumerate(_path_edges(reduced, labels), start=1):
            o[e] = BACKWARD if b < a else FORWARD

    for i in range(1, inst.ell + 1):
        towards([c_label(i, a) for a in range(1, n + 1)], h[i - 1])
        away([d_label(i, a) for a in range(1, n + 1)], h[i - 1])
    for i, j in inst.ordered_pairs:
        towards([x_label(i, j, a) for a in range(1, n + 1)], h[i - 1])
        away([y_label(i, j, a) for a in range(1, n + 1)], h[i - 1])
    vid, idx = reduced.vertex_of, reduced.edge_index
    for i, j in sorted(inst.pattern_edges):
        col = h[j - 1]
        for a in range(1, n + 1):
            sw = vid.get(p_label(i, j, a, col, "SW"))
            if sw is not None:
                # The column route runs north to south: NE -> SW.
                o[idx[sw, vid[p_label(i, j, a, col, "NE")]]] = BACKWARD
    return tuple(o)


def _towards_index(forward: list[bool]) -> Optional[int]:
    """The ``a`` with edge ``b`` forward exactly for ``b < a``, if any."""
    a = 1
    while a - 1 < len(forward) and forward[a - 1]:
        a += 1
    return a if not any(forward[a - 1 :]) else None


def extract_hom_from_orientation(
    reduced: StorInstance, o: Sequence[bool], source: PsiInstance
) -> Homomorphism:
    """Read ``phi(i)`` as the vertex of ``C^i`` that all its edges point to."""
    _check_shape(reduced, source)
    if not verify_orientation(reduced, o):
        raise ContractViolation("orientation does not satisfy every terminal pair")
    n = source.n
    phi = []
    for i in range(1, source.ell + 1):
        forward = [o[e] for e in _path_edges(reduced, [c_label(i, a) for a in range(1, n + 1)])]
        a = _towards_index(forward)
        if a is None:
            raise ContractViolation(f"path C^{i} is not oriented towards a single vertex")
        phi.append(a)
    phi = tuple(phi)
    if not is_partitioned_homomorphism(source, phi):
        raise ContractViolation(f"extracted assignment {phi} is not a homomorphism")
    return phi
