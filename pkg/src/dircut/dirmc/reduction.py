"""Compile a PSI instance into a four-pair weighted directed multicut
instance, and translate witnesses in both directions.

Gadgets, with ``0 <= a <= n`` and hats at ``1 <= a <= n``:

* one bidirected z-path ``z_0, zh_1, z_1, ..., zh_n, z_n`` per pattern
  vertex ``i``, hats weighing ``M * deg(i)``;
* one bidirected x-path and one y-path per ordered pair ``(i, j)`` of a
  pattern edge, hats weighing ``M``;
* one acyclic ``n x n`` grid per pattern edge ``i < j`` whose cell
  ``(a, b)`` is light (weight 1) iff ``v^i_a v^j_b`` is a host edge.

Plain path vertices and non-edge cells are undeletable (``budget + 1``) and
the budget is ``(6M + 1) k``.

Vertex labels (no whitespace, so they survive the text format)::

    s_x t_x s_y t_y s_lt t_lt s_gt t_gt   terminals
    z:i:a  zh:i:a                         z-path, plain / hat
    x:i,j:a  xh:i,j:a  y:i,j:a  yh:i,j:a  x- and y-paths
    p:i,j:a,b                             grid cell (i < j)
"""

from __future__ import annotations

from typing import Sequence

from ..errors import ContractViolation, InputError
from ..graph import Digraph
from ..psi import Homomorphism, PsiInstance, is_partitioned_homomorphism
from .instance import Cutset, DirMcInstance, verify_multicut

TERMINAL_PAIRS = (("s_x", "t_x"), ("s_y", "t_y"), ("s_lt", "t_lt"), ("s_gt", "t_gt"))
SOURCES = tuple(s for s, _ in TERMINAL_PAIRS)
SINKS = tuple(t for _, t in TERMINAL_PAIRS)


def z_label(i: int, a: int, hat: bool = False) -> str:
    return f"{'zh' if hat else 'z'}:{i}:{a}"


def x_label(i: int, j: int, a: int, hat: bool = False) -> str:
    return f"{'xh' if hat else 'x'}:{i},{j}:{a}"


def y_label(i: int, j: int, a: int, hat: bool = False) -> str:
    return f"{'yh' if hat else 'y'}:{i},{j}:{a}"


def p_label(i: int, j: int, a: int, b: int) -> str:
    return f"p:{i},{j}:{a},{b}"


def _path_labels(make, n: int) -> list[str]:
    labels = [make(0, False)]
    for a in range(1, n + 1):
        labels += [make(a, True), make(a, False)]
    return labels


def reduce_psi_to_dirmc(inst: PsiInstance, M: int = 2) -> DirMcInstance:
    if not isinstance(M, int) or M < 2:
        raise InputError(f"gadget constant M must be an integer >= 2, got {M!r}")
    inst.require_normalized()
    if inst.k == 0:
        raise InputError("pattern graph has no edges")
    n, k = inst.n, inst.k
    budget = (6 * M + 1) * k
    heavy_wall = budget + 1
    pairs = inst.ordered_pairs
    grids = sorted(inst.pattern_edges)

    labels: list[str] = [lab for pair in TERMINAL_PAIRS for lab in pair]
    weights: dict[str, int] = {}
    x_paths = {(i, j): _path_labels(lambda a, h, i=i, j=j: x_label(i, j, a, h), n) for i, j in pairs}
    z_paths = {i: _path_labels(lambda a, h, i=i: z_label(i, a, h), n) for i in range(1, inst.ell + 1)}
    y_paths = {(i, j): _path_labels(lambda a, h, i=i, j=j: y_label(i, j, a, h), n) for i, j in pairs}

    for (i, j), path in x_paths.items():
        labels += path
    for i, path in z_paths.items():
        labels += path
    for i, j in grids:
        labels += [p_label(i, j, a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    for (i, j), path in y_paths.items():
        labels += path

    for (i, j) in pairs:
        for a in range(n + 1):
            weights[x_label(i, j, a)] = heavy_wall
            weights[y_label(i, j, a)] = heavy_wall
        for a in range(1, n + 1):
            weights[x_label(i, j, a, True)] = M
            weights[y_label(i, j, a, True)] = M
    for i in z_paths:
        for a in range(n + 1):
            weights[z_label(i, a)] = heavy_wall
        for a in range(1, n + 1):
            weights[z_label(i, a, True)] = M * inst.degrees[i - 1]
    for i, j in grids:
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                light = inst.has_host_edge(i, a, j, b)
                weights[p_label(i, j, a, b)] = 1 if light else heavy_wall

    vid = {lab: v for v, lab in enumerate(labels)}
    arcs: list[tuple[int, int]] = []

    def arc(u: str, v: str) -> None:
        arcs.append((vid[u], vid[v]))

    for path in [*x_paths.values(), *z_paths.values(), *y_paths.values()]:
        for u, v in zip(path, path[1:]):
            arc(u, v)
            arc(v, u)
    for i, j in pairs:
        for a in range(n + 1):
            arc(x_label(i, j, a), z_label(i, a))
            arc(z_label(i, a), y_label(i, j, a))
        arc("s_x", x_label(i, j, 0))
        arc(y_label(i, j, n), "t_y")
        side = "lt" if i < j else "gt"
        arc(f"s_{side}", x_label(i, j, n))
        arc(y_label(i, j, 0), f"t_{side}")
    for i in z_paths:
        arc("s_y", z_label(i, 0))
        arc(z_label(i, n), "t_x")
    for i, j in grids:
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if a < n:
                    arc(p_label(i, j, a, b), p_label(i, j, a + 1, b))
                if b < n:
                    arc(p_label(i, j, a, b), p_label(i, j, a, b + 1))
        for a in range(1, n + 1):
            arc(x_label(i, j, a), p_label(i, j, a, 1))
            arc(p_label(i, j, a, n), y_label(i, j, a - 1))
            arc(x_label(j, i, a), p_label(i, j, 1, a))
            arc(p_label(i, j, n, a), y_label(j, i, a - 1))

    graph = Digraph(len(labels), tuple(arcs), tuple(labels))
    terminal_pairs = tuple((vid[s], vid[t]) for s, t in TERMINAL_PAIRS)
    weight_list = tuple(weights.get(lab) for lab in labels)
    return DirMcInstance(graph, terminal_pairs, weight_list, budget, M)


def _check_shape(reduced: DirMcInstance, source: PsiInstance) -> None:
    source.require_normalized()
    n = source.n
    expected = 8 + (4 * source.k + source.ell) * (2 * n + 1) + source.k * n * n
    try:
        lookup = reduced.vertex_of
    except InputError:
        raise InputError("instance was not produced by the reduction (no labels)") from None
    if reduced.graph.n != expected or z_label(source.ell, n, True) not in lookup:
        raise InputError("reduced instance does not match the source PSI instance")


def lift_hom_to_cutset(inst: PsiInstance, h: Sequence[int], reduced: DirMcInstance) -> Cutset:
    """The cutset that cuts every gadget path of pattern vertex ``i`` at
    index ``phi(i)`` and takes cell ``(phi(i), phi(j))`` of every grid."""
    _check_shape(reduced, inst)
    if not is_partitioned_homomorphism(inst, h):
        raise InputError("not a partitioned homomorphism: a selected grid cell would be undeletable")
    vid = reduced.vertex_of
    chosen = []
    for i, j in inst.ordered_pairs:
        chosen.append(vid[x_label(i, j, h[i - 1], True)])
        chosen.append(vid[y_label(i, j, h[i - 1], True)])
    for i in range(1, inst.ell + 1):
        chosen.append(vid[z_label(i, h[i - 1], True)])
    for i, j in sorted(inst.pattern_edges):
        chosen.append(vid[p_label(i, j, h[i - 1], h[j - 1])])
    return reduced.cutset(chosen)


def extract_hom_from_cutset(
    reduced: DirMcInstance, cut: Cutset, source: PsiInstance
) -> Homomorphism:
    """Read ``phi(i)`` off the unique z-path hat of pattern vertex ``i``.

    With ``M >= 2`` a multicut within budget cuts every gadget path exactly
    once, so anything else is reported as a contract violation.
    """
    _check_shape(reduced, source)
    if not verify_multicut(reduced, cut):
        raise ContractViolation("cutset is not a multicut within budget")
    vid = reduced.vertex_of
    members = set(cut.vertices)
    phi = []
    for i in range(1, source.ell + 1):
        hits = [a for a in range(1, source.n + 1) if vid[z_label(i, a, True)] in members]
        if len(hits) != 1:
            raise ContractViolation(f"z-path of pattern vertex {i} holds {len(hits)} cut vertices")
        phi.append(hits[0])
    phi = tuple(phi)
    if not is_partitioned_homomorphism(source, phi):
        raise ContractViolation(f"extracted assignment {phi} is not a homomorphism")
    return phi


def expand_weights(inst: DirMcInstance) -> tuple[DirMcInstance, tuple[int, ...]]:
    """Replace each weight-``w`` vertex by ``w`` unit-weight twins.

    Twins share all in- and out-neighbours of the original (every twin of
    ``u`` points to every twin of ``v``).  Returns the unit instance and the
    map from new vertex ids to original ids.  Unit-weight vertices keep
    their id and label, so an all-unit instance maps to itself.
    """
    g = inst.graph
    origin: list[int] = []
    copies: list[list[int]] = []
    labels: list[str] = []
    for v in range(g.n):
        w = inst.weights[v] or 1
        ids = []
        for c in range(1, w + 1):
            ids.append(len(origin))
            origin.append(v)
            labels.append(g.label(v) if w == 1 else f"{g.label(v)}~{c}")
        copies.append(ids)
    arcs = tuple((a, b) for u, v in g.arcs for a in copies[u] for b in copies[v])
    if g.labels is None:
        labels = None
    weights = tuple(None if inst.weights[v] is None else 1 for v in origin)
    pairs = tuple((copies[s][0], copies[t][0]) for s, t in inst.terminal_pairs)
    expanded = DirMcInstance(Digraph(len(origin), arcs, labels and tuple(labels)), pairs, weights, inst.budget)
    return expanded, tuple(origin)
