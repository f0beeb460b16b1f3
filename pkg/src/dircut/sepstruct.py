"""Small directed arc cuts: minimal cuts, important separators, k-cut-minimal
cores, well-linked sets, sunflowers and the counting bounds that tie them
together.

Everything here is exact and exponential somewhere; it is meant for graphs
with a handful of vertices.  Cuts are sorted tuples of arcs and the graph
must be simple.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import BoundViolation, InputError, ResourceLimitError
from .graph import Arc, Digraph, bypass_vertex, min_set_cut, reachable, reaching, reverse_graph, vertex_disjoint_paths

Cut = tuple[Arc, ...]

DEFAULT_ENUM_LIMIT = 1 << 20
DEFAULT_MAX_TERMINALS = 5


@dataclass(frozen=True)
class CutContext:
    graph: Digraph
    s: int
    t: int
    k: int

    def __post_init__(self) -> None:
        self.graph.check_vertex(self.s)
        self.graph.check_vertex(self.t)
        if self.s == self.t:
            raise InputError("s and t coincide")
        if self.k < 0:
            raise InputError("negative cut-size cap")
        if not self.graph.is_simple():
            raise InputError("cut enumeration needs a simple digraph")

    def with_k(self, k: int) -> "CutContext":
        return CutContext(self.graph, self.s, self.t, k)


def source_side(ctx: CutContext, cut: Iterable[Arc]) -> frozenset[int]:
    """Vertices reachable from ``s`` once ``cut`` is removed."""
    return reachable(ctx.graph, {ctx.s}, removed_arcs=cut)


def is_cut(ctx: CutContext, cut: Iterable[Arc]) -> bool:
    return ctx.t not in source_side(ctx, cut)


def is_minimal_cut(ctx: CutContext, cut: Iterable[Arc]) -> bool:
    """A cut is inclusion-minimal iff each of its arcs ``(u, v)`` has ``u``
    reachable from ``s`` and ``v`` reaching ``t`` in ``G - cut``."""
    cut = frozenset(cut)
    if not cut <= ctx.graph.arc_set:
        return False
    fwd = source_side(ctx, cut)
    if ctx.t in fwd:
        return False
    back = reaching(ctx.graph, {ctx.t}, removed_arcs=cut)
    return all(u in fwd and v in back for u, v in cut)


def _out_arcs(g: Digraph, side: frozenset[int]) -> Cut:
    return tuple(sorted((u, v) for u, v in g.arcs if u in side and v not in side))


def enum_minimal_cuts(ctx: CutContext, *, limit: int = DEFAULT_ENUM_LIMIT) -> list[Cut]:
    """Every inclusion-minimal ``s``-``t`` arc cut with at most ``k`` arcs.

    Walks whichever space is smaller: source sides (subsets of the other
    vertices) or arc subsets of size at most ``k``.
    """
    g, s, t, k = ctx.graph, ctx.s, ctx.t, ctx.k
    m = len(g.arcs)
    others = [v for v in range(g.n) if v not in (s, t)]
    by_sides = 1 << len(others)
    by_arcs = sum(math.comb(m, r) for r in range(min(k, m) + 1))
    if min(by_sides, by_arcs) > limit:
        raise ResourceLimitError(
            f"minimal-cut enumeration needs {min(by_sides, by_arcs)} steps (limit {limit})"
        )
    found = []
    if by_sides <= by_arcs:
        for r in range(len(others) + 1):
            for extra in itertools.combinations(others, r):
                side = frozenset((s, *extra))
                cut = _out_arcs(g, side)
                if len(cut) > k:
                    continue
                if source_side(ctx, cut) == side and is_minimal_cut(ctx, cut):
                    found.append(cut)
    else:
        arcs = sorted(g.arc_set)
        for r in range(min(k, m) + 1):
            for cut in itertools.combinations(arcs, r):
                if is_minimal_cut(ctx, cut):
                    found.append(cut)
    return sorted(found)


def is_important_separator(ctx: CutContext, cut: Iterable[Arc], *, strict: bool = False) -> bool:
    """Definition check: ``cut`` is a minimal cut and no other cut with at most
    as many arcs keeps a superset of its source side reachable.

    Any such competitor ``C'`` can be replaced by the arcs leaving its own
    source side, so it suffices to try every vertex set ``S'`` containing
    the source side of ``cut`` and avoiding ``t``.  With ``strict`` the
    competitor must reach strictly more instead of merely being different;
    the two readings coincide for minimal cuts.
    """
    cut = tuple(sorted(set(cut)))
    if not is_minimal_cut(ctx, cut):
        return False
    g, t = ctx.graph, ctx.t
    side = source_side(ctx, cut)
    rest = [v for v in range(g.n) if v not in side and v != t]
    if len(rest) > 22:
        raise ResourceLimitError(f"importance check would try 2^{len(rest)} source sides")
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            rival = _out_arcs(g, side | frozenset(extra))
            if len(rival) > len(cut):
                continue
            if strict:
                if source_side(ctx, rival) != side:
                    return False
            elif rival != cut:
                return False
    return True


def _dominates(ctx: CutContext, a: Cut, a_side: frozenset[int], b: Cut, b_side: frozenset[int]) -> bool:
    return a != b and len(a) <= len(b) and b_side <= a_side


def enum_important_separators(ctx: CutContext) -> list[Cut]:
    """All important ``s``-``t`` separators with at most ``k`` arcs.

    Branches on an arc leaving the furthest minimum cut: either the arc is
    in the separator, or its head joins the source side.  Each branch raises
    the cut value or spends budget, so the tree has depth at most ``2k``.
    Candidates that are not minimal, or are dominated by another candidate,
    are discarded.
    """
    g, t = ctx.graph, ctx.t
    candidates: set[Cut] = set()

    def branch(sources: frozenset[int], removed: frozenset[Arc], budget: int) -> None:
        cut = min_set_cut(g, sources, t, budget, removed_arcs=removed, furthest=True)
        if cut is None:
            return
        if cut.size == 0:
            candidates.add(tuple(sorted(removed)))
            return
        u, v = cut.arcs[0]
        branch(cut.source_side, removed | {(u, v)}, budget - 1)
        if v != t:
            branch(cut.source_side | {v}, removed, budget)

    branch(frozenset({ctx.s}), frozenset(), ctx.k)
    minimal = [(c, source_side(ctx, c)) for c in candidates if is_minimal_cut(ctx, c)]
    kept = sorted(
        c
        for c, side in minimal
        if not any(_dominates(ctx, d, d_side, c, side) for d, d_side in minimal)
    )
    if len(kept) > 4 ** ctx.k:
        raise BoundViolation(f"{len(kept)} important separators of size <= {ctx.k} exceed 4^{ctx.k}")
    return kept


def push_to_important(ctx: CutContext, cut: Iterable[Arc]) -> Cut:
    """An important separator no larger than ``cut`` whose source side
    contains that of ``cut``; the one with the largest source side wins,
    then the lexicographically least."""
    cut = tuple(sorted(set(cut)))
    if not is_cut(ctx, cut):
        raise InputError("not an s-t cut")
    if len(cut) > ctx.k:
        raise InputError(f"cut has {len(cut)} arcs, cap is {ctx.k}")
    side = source_side(ctx, cut)
    best = None
    for sep in enum_important_separators(ctx.with_k(len(cut))):
        sep_side = source_side(ctx, sep)
        if side <= sep_side:
            key = (-len(sep_side), sep)
            if best is None or key < best[0]:
                best = (key, sep)
    if best is None:
        raise BoundViolation("no important separator dominates the given cut")
    return best[1]


def participating_arcs(ctx: CutContext) -> tuple[Arc, ...]:
    """Arcs lying in at least one inclusion-minimal cut of size at most ``k``."""
    return tuple(sorted({a for cut in enum_minimal_cuts(ctx) for a in cut}))


@dataclass(frozen=True)
class Core:
    """A k-cut-minimal graph and, for each of its vertices, the original id."""

    context: CutContext
    kept: tuple[int, ...]

    @property
    def graph(self) -> Digraph:
        return self.context.graph


def cut_minimal_core(ctx: CutContext) -> Core:
    """Bypass, one at a time, the lowest vertex other than ``s`` and ``t``
    touching no participating arc, until none is left."""
    g, s, t = ctx.graph, ctx.s, ctx.t
    kept = list(range(g.n))
    while True:
        here = CutContext(g, s, t, ctx.k)
        touched = {v for arc in participating_arcs(here) for v in arc}
        idle = [v for v in range(g.n) if v not in (s, t) and v not in touched]
        if not idle:
            return Core(here, tuple(kept))
        v = idle[0]
        g = bypass_vertex(g, v, terminals=(s, t))
        s -= s > v
        t -= t > v
        del kept[v]


def is_k_cut_minimal(ctx: CutContext) -> bool:
    touched = {v for arc in participating_arcs(ctx) for v in arc}
    return all(v in touched for v in range(ctx.graph.n) if v not in (ctx.s, ctx.t))


class WellLinked(NamedTuple):
    ok: bool
    violation: Optional[tuple[frozenset[int], frozenset[int]]] = None

    def __bool__(self) -> bool:
        return self.ok


def is_well_linked(
    g: Digraph, terminals: Iterable[int], *, max_size: int = DEFAULT_MAX_TERMINALS
) -> WellLinked:
    """For all equal-size ``X, Y`` within ``terminals``, look for ``|X|``
    vertex-disjoint ``X -> Y`` paths avoiding the rest of ``terminals``.

    Pairs are tried by size, then lexicographically; the first failure is
    returned as the violation.
    """
    ts = sorted(set(terminals))
    for v in ts:
        g.check_vertex(v)
    if len(ts) > max_size:
        raise ResourceLimitError(f"|T| = {len(ts)} exceeds the well-linkedness limit {max_size}")
    full = frozenset(ts)
    for r in range(1, len(ts) + 1):
        subsets = [frozenset(c) for c in itertools.combinations(ts, r)]
        for xs in subsets:
            for ys in subsets:
                if vertex_disjoint_paths(g, xs, ys, full - (xs | ys)) < r:
                    return WellLinked(False, (xs, ys))
    return WellLinked(True)


@dataclass(frozen=True)
class Sunflower:
    core: frozenset
    petals: tuple[frozenset, ...]

    def is_valid(self) -> bool:
        return all(a & b == self.core for a, b in itertools.combinations(self.petals, 2))


def find_sunflower(family: Iterable[Iterable], target: int) -> Optional[Sunflower]:
    """A sunflower with more than ``target`` petals, or ``None``.

    Greedy Erdos-Rado: a maximal pairwise-disjoint subfamily is a sunflower
    with empty core; if it is too small, every set meets its union, so some
    element is popular and we recurse on the sets containing it.  Success is
    guaranteed once the family has more than ``d! * target^d`` distinct
    ``d``-sets.
    """
    sets = sorted({frozenset(s) for s in family}, key=lambda s: sorted(map(repr, s)))
    sizes = {len(s) for s in sets}
    if len(sizes) > 1:
        raise InputError(f"sets of unequal sizes {sorted(sizes)}")
    return _sunflower(sets, target)


def _sunflower(sets: list[frozenset], target: int) -> Optional[Sunflower]:
    if len(sets) <= target:
        return None
    disjoint: list[frozenset] = []
    used: set = set()
    for s in sets:
        if not (s & used):
            disjoint.append(s)
            used |= s
    if len(disjoint) > target:
        return Sunflower(frozenset(), tuple(disjoint))
    counts = Counter(x for s in sets for x in s)
    for x, _ in sorted(counts.items(), key=lambda kv: (-kv[1], repr(kv[0]))):
        if counts[x] <= target:
            break
        inner = _sunflower([s - {x} for s in sets if x in s], target)
        if inner is not None:
            return Sunflower(inner.core | {x}, tuple(p | {x} for p in inner.petals))
    return None


class Bounds(NamedTuple):
    g: int
    h: int


def anti_isolation_bound(k: int) -> int:
    """``(k + 1) * 4^(k + 1)``."""
    return (k + 1) * 4 ** (k + 1)


def bounds(k: int) -> Bounds:
    """The anti-isolation bound ``g`` and an explicit size ``h`` above which a
    family of participating arcs is guaranteed to have a splitting cut.

    ``h`` adds up, for both sides of the cut, the ``g``-fold arc multiplicity
    times ``d! g^d`` distinct ``d``-sets for every ``1 <= d <= 2k``.
    """
    if k < 0:
        raise InputError("negative k")
    g = anti_isolation_bound(k)
    h = 2 * g * sum(math.factorial(d) * g**d for d in range(1, 2 * k + 1))
    return Bounds(g, h)


@dataclass
class AntiIsolationReport:
    r: int
    k: int
    bound: int
    matrix: list[list[bool]] = field(repr=False)
    failures: list[tuple[int, int]]

    @property
    def premise_ok(self) -> bool:
        return not self.failures

    @property
    def margin(self) -> int:
        return self.bound - self.r


def check_anti_isolation(
    g: Digraph, s: int, targets: Sequence[int], cuts: Sequence[Iterable[Arc]], k: int
) -> AntiIsolationReport:
    """Check the isolation premise (``v_j`` reachable in ``G - C_i`` iff
    ``i = j``) and, when it holds, that ``r <= (k + 1) 4^(k + 1)``.

    Premise failures are reported; a bound failure under a valid premise
    raises :class:`BoundViolation`.
    """
    g.check_vertex(s)
    if len(targets) != len(cuts):
        raise InputError(f"{len(targets)} targets but {len(cuts)} cuts")
    cuts = [frozenset(c) for c in cuts]
    for c in cuts:
        if len(c) > k:
            raise InputError(f"cut {sorted(c)} has more than {k} arcs")
    matrix = []
    failures = []
    for i, c in enumerate(cuts):
        reach = reachable(g, {s}, removed_arcs=c)
        row = [v in reach for v in targets]
        matrix.append(row)
        failures += [(i, j) for j, hit in enumerate(row) if hit != (i == j)]
    report = AntiIsolationReport(len(targets), k, anti_isolation_bound(k), matrix, failures)
    if report.premise_ok and report.r > report.bound:
        raise BoundViolation(f"{report.r} mutually isolating cuts of size <= {k} exceed {report.bound}")
    return report


def check_reverse_anti_isolation(
    g: Digraph, t: int, targets: Sequence[int], cuts: Sequence[Iterable[Arc]], k: int
) -> AntiIsolationReport:
    """The same check for "``v_j`` reaches ``t`` in ``G - C_i`` iff ``i = j``",
    done on the reversed graph."""
    flipped = [[(v, u) for u, v in c] for c in cuts]
    return check_anti_isolation(reverse_graph(g), t, targets, flipped, k)


def max_isolating_family(g: Digraph, s: int, k: int) -> tuple[tuple[int, ...], tuple[Cut, ...]]:
    """A largest family of targets and cuts satisfying the isolation
    premise, by exhaustive search over arc subsets and target sets."""
    arcs = sorted(g.arc_set)
    sides: dict[frozenset[int], Cut] = {}
    for r in range(min(k, len(arcs)) + 1):
        for cut in itertools.combinations(arcs, r):
            sides.setdefault(reachable(g, {s}, removed_arcs=cut), cut)
    others = [v for v in range(g.n) if v != s]
    for r in range(len(others), 0, -1):
        for chosen in itertools.combinations(others, r):
            wanted = frozenset(chosen)
            picks = []
            for v in chosen:
                hit = next((c for side, c in sides.items() if side & wanted == {v}), None)
                if hit is None:
                    break
                picks.append(hit)
            else:
                return chosen, tuple(picks)
    # A single target needs no cut at all: s itself is always reachable.
    return (s,), ((),)


def find_splitting_cut(ctx: CutContext, arcs: Iterable[Arc]) -> Optional[Cut]:
    """First minimal cut (in sorted order) leaving more than ``k`` arcs of the
    family on each side: tails reachable from ``s``, heads reaching ``t``."""
    family = frozenset(arcs)
    cuts = enum_minimal_cuts(ctx)
    participating = {a for c in cuts for a in c}
    if not family <= participating:
        raise InputError("family contains arcs that lie in no minimal cut of size <= k")
    for cut in cuts:
        rest = family - set(cut)
        fwd = source_side(ctx, cut)
        back = reaching(ctx.graph, {ctx.t}, removed_arcs=cut)
        if sum(u in fwd for u, _ in rest) > ctx.k and sum(v in back for _, v in rest) > ctx.k:
            return cut
    return None


def grid_with_terminals(rows: int, cols: int, orient: Sequence[bool]) -> tuple[Digraph, int, int]:
    """A ``rows x cols`` grid whose edges are oriented by ``orient`` (``True`` =
    rightwards/downwards), with ``s`` feeding the left column and ``t`` fed by
    the right column.  Returns the digraph, ``s`` and ``t``."""
    vid = lambda r, c: r * cols + c  # noqa: E731
    slots = [(vid(r, c), vid(r, c + 1)) for r in range(rows) for c in range(cols - 1)]
    slots += [(vid(r, c), vid(r + 1, c)) for r in range(rows - 1) for c in range(cols)]
    if len(orient) != len(slots):
        raise InputError(f"grid has {len(slots)} edges, got {len(orient)} directions")
    arcs = [(u, v) if f else (v, u) for (u, v), f in zip(slots, orient)]
    s, t = rows * cols, rows * cols + 1
    arcs += [(s, vid(r, 0)) for r in range(rows)]
    arcs += [(vid(r, cols - 1), t) for r in range(rows)]
    return Digraph(rows * cols + 2, tuple(arcs)), s, t


def hunt_cut_minimal_grids(
    rows: int, cols: int, k: int, samples: int, seed: int
) -> list[tuple[bool, ...]]:
    """Random grid orientations that turn out k-cut-minimal."""
    rng = random.Random(seed)
    n_edges = rows * (cols - 1) + (rows - 1) * cols
    hits = []
    for _ in range(samples):
        orient = tuple(rng.random() < 0.5 for _ in range(n_edges))
        g, s, t = grid_with_terminals(rows, cols, orient)
        if is_k_cut_minimal(CutContext(g, s, t, k)):
            hits.append(orient)
    return hits
