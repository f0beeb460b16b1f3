"""Slow, obviously-correct reference implementations used only by the tests.

None of these import the package's algorithms; they work on plain Python
sets and lists so that agreement with the library means something.
"""

from __future__ import annotations

import itertools
from collections import deque


def reach(n, arcs, sources, removed_vertices=(), removed_arcs=()):
    removed_vertices = set(removed_vertices)
    removed_arcs = set(removed_arcs)
    adj = {v: [] for v in range(n)}
    for u, v in arcs:
        if (u, v) not in removed_arcs:
            adj[u].append(v)
    seen = {s for s in sources if s not in removed_vertices}
    queue = deque(seen)
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen and v not in removed_vertices:
                seen.add(v)
                queue.append(v)
    return seen


def reach_back(n, arcs, sinks, removed_arcs=()):
    return reach(n, [(v, u) for u, v in arcs], sinks, removed_arcs=[(v, u) for u, v in removed_arcs])


# -- PSI ----------------------------------------------------------------------


def psi_backtrack(classes, pattern_edges, host_edges):
    """Any partitioned homomorphism by backtracking over pattern vertices."""
    ell = len(classes)
    host = {frozenset(e) for e in host_edges}
    nbrs = {i: set() for i in range(1, ell + 1)}
    for i, j in pattern_edges:
        nbrs[i].add(j)
        nbrs[j].add(i)
    phi = {}

    def go(i):
        if i > ell:
            return True
        for a, u in enumerate(classes[i - 1], start=1):
            if all(frozenset((u, classes[j - 1][phi[j] - 1])) in host for j in nbrs[i] if j in phi):
                phi[i] = a
                if go(i + 1):
                    return True
                del phi[i]
        return False

    return go(1)


# -- directed multicut -----------------------------------------------------------


def multicut_optimum(n, arcs, pairs, weights, budget):
    """Least total weight of a vertex set separating every pair, capped at
    ``budget``; ``None`` if no such set exists.  Weights ``None`` or above the
    budget mark vertices that cannot be deleted."""
    cands = [v for v in range(n) if weights[v] is not None and weights[v] <= budget]
    best = None
    for r in range(len(cands) + 1):
        for sub in itertools.combinations(cands, r):
            w = sum(weights[v] for v in sub)
            if w > budget or (best is not None and w >= best):
                continue
            if all(t not in reach(n, arcs, [s], removed_vertices=sub) for s, t in pairs):
                best = w
    return best


# -- Steiner orientation -------------------------------------------------------------


def stor_brute(n, arcs, edges, pairs):
    for bits in itertools.product((True, False), repeat=len(edges)):
        oriented = list(arcs) + [(u, v) if b else (v, u) for (u, v), b in zip(edges, bits)]
        if all(t in reach(n, oriented, [s]) for s, t in pairs):
            return True
    return False


# -- arc cuts -------------------------------------------------------------------------


def is_cut(n, arcs, s, t, cut):
    return t not in reach(n, arcs, [s], removed_arcs=cut)


def minimal_cuts(n, arcs, s, t, k):
    """Inclusion-minimal cuts straight from the definition: a cut none of
    whose proper subsets (missing one arc) is a cut."""
    arcs = sorted(set(arcs))
    out = []
    for r in range(min(k, len(arcs)) + 1):
        for cut in itertools.combinations(arcs, r):
            if is_cut(n, arcs, s, t, cut) and not any(
                is_cut(n, arcs, s, t, [a for a in cut if a != b]) for b in cut
            ):
                out.append(cut)
    return sorted(out)


def important_separators(n, arcs, s, t, k):
    """Minimal cuts C such that no other cut C' with |C'| <= |C| has a
    source side containing that of C; all competitors are arc subsets."""
    arcs = sorted(set(arcs))
    all_cuts = [
        c for r in range(min(k, len(arcs)) + 1) for c in itertools.combinations(arcs, r) if is_cut(n, arcs, s, t, c)
    ]
    side = {c: reach(n, arcs, [s], removed_arcs=c) for c in all_cuts}
    out = []
    for c in minimal_cuts(n, arcs, s, t, k):
        if not any(d != c and len(d) <= len(c) and side[c] <= side[d] for d in all_cuts):
            out.append(c)
    return sorted(out)


# -- disjoint paths ------------------------------------------------------------------------


def simple_paths(n, arcs, src, dst, allowed):
    adj = {v: [] for v in range(n)}
    for u, v in arcs:
        adj[u].append(v)
    out = []

    def go(path):
        u = path[-1]
        if u == dst:
            out.append(tuple(path))
            return
        for v in adj[u]:
            if v in allowed and v not in path:
                path.append(v)
                go(path)
                path.pop()

    if src in allowed and dst in allowed:
        go([src])
    return out


def has_linkage(n, arcs, xs, ys, forbidden):
    """Whether |X| fully vertex-disjoint X -> Y paths exist avoiding
    ``forbidden``, by trying path systems one source at a time."""
    xs, ys = sorted(xs), sorted(ys)
    allowed = set(range(n)) - set(forbidden)

    def go(idx, used, free_targets):
        if idx == len(xs):
            return True
        for y in sorted(free_targets):
            for p in simple_paths(n, arcs, xs[idx], y, allowed - used):
                if go(idx + 1, used | set(p), free_targets - {y}):
                    return True
        return False

    return go(0, set(), set(ys))


def well_linked(n, arcs, terminals):
    ts = sorted(terminals)
    for r in range(1, len(ts) + 1):
        for xs in itertools.combinations(ts, r):
            for ys in itertools.combinations(ts, r):
                forbidden = set(ts) - set(xs) - set(ys)
                if not has_linkage(n, arcs, xs, ys, forbidden):
                    return False
    return True
