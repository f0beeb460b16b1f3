"""Exact minimum-weight directed multicut.

Two routes share one contract (minimum weight within budget, ties broken by
the lexicographically least sorted vertex tuple):

* ``branch``: branch and bound.  Some vertex of any surviving terminal path
  must be deleted, so branch over the deletable vertices of a shortest
  surviving path, excluding earlier siblings in later branches so no
  cutset is visited twice.  Prune with a greedy fractional path packing.
  A second include/exclude pass over vertex ids, capped at the optimum,
  recovers the lexicographically least optimal cutset.
* ``exhaustive``: every subset of the deletable vertices.  Only for small
  instances; kept as an independent cross-check.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Optional

from ..errors import InputError, ResourceLimitError
from .instance import Cutset, DirMcInstance, separates_all

DEFAULT_MAX_NODES = 2_000_000
DEFAULT_MAX_EXHAUSTIVE = 24

_INF = float("inf")


class _Search:
    def __init__(self, inst: DirMcInstance, max_nodes: int) -> None:
        g = inst.graph
        self.n = g.n
        self.adj = g.out_adj
        self.pairs = inst.terminal_pairs
        self.weight = [0 if w is None else w for w in inst.weights]
        self.deletable = [False] * g.n
        for v in inst.deletable:
            self.deletable[v] = True
        self.deleted = [False] * g.n
        self.excluded = [False] * g.n
        self.max_nodes = max_nodes
        self.nodes = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise ResourceLimitError(f"multicut search exceeded {self.max_nodes} nodes")

    def _free(self, v: int) -> bool:
        return self.deletable[v] and not self.excluded[v]

    def _path(self, s: int, t: int, residual: Optional[dict] = None) -> Optional[list[int]]:
        """Shortest ``s -> t`` path avoiding deleted vertices (and, with
        ``residual``, free vertices whose residual capacity is used up)."""
        deleted, adj = self.deleted, self.adj
        parent = {s: s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v in parent or deleted[v]:
                    continue
                if residual is not None and residual.get(v, 1) <= 0:
                    continue
                parent[v] = u
                if v == t:
                    path = [t]
                    while path[-1] != s:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                queue.append(v)
        return None

    def lower_bound(self) -> float:
        """Weight of a greedy fractional packing of terminal paths.

        Each path consumes the smallest residual weight among its free
        vertices; the total is at most the weight of any completion of the
        current partial cutset.  A path with no free vertex means no
        completion exists.
        """
        residual: dict[int, int] = {}
        total = 0
        for s, t in self.pairs:
            while True:
                path = self._path(s, t, residual)
                if path is None:
                    break
                free = [v for v in path[1:-1] if self._free(v)]
                if not free:
                    return _INF
                for v in free:
                    residual.setdefault(v, self.weight[v])
                push = min(residual[v] for v in free)
                for v in free:
                    residual[v] -= push
                total += push
        return total

    def _branch_path(self) -> Optional[list[int]]:
        """Free vertices of the surviving terminal path with the fewest of
        them; ``None`` once every pair is separated."""
        best = None
        for s, t in self.pairs:
            path = self._path(s, t)
            if path is None:
                continue
            free = [v for v in path[1:-1] if self._free(v)]
            if best is None or len(free) < len(best):
                best = free
                if not free:
                    break
        return best

    def minimum(self, cap: int) -> Optional[int]:
        """Least cutset weight ``<= cap``, or ``None``."""
        self.best = cap + 1

        def branch(cur: int) -> None:
            self._tick()
            free = self._branch_path()
            if free is None:
                self.best = min(self.best, cur)
                return
            if not free or cur + self.lower_bound() >= self.best:
                return
            excluded_here = []
            for v in free:
                if cur + self.weight[v] < self.best:
                    self.deleted[v] = True
                    branch(cur + self.weight[v])
                    self.deleted[v] = False
                self.excluded[v] = True
                excluded_here.append(v)
            for v in excluded_here:
                self.excluded[v] = False

        branch(0)
        return self.best if self.best <= cap else None

    def _relevant(self) -> set[int]:
        """Vertices lying on some surviving terminal path."""
        out: set[int] = set()
        for s, t in self.pairs:
            fwd = self._reach(s, self.adj)
            if t not in fwd:
                continue
            out |= fwd & self._reach_back(t)
        return out

    def _reach(self, s: int, adj) -> set[int]:
        deleted = self.deleted
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in seen and not deleted[v]:
                    seen.add(v)
                    queue.append(v)
        return seen

    def _reach_back(self, t: int) -> set[int]:
        if not hasattr(self, "_in_adj"):
            radj: list[list[int]] = [[] for _ in range(self.n)]
            for u in range(self.n):
                for v in self.adj[u]:
                    radj[v].append(u)
            self._in_adj = radj
        return self._reach(t, self._in_adj)

    def lex_least(self, target: int) -> list[int]:
        """Lexicographically least cutset of weight exactly ``target``, which
        must be the optimum."""
        order = [v for v in range(self.n) if self.deletable[v] and self.weight[v] <= target]

        def dfs(idx: int, cur: int) -> bool:
            self._tick()
            relevant = self._relevant()
            if not relevant:
                return True
            if cur + self.lower_bound() > target:
                return False
            while idx < len(order) and order[idx] not in relevant:
                idx += 1
            if idx == len(order):
                return False
            v = order[idx]
            if cur + self.weight[v] <= target:
                self.deleted[v] = True
                if dfs(idx + 1, cur + self.weight[v]):
                    return True
                self.deleted[v] = False
            self.excluded[v] = True
            if dfs(idx + 1, cur):
                return True
            self.excluded[v] = False
            return False

        if not dfs(0, 0):
            raise AssertionError("optimum weight not attainable in the lexicographic pass")
        return [v for v in range(self.n) if self.deleted[v]]


def _solve_exhaustive(inst: DirMcInstance, max_exhaustive: int) -> Optional[Cutset]:
    cands = inst.deletable
    if len(cands) > max_exhaustive:
        raise ResourceLimitError(
            f"{len(cands)} deletable vertices exceed the exhaustive limit {max_exhaustive}"
        )
    best: Optional[tuple[int, tuple[int, ...]]] = None
    for size in range(len(cands) + 1):
        for subset in itertools.combinations(cands, size):
            w = sum(inst.weights[v] for v in subset)
            if w > inst.budget or (best is not None and (w, subset) >= best):
                continue
            if separates_all(inst, subset):
                best = (w, subset)
    return None if best is None else inst.cutset(best[1])


def solve_dirmc_exact(
    inst: DirMcInstance,
    *,
    method: str = "branch",
    max_nodes: int = DEFAULT_MAX_NODES,
    max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE,
) -> Optional[Cutset]:
    """Minimum-weight multicut of weight at most the budget, or ``None``.

    Among minimum-weight cutsets the one with the lexicographically least
    sorted vertex tuple is returned.  Raises :class:`ResourceLimitError`
    rather than answer when the search outgrows its limit.
    """
    if method == "exhaustive":
        return _solve_exhaustive(inst, max_exhaustive)
    if method != "branch":
        raise InputError(f"unknown solver method {method!r}")
    search = _Search(inst, max_nodes)
    opt = search.minimum(inst.budget)
    if opt is None:
        return None
    lex = _Search(inst, max_nodes)
    return inst.cutset(lex.lex_least(opt))
