"""Partitioned Subgraph Isomorphism: instances, normalization, a brute-force
solver and a planted-instance generator.

A pattern graph ``H`` on vertices ``1..ell`` and a host graph ``G`` whose
vertex set is split into one colour class per pattern vertex.  A solution
maps every pattern vertex ``i`` to some vertex of class ``V_i`` so that
pattern edges land on host edges.

In a normalized instance every class has exactly ``n`` members, and class
``i`` is the ordered tuple ``classes[i - 1]``; the vertex in position
``a`` (1-based) is written ``v^i_a``.  Homomorphisms are tuples of
those 1-based positions: ``phi[i - 1] = a``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import InputError

Homomorphism = tuple[int, ...]


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class PsiInstance:
    classes: tuple[tuple[int, ...], ...]
    pattern_edges: frozenset[tuple[int, int]]
    host_edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        classes = tuple(tuple(c) for c in self.classes)
        object.__setattr__(self, "classes", classes)
        ell = len(classes)
        pattern = set()
        for i, j in self.pattern_edges:
            if i == j:
                raise InputError(f"pattern self-loop at {i}")
            if not (1 <= i <= ell and 1 <= j <= ell):
                raise InputError(f"pattern edge {{{i}, {j}}} references an unknown pattern vertex")
            pattern.add(_edge(i, j))
        object.__setattr__(self, "pattern_edges", frozenset(pattern))
        host = set()
        for u, v in self.host_edges:
            if u == v:
                raise InputError(f"host self-loop at {u}")
            host.add(_edge(u, v))
        object.__setattr__(self, "host_edges", frozenset(host))
        members = [u for c in classes for u in c]
        if len(set(members)) != len(members):
            raise InputError("colour classes overlap")
        known = set(members)
        for u, v in host:
            if u not in known or v not in known:
                raise InputError(f"host edge {{{u}, {v}}} touches a vertex outside every class")

    @property
    def ell(self) -> int:
        return len(self.classes)

    @property
    def k(self) -> int:
        return len(self.pattern_edges)

    @property
    def n(self) -> int:
        """Common class size; only meaningful for normalized instances."""
        sizes = {len(c) for c in self.classes}
        if len(sizes) != 1:
            raise InputError("classes have unequal sizes; normalize first")
        return sizes.pop()

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.ell
        for i, j in self.pattern_edges:
            deg[i - 1] += 1
            deg[j - 1] += 1
        return tuple(deg)

    @cached_property
    def ordered_pairs(self) -> tuple[tuple[int, int], ...]:
        """Ordered pairs ``(i, j)`` with ``ij`` a pattern edge, lexicographically."""
        return tuple(sorted(p for i, j in self.pattern_edges for p in ((i, j), (j, i))))

    def is_normalized(self) -> bool:
        if not self.classes:
            return True
        sizes = {len(c) for c in self.classes}
        return len(sizes) == 1 and 0 not in sizes and all(d > 0 for d in self.degrees)

    def require_normalized(self) -> None:
        if not self.is_normalized():
            raise InputError("instance is not normalized (unequal or empty classes, or isolated pattern vertices)")

    def host_vertex(self, i: int, a: int) -> int:
        return self.classes[i - 1][a - 1]

    def has_host_edge(self, i: int, a: int, j: int, b: int) -> bool:
        """Whether ``v^i_a v^j_b`` is a host edge."""
        return _edge(self.host_vertex(i, a), self.host_vertex(j, b)) in self.host_edges


def normalize_psi(raw: PsiInstance) -> Optional[PsiInstance]:
    """Drop isolated pattern vertices, pad classes to a common size.

    Returns ``None`` for a trivial no-instance (some class is empty).
    Surviving pattern vertices are renumbered ``1..ell`` in their original
    order.  Padding vertices are fresh ids above every existing host id and
    are isolated.
    """
    if any(len(c) == 0 for c in raw.classes):
        return None
    keep = [i for i in range(1, raw.ell + 1) if raw.degrees[i - 1] > 0]
    renumber = {old: new for new, old in enumerate(keep, start=1)}
    classes = [list(raw.classes[i - 1]) for i in keep]
    size = max((len(c) for c in classes), default=0)
    next_id = max((u for c in raw.classes for u in c), default=-1) + 1
    for c in classes:
        while len(c) < size:
            c.append(next_id)
            next_id += 1
    kept_hosts = {u for c in classes for u in c}
    host = frozenset(e for e in raw.host_edges if e[0] in kept_hosts and e[1] in kept_hosts)
    pattern = frozenset((renumber[i], renumber[j]) for i, j in raw.pattern_edges)
    return PsiInstance(tuple(tuple(c) for c in classes), pattern, host)


def _check_hom(inst: PsiInstance, h: Sequence[int]) -> None:
    if len(h) != inst.ell:
        raise InputError(f"homomorphism has {len(h)} entries, pattern has {inst.ell} vertices")
    n = inst.n
    for i, a in enumerate(h, start=1):
        if not (isinstance(a, int) and 1 <= a <= n):
            raise InputError(f"phi({i}) = {a!r} is outside 1..{n}")


def is_partitioned_homomorphism(inst: PsiInstance, h: Sequence[int]) -> bool:
    _check_hom(inst, h)
    return all(inst.has_host_edge(i, h[i - 1], j, h[j - 1]) for i, j in inst.pattern_edges)


def solve_psi(inst: PsiInstance) -> Optional[Homomorphism]:
    """First valid homomorphism in lexicographic order, or ``None``.

    Plain enumeration of all ``n ** ell`` assignments, cut short at the first
    hit; intended as ground truth, not for speed.
    """
    inst.require_normalized()
    if inst.ell == 0:
        return ()
    edges = sorted(inst.pattern_edges)
    for phi in itertools.product(range(1, inst.n + 1), repeat=inst.ell):
        if all(inst.has_host_edge(i, phi[i - 1], j, phi[j - 1]) for i, j in edges):
            return phi
    return None


def _pattern_size(pattern_edges: Iterable[tuple[int, int]]) -> tuple[frozenset, int]:
    edges = frozenset(_edge(i, j) for i, j in pattern_edges)
    if not edges:
        raise InputError("pattern graph needs at least one edge")
    vertices = {v for e in edges for v in e}
    ell = max(vertices)
    if vertices != set(range(1, ell + 1)):
        raise InputError("pattern vertices must be exactly 1..ell with no isolated vertex")
    return edges, ell


def random_psi(
    n: int,
    pattern_edges: Iterable[tuple[int, int]],
    seed: int,
    density: float = 0.5,
    plant: bool = False,
) -> tuple[PsiInstance, Optional[Homomorphism]]:
    """Random instance with host vertex ``v^i_a`` numbered ``(i - 1) * n + a - 1``.

    Every potential edge between classes ``i`` and ``j`` of a pattern edge
    appears independently with probability ``density``.  With ``plant`` a
    random assignment is drawn first and its edges are forced in; it is
    returned alongside the instance.
    """
    if n < 1:
        raise InputError("class size must be at least 1")
    edges, ell = _pattern_size(pattern_edges)
    rng = random.Random(seed)
    phi = tuple(rng.randint(1, n) for _ in range(ell)) if plant else None
    vid = lambda i, a: (i - 1) * n + a - 1  # noqa: E731
    host = set()
    for i, j in sorted(edges):
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if rng.random() < density:
                    host.add((vid(i, a), vid(j, b)))
        if phi is not None:
            host.add((vid(i, phi[i - 1]), vid(j, phi[j - 1])))
    classes = tuple(tuple(vid(i, a) for a in range(1, n + 1)) for i in range(1, ell + 1))
    return PsiInstance(classes, edges, frozenset(host)), phi


def gen_psi_planted(
    n: int, pattern_edges: Iterable[tuple[int, int]], seed: int, noise: float = 0.3
) -> PsiInstance:
    """A yes-instance: a random planted homomorphism plus random noise edges."""
    inst, _ = random_psi(n, pattern_edges, seed, density=noise, plant=True)
    return inst


def planted_witness(
    n: int, pattern_edges: Iterable[tuple[int, int]], seed: int, noise: float = 0.3
) -> Homomorphism:
    """The homomorphism planted by :func:`gen_psi_planted` for the same arguments."""
    _, phi = random_psi(n, pattern_edges, seed, density=noise, plant=True)
    assert phi is not None
    return phi


def small_patterns(max_ell: int, max_k: int) -> list[frozenset[tuple[int, int]]]:
    """Every labelled pattern on ``1..ell`` (``ell <= max_ell``) with at most
    ``max_k`` edges and no isolated vertex."""
    out = []
    for ell in range(2, max_ell + 1):
        pairs = list(itertools.combinations(range(1, ell + 1), 2))
        for k in range(1, max_k + 1):
            for chosen in itertools.combinations(pairs, k):
                if {v for e in chosen for v in e} == set(range(1, ell + 1)):
                    out.append(frozenset(chosen))
    return out


def all_host_variants(n: int, pattern_edges: Iterable[tuple[int, int]]) -> Iterable[PsiInstance]:
    """Every host graph that differs on the classes joined by pattern edges.

    Host edges between classes not joined in the pattern never influence the
    answer, so they are omitted.
    """
    edges, ell = _pattern_size(pattern_edges)
    vid = lambda i, a: (i - 1) * n + a - 1  # noqa: E731
    slots = [
        (vid(i, a), vid(j, b))
        for i, j in sorted(edges)
        for a in range(1, n + 1)
        for b in range(1, n + 1)
    ]
    classes = tuple(tuple(vid(i, a) for a in range(1, n + 1)) for i in range(1, ell + 1))
    for mask in range(1 << len(slots)):
        host = frozenset(s for bit, s in enumerate(slots) if mask >> bit & 1)
        yield PsiInstance(classes, edges, host)
