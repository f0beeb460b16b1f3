"""Compare a PSI oracle against the oracle of a reduced problem.

Each check reduces one PSI instance, solves both sides exactly, and on
yes-instances also pulls a homomorphism back out of the reduced witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .dirmc import extract_hom_from_cutset, reduce_psi_to_dirmc, solve_dirmc_exact
from .errors import ContractViolation, InputError
from .psi import PsiInstance, is_partitioned_homomorphism, random_psi, small_patterns, solve_psi
from .stor import DEFAULT_MAX_EDGES, extract_hom_from_orientation, reduce_psi_to_stor, solve_stor_exact

PROBLEMS = ("dirmc", "stor")


@dataclass(frozen=True)
class Check:
    psi_yes: bool
    reduced_yes: bool
    extracted_ok: Optional[bool]

    @property
    def agrees(self) -> bool:
        return self.psi_yes == self.reduced_yes and self.extracted_ok is not False


@dataclass
class Report:
    total: int = 0
    agree: int = 0
    failures: list[tuple[PsiInstance, Check]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.agree == self.total

    def add(self, inst: PsiInstance, check: Check) -> None:
        self.total += 1
        if check.agrees:
            self.agree += 1
        else:
            self.failures.append((inst, check))

    def summary(self) -> str:
        return f"{self.agree}/{self.total} agree"


def check_instance(
    problem: str, inst: PsiInstance, *, M: int = 2, max_edges: int = DEFAULT_MAX_EDGES
) -> Check:
    psi_yes = solve_psi(inst) is not None
    if problem == "dirmc":
        reduced = reduce_psi_to_dirmc(inst, M)
        witness = cut = solve_dirmc_exact(reduced)
        extract = lambda: extract_hom_from_cutset(reduced, cut, inst)  # noqa: E731
    elif problem == "stor":
        reduced = reduce_psi_to_stor(inst)
        witness = o = solve_stor_exact(reduced, max_edges=max_edges)
        extract = lambda: extract_hom_from_orientation(reduced, o, inst)  # noqa: E731
    else:
        raise InputError(f"unknown problem {problem!r}; expected one of {PROBLEMS}")
    extracted_ok = None
    if witness is not None:
        try:
            extracted_ok = is_partitioned_homomorphism(inst, extract())
        except ContractViolation:
            extracted_ok = False
    return Check(psi_yes, witness is not None, extracted_ok)


def sample_instances(n: int, kmax: int, samples: int, seed: int) -> Iterable[PsiInstance]:
    """Seeded random instances with class size ``n`` over every pattern with
    at most ``kmax`` edges and ``kmax + 1`` vertices."""
    if samples < 0 or kmax < 1 or n < 1:
        raise InputError("need n >= 1, kmax >= 1 and samples >= 0")
    patterns = small_patterns(kmax + 1, kmax)
    rng = random.Random(seed)
    for _ in range(samples):
        pattern = rng.choice(patterns)
        density = rng.choice((0.25, 0.5, 0.75))
        inst, _ = random_psi(n, pattern, rng.randrange(1 << 30), density=density)
        yield inst


def run_roundtrip(
    problem: str,
    instances: Iterable[PsiInstance],
    *,
    M: int = 2,
    max_edges: int = DEFAULT_MAX_EDGES,
) -> Report:
    report = Report()
    for inst in instances:
        report.add(inst, check_instance(problem, inst, M=M, max_edges=max_edges))
    return report
