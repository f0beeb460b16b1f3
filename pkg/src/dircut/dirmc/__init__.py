"""Weighted directed multicut: model, exact solver, the PSI reduction and
its witness maps, weight expansion, and directed path decompositions."""

from .instance import Cutset, DirMcInstance, verify_multicut
from .pathwidth import (
    DecompositionCheck,
    DirectedPathDecomposition,
    build_pathwidth2_decomposition,
    validate_path_decomposition,
)
from .reduction import (
    expand_weights,
    extract_hom_from_cutset,
    lift_hom_to_cutset,
    reduce_psi_to_dirmc,
)
from .solver import DEFAULT_MAX_EXHAUSTIVE, DEFAULT_MAX_NODES, solve_dirmc_exact

__all__ = [
    "DEFAULT_MAX_EXHAUSTIVE",
    "DEFAULT_MAX_NODES",
    "Cutset",
    "DecompositionCheck",
    "DirMcInstance",
    "DirectedPathDecomposition",
    "build_pathwidth2_decomposition",
    "expand_weights",
    "extract_hom_from_cutset",
    "lift_hom_to_cutset",
    "reduce_psi_to_dirmc",
    "solve_dirmc_exact",
    "validate_path_decomposition",
    "verify_multicut",
]
