# Planting a partitioned subgraph instance and pushing it through the
# directed multicut reduction.

from dircut.dirmc import (
    build_pathwidth2_decomposition,
    extract_hom_from_cutset,
    lift_hom_to_cutset,
    reduce_psi_to_dirmc,
    solve_dirmc_exact,
    validate_path_decomposition,
)
from dircut.psi import gen_psi_planted, planted_witness, solve_psi

pattern = [(1, 2)]
inst = gen_psi_planted(2, pattern, seed=3)
phi = planted_witness(2, pattern, seed=3)
print("host classes:", inst.classes)
print("planted map:", phi)

red = reduce_psi_to_dirmc(inst, M=2)
print("vertices", red.graph.n, "pairs", len(red.terminal_pairs), "budget", red.budget)

# The planted map gives a cut of exactly the budget.
cut = lift_hom_to_cutset(inst, phi, red)
print("lifted cut", sorted(cut.vertices), "weight", cut.weight)
print("read back:", extract_hom_from_cutset(red, cut, inst))

best = solve_dirmc_exact(red)
print("solver weight", best.weight, "->", extract_hom_from_cutset(red, best, inst))
print("psi solver agrees:", solve_psi(inst) is not None)

d = build_pathwidth2_decomposition(red)
print(len(d.bags), "bags, width", validate_path_decomposition(red.graph, d).width)
