# The same kind of instance, reduced to Steiner orientation instead.

from dircut.psi import all_host_variants, gen_psi_planted, planted_witness, solve_psi
from dircut.stor import (
    extract_hom_from_orientation,
    lift_hom_to_orientation,
    reduce_psi_to_stor,
    solve_stor_exact,
    verify_orientation,
)

pattern = [(1, 2)]
inst = gen_psi_planted(2, pattern, seed=5)
phi = planted_witness(2, pattern, seed=5)
red = reduce_psi_to_stor(inst)
print(len(red.graph.arcs), "arcs,", len(red.graph.edges), "edges,", len(red.terminal_pairs), "pairs")

o = lift_hom_to_orientation(inst, phi, red)
print("lifted orientation valid:", verify_orientation(red, o))
print("read back:", extract_hom_from_orientation(red, o, inst), "planted:", phi)

# Every host graph on two vertices per class, both ways.
agree = 0
variants = list(all_host_variants(2, pattern))
for v in variants:
    agree += (solve_psi(v) is not None) == (solve_stor_exact(reduce_psi_to_stor(v)) is not None)
print(f"{agree}/{len(variants)} host graphs agree")
