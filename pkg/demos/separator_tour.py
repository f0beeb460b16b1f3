# Important separators, cut-minimal cores and the bounds around them.

from dircut.graph import Digraph
from dircut.sepstruct import (
    CutContext,
    bounds,
    cut_minimal_core,
    enum_important_separators,
    enum_minimal_cuts,
    find_sunflower,
    is_well_linked,
    participating_arcs,
)

# A diamond 0 -> {1, 2} -> 3.
diamond = Digraph(4, ((0, 1), (0, 2), (1, 3), (2, 3)))
ctx = CutContext(diamond, 0, 3, 2)
print("minimal cuts:", enum_minimal_cuts(ctx))
print("important:", enum_important_separators(ctx))

# With the chord 0 -> 2 every cut needs two arcs, so for k = 1 nothing
# participates and the core collapses.
chord = Digraph(3, ((0, 1), (1, 2), (0, 2)))
ctx = CutContext(chord, 0, 2, 1)
print("participating:", participating_arcs(ctx))
core = cut_minimal_core(ctx)
print("core arcs:", core.graph.arcs)

print(is_well_linked(Digraph(3, ((0, 1), (1, 2))), [0, 1, 2]))

family = [frozenset({0, i}) for i in range(1, 6)]
print(find_sunflower(family, 3))

for k in range(3):
    b = bounds(k)
    print(f"k={k}: g={b.g} h={b.h}")
