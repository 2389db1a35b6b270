"""
Computing Bredon homology from cells
====================================

Representation spheres are built cell by cell with an explicit generator
action.  Homology with constant coefficients at each level comes from the
invariant chains and Smith normal form.
"""

from equitree import VirtualRep, build, decompose, validate
from equitree.mackey import (decomposition_homology, induce_complex, level_homology,
                             sphere_complex, verify_table)

# S^{lambda} over C_3: torsion at the top level, a plain 2-sphere underneath.
cx = sphere_complex(VirtualRep.lam(3, 1))
cx.check()
for level in (1, 3):
    print(level, [(v.degree, v.free, v.torsion) for v in level_homology(cx, level)])

# Inducing up from C_5 to C_15 spreads the sphere over three cosets.
ind = induce_complex(sphere_complex(VirtualRep.lam(5, 1)), 15)
print([v.to_json() for v in level_homology(ind, 5, range(0, 3))])

# The prime-order table agrees with the cellular computation.
for p in (3, 5, 7):
    r = verify_table(p)
    print(p, r.checked, len(r.mismatches))

# Level data of a whole decomposition.
dec = decompose(validate(build(9, "I", [(0, None, 1, 2, 9), (1, 0, 1, 7, 9)])))
for level in (1, 3, 9):
    print(level, [(v.free, v.torsion) for v in decomposition_homology(dec, level)])
