"""
Building and checking weighted trees
====================================

A tree of weights describes an iterated equivariant connected sum of
CP^2 and S^4 blocks.  Not every tree glues; the validator says why.
"""

from equitree import build, reorient, strata, validate, violations

# Root CP^2(1,2;9) with one fixed child and a C_3-orbit below it.
raw = build(9, "I", [(0, None, 1, 2, 9), (1, 0, 1, 7, 9), (2, 1, 1, 0, 3)])
tree = validate(raw)
print(strata(tree))

# Changing the fixed child's weight to (2,2) breaks the gluing rule at the root.
bad = build(9, "I", [(0, None, 1, 2, 9), (1, 0, 2, 2, 9)])
for v in violations(bad):
    print(v.clause, v.orbits, v.message)

# Re-rooting at the fixed child gives a homeomorphic manifold with new weights.
turned = reorient(tree, 1)
for o in turned.orbits:
    print(o.id, o.parent, o.weight)

# Trees round-trip through JSON.
print(tree.dumps())
