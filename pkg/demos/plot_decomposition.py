"""
Splitting a tree manifold into spheres
======================================

The suspension spectrum of a tree manifold splits as a wedge of
representation spheres and induced spheres.  The split depends on
which hypothesis the tree meets.
"""

from equitree import build, decompose, strata, underlying_betti, validate

# Over C_15 a C_5-orbit of CP^2's contributes an induced sphere.
tree = validate(build(15, "I", [(0, None, 1, 5, 15), (1, 0, 4, 0, 5)]))
dec = decompose(tree)
print(dec.theorem)
print(dec.texts())

# Forgetting the action leaves one point, n(T) two-spheres and a top cell.
print(underlying_betti(dec), strata(tree).n)

# Over a prime order the summands are counted from fixed orbits whose weights agree mod p.
tree = validate(build(3, "I", [(0, None, 1, 2, 3), (1, 0, 1, 1, 3)]))
print(decompose(tree).dumps())
