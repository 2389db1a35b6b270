"""
Deciding when a homotopy group vanishes
=======================================

A connecting map between representation spheres is null when the group
it lives in is zero.  Over a cyclic group of odd order this is decided
by fixed-point dimensions alone.
"""

from equitree import VirtualRep, criterion_vanishes, fixed_dim, hz_canonical, pi_cp, table_verdict

# A virtual representation of C_15: two rotations, minus one rotation and a line.
alpha = VirtualRep.lam(15, 1, 2) - VirtualRep.lam(15, 14) - 1
print(alpha)

# Only the fixed dimensions matter, so exponents can be replaced by their gcd with 15.
print(hz_canonical(alpha))
print({d: fixed_dim(alpha, d) for d in (1, 3, 5, 15)})

# Odd total dimension and no upward jump across the divisor lattice: it vanishes.
print(criterion_vanishes(alpha))

# Over a prime order the full table is available; the criterion is only sufficient.
beta = 2 * VirtualRep.lam(3, 1) - 3
print(criterion_vanishes(beta), table_verdict(beta), pi_cp(beta).name)
