"""
Replaying the splitting obstructions
====================================

Each cell attached while building the manifold meets every summand
built so far.  The splitting goes through when each of those connecting
maps lands in a zero group.
"""

from equitree import Weight, build, replay_tree, validate
from equitree.obstruct import cp2_orderings, replay_cp2_orders

# One record per (attached orbit, current summand).
tree = validate(build(15, "I", [(0, None, 1, 5, 15), (1, 0, 4, 0, 5)]))
rp = replay_tree(tree)
for rec in rp.records:
    print(rec.dumps())
print("all vanish:", rp.ok)

# For a single CP^2 with a = b mod p the order of the cells matters.
w = Weight(1, 4, 3)
for order in cp2_orderings(w):
    print(order, replay_cp2_orders(w, order)[0].verdict)
