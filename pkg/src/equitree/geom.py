"""Bookkeeping for the linear blocks CP^2(a,b;m) and S^4(a,b;m)."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .reps import VirtualRep
from .trees import RawTree, Weight, drop_candidates, drop_child_values


def tangential_reps(w: Weight) -> tuple[VirtualRep, VirtualRep, VirtualRep]:
    """Tangent representations at ``[1,0,0]``, ``[0,1,0]``, ``[0,0,1]``."""
    a, b, m = w.a, w.b, w.stab
    return (VirtualRep.lam(m, b - a, -a),
            VirtualRep.lam(m, a - b, -b),
            VirtualRep.lam(m, a, b))


def equivalent_weights(w: Weight) -> set[tuple[int, int]]:
    """All ``(a, b)`` describing the same block: swaps, sign, and the affine moves."""
    m = w.stab
    seen: set[tuple[int, int]] = set()
    todo = [(w.a, w.b)]
    while todo:
        a, b = todo.pop()
        if (a, b) in seen:
            continue
        seen.add((a, b))
        for na, nb in ((b, a), (-a, -b), (a - b, -b), (-a, b - a)):
            pair = (na % m, nb % m)
            if pair not in seen:
                todo.append(pair)
    return seen


def compatible_same_group(w1: Weight, w2: Weight) -> bool:
    """Whether ``CP^2(w1) # CP^2(w2)`` can be formed at a common fixed point."""
    if w1.stab != w2.stab:
        raise ValueError("weights over different groups")
    m = w1.stab
    a, b = w1.a, w1.b
    targets = set()
    for x, y in ((a, -b), (a - b, b), (a, b - a)):
        for s in (1, -1):
            targets.add(((s * x) % m, (s * y) % m))
            targets.add(((s * y) % m, (s * x) % m))
    return bool(equivalent_weights(w2) & targets)


def compatible_subgroup(w: Weight, w_sub: Weight) -> bool:
    """Whether an induced block ``G x_{C_m'} CP^2(w_sub)`` can be summed onto ``CP^2(w)``."""
    ms = w_sub.stab
    if w.stab % ms or ms == w.stab:
        raise ValueError("the second weight must live over a proper subgroup")
    if w_sub.gcd() != 1 or not drop_candidates(w, ms):
        return False
    if ms == 1:
        return True
    if 0 not in (w_sub.a, w_sub.b):
        return False
    return (w_sub.a or w_sub.b) in drop_child_values(w, ms)


class Block(Enum):
    CP2 = "CP2"
    S4 = "S4"


@dataclass(frozen=True)
class FixedCensus:
    isolated_points: int = 0
    sphere_components: int = 0
    whole_space: bool = False

    def euler_characteristic(self, block: Block) -> int:
        if self.whole_space:
            return 3 if block is Block.CP2 else 2
        return self.isolated_points + 2 * self.sphere_components


def fixed_census_block(w: Weight, d: int, block: Block = Block.CP2) -> FixedCensus:
    """Components of the ``C_d``-fixed set of a single block."""
    if w.stab % d:
        raise ValueError(f"{d} does not divide {w.stab}")
    if d == 1:
        return FixedCensus(whole_space=True)
    a, b = w.a % d, w.b % d
    if block is Block.CP2:
        # eigenspaces of the generator on lambda^a + lambda^b + 1
        sizes = {}
        for r in (a, b, 0):
            sizes[r] = sizes.get(r, 0) + 1
        if len(sizes) == 1:
            return FixedCensus(whole_space=True)
        return FixedCensus(isolated_points=sum(1 for s in sizes.values() if s == 1),
                           sphere_components=sum(1 for s in sizes.values() if s == 2))
    fixed_lines = (a == 0) + (b == 0)
    if fixed_lines == 2:
        return FixedCensus(whole_space=True)
    if fixed_lines == 1:
        return FixedCensus(sphere_components=1)
    return FixedCensus(isolated_points=2)


class StepKind(Enum):
    BASE = "base"
    ORBIT = "orbit"
    ROOT_MIDDLE = "root_middle"
    ROOT_TOP = "root_top"


@dataclass(frozen=True)
class FiltrationStep:
    kind: StepKind
    orbit: int
    stab: int
    grading: VirtualRep

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "orbit": self.orbit, "stab": self.stab,
                "grading": str(self.grading)}


def filtration_steps(t: RawTree) -> list[FiltrationStep]:
    """Cells of ``X(T)`` in attaching order.

    Each non-root orbit contributes its punctured block ``P(l^a + l^b)``, a
    sphere ``S^{l^(a-b)}``; deeper orbits sit lower in the filtration, and the
    root's cells come last.
    """
    root = t.root
    m = t.order
    steps = [FiltrationStep(StepKind.BASE, root.id, m, VirtualRep.zero(m))]
    others = sorted((o for o in t.orbits if o.parent is not None), key=lambda o: (-o.level, o.id))
    for o in others:
        steps.append(FiltrationStep(StepKind.ORBIT, o.id, o.stab, VirtualRep.lam(o.stab, o.a - o.b)))
    a0, b0 = root.a, root.b
    if t.tree_type == "I":
        steps.append(FiltrationStep(StepKind.ROOT_MIDDLE, root.id, m, VirtualRep.lam(m, a0 - b0)))
    steps.append(FiltrationStep(StepKind.ROOT_TOP, root.id, m, VirtualRep.lam(m, a0, b0)))
    return steps
