"""Deciding when ``pi_alpha`` of the constant-Z Eilenberg-MacLane spectrum vanishes."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .reps import VirtualRep, dim, divisors, fixed_dim


class MackeyName(Enum):
    CONSTANT_Z = "Z"
    DUAL_Z = "Z*"
    BRACKET_ZMODP = "Z/p"
    ZERO = "0"


@dataclass(frozen=True)
class Verdict:
    tag: str  # "vanishes" | "inconclusive" | "nonzero"
    group: MackeyName | None = None
    prime: int | None = None

    @property
    def vanishes(self) -> bool:
        return self.tag == "vanishes"

    def __str__(self) -> str:
        if self.tag != "nonzero":
            return self.tag
        if self.group is MackeyName.BRACKET_ZMODP:
            return f"nonzero:Z/{self.prime}"
        return f"nonzero:{self.group.value}"


VANISHES = Verdict("vanishes")
INCONCLUSIVE = Verdict("inconclusive")


def is_prime(n: int) -> bool:
    return n > 1 and all(n % q for q in range(2, int(n ** 0.5) + 1))


def criterion_vanishes(alpha: VirtualRep) -> Verdict:
    """Sufficient condition for ``pi_alpha(HZ) = 0`` over an odd cyclic group.

    ``dim(alpha)`` must be odd and, for every pair ``h | k | m``, a fixed
    dimension above -1 at ``C_h`` forces fixed dimension at least -1 at
    ``C_k``.  Failure means only that nothing is claimed.
    """
    m = alpha.order
    if m % 2 == 0:
        raise ValueError(f"group order must be odd, got {m}")
    if dim(alpha) % 2 == 0:
        return INCONCLUSIVE
    divs = divisors(m)
    fixed = {d: fixed_dim(alpha, d) for d in divs}
    for h in divs:
        if fixed[h] > -1:
            if any(fixed[k] < -1 for k in divs if k % h == 0):
                return INCONCLUSIVE
    return VANISHES


def pi_cp(alpha: VirtualRep, p: int | None = None) -> MackeyName:
    """The ``C_p`` homotopy Mackey functor of ``HZ`` at ``alpha``."""
    p = alpha.order if p is None else p
    if alpha.order != p or not is_prime(p):
        raise ValueError(f"pi_cp needs a prime order representation, got order {alpha.order}")
    a, f = dim(alpha), fixed_dim(alpha, p)
    if a == 0:
        return MackeyName.CONSTANT_Z if f >= 0 else MackeyName.DUAL_Z
    if a < 0 and f >= 0 and a % 2 == 0:
        return MackeyName.BRACKET_ZMODP
    if a > 0 and f < -1 and a % 2 == 1:
        return MackeyName.BRACKET_ZMODP
    return MackeyName.ZERO


def table_verdict(alpha: VirtualRep) -> Verdict:
    name = pi_cp(alpha)
    if name is MackeyName.ZERO:
        return VANISHES
    return Verdict("nonzero", name, alpha.order)


def obstruction_grading(beta: VirtualRep, gamma: VirtualRep, level: int) -> VirtualRep:
    """``beta - gamma - 1`` restricted to ``C_level``.

    ``beta`` and ``gamma`` may live over different groups as long as both
    orders are multiples of ``level``.
    """
    return beta.restrict(level) - gamma.restrict(level) - 1


def obstruction_verdict(beta: VirtualRep, gamma: VirtualRep, level: int) -> Verdict:
    alpha = obstruction_grading(beta, gamma, level)
    if is_prime(level):
        return table_verdict(alpha)
    return criterion_vanishes(alpha)
