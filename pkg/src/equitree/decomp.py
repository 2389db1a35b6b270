"""Wedge decompositions of ``HZ ^ X(T)_+`` for admissible trees."""
from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field

from .reps import VirtualRep, dim, hz_canonical
from .trees import AdmissibleTree, normalize_root, strata

# Theorem tags.  The prime-power arms need the root normalized first.
GENERAL_I = "general-I"
GENERAL_II = "general-II"
ONE_ZERO = "one-zero"
PRIME = "prime"
PRIME_POWER_DIVISIBLE = "prime-power-divisible"
PRIME_POWER = "prime-power"


class NoTheoremApplies(ValueError):
    def __init__(self, message: str, offending: list[int]):
        super().__init__(message)
        self.offending = offending


@dataclass(frozen=True, order=True)
class Summand:
    kind: str  # "unit" | "sphere" | "induced"
    rep: VirtualRep | None = None
    subgroup: int | None = None

    @classmethod
    def unit(cls) -> "Summand":
        return cls("unit")

    @classmethod
    def sphere(cls, rep: VirtualRep) -> "Summand":
        return cls("sphere", hz_canonical(rep))

    @classmethod
    def induced(cls, d: int, rep: VirtualRep) -> "Summand":
        return cls("induced", hz_canonical(rep), d)

    def __str__(self) -> str:
        if self.kind == "unit":
            return "1"
        if self.kind == "sphere":
            return f"S({self.rep})"
        return f"Ind({self.subgroup};{self.rep})"


def orbit_summand(order: int, stab: int, a: int, b: int) -> Summand:
    """Summand contributed by an orbit through its sphere ``S^{l^(a-b)}``."""
    rep = VirtualRep.lam(stab, a - b)
    return Summand.sphere(rep) if stab == order else Summand.induced(stab, rep)


@dataclass(frozen=True)
class Decomposition:
    order: int
    summands: tuple[Summand, ...]
    theorem: str
    trace: str = field(default="", compare=False)

    def texts(self) -> list[str]:
        return sorted(str(s) for s in self.summands)

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "summands": self.texts()}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def nu(p: int, x: int, n: int) -> int:
    """``p``-adic valuation of ``gcd(x, p^n)``; zero counts as ``n``."""
    g = math.gcd(x, p ** n)
    k = 0
    while g % p == 0 and g > 1:
        g //= p
        k += 1
    return k


def prime_power(m: int) -> tuple[int, int] | None:
    for p in range(2, m + 1):
        if m % p == 0:
            n, r = 0, m
            while r % p == 0:
                r //= p
                n += 1
            return (p, n) if r == 1 else None
    return None


@dataclass(frozen=True)
class Counters:
    p: int
    n: int
    tau: int
    Z: dict[int, int]
    W: dict[int, int]
    phi: int | None = None
    psi: int | None = None


def counters(t: AdmissibleTree, p: int | None = None) -> Counters:
    pp = prime_power(t.order)
    if pp is None or (p is not None and pp[0] != p):
        raise ValueError(f"order {t.order} is not a power of {p or 'a prime'}")
    p, n = pp
    vals = [nu(p, o.a - o.b, n) for o in t.fixed()]
    tau = max(vals)
    Z = {i: vals.count(i) for i in range(n + 1)}
    W = dict(Z)
    W[0] += 1
    W[tau] -= 1
    phi = psi = None
    if n == 1:
        psi = Z[1]
        phi = Z[0]
    return Counters(p, n, tau, Z, W, phi, psi)


def _non_fixed(t: AdmissibleTree) -> list[Summand]:
    return [orbit_summand(t.order, o.stab, o.a, o.b) for o in t.orbits if o.stab != t.order]


def _decompose_general(t: AdmissibleTree) -> Decomposition:
    m = t.order
    r = t.root
    top = Summand.sphere(VirtualRep.lam(m, r.a, r.b))
    spheres = [Summand.sphere(VirtualRep.lam(m, 1)) for _ in t.fixed()] if t.tree_type == "I" else []
    tag = GENERAL_I if t.tree_type == "I" else GENERAL_II
    return Decomposition(m, (Summand.unit(), top, *spheres, *_non_fixed(t)), tag,
                         "all fixed differences prime to the order" if tag == GENERAL_I else "type II")


def _decompose_one_zero(t: AdmissibleTree) -> Decomposition:
    m = t.order
    pieces = [orbit_summand(m, o.stab, o.a, o.b) for o in t.orbits]
    return Decomposition(m, (Summand.unit(), Summand.sphere(VirtualRep.lam(m, 1) + 2), *pieces),
                         ONE_ZERO, "a root rotation number vanishes")


def general_hypothesis(t: AdmissibleTree) -> list[int]:
    """Fixed orbits whose difference ``a - b`` is not prime to the order."""
    return [o.id for o in t.fixed() if math.gcd(o.a - o.b, t.order) != 1]


def one_zero_hypothesis(t: AdmissibleTree) -> bool:
    return t.tree_type == "I" and 0 in (t.root.a, t.root.b)


def decompose(t: AdmissibleTree, arm: str | None = None) -> Decomposition:
    """Pick the applicable splitting theorem and return its wedge summands.

    ``arm`` forces a particular theorem; its hypothesis is still checked.
    """
    m = t.order
    if t.tree_type == "II":
        if arm not in (None, GENERAL_II):
            raise NoTheoremApplies(f"{arm} does not apply to type II trees", [])
        return _decompose_general(t)

    bad = general_hypothesis(t)
    if arm == ONE_ZERO or (arm is None and one_zero_hypothesis(t)):
        if not one_zero_hypothesis(t):
            raise NoTheoremApplies("no root rotation number vanishes", [t.root.id])
        return _decompose_one_zero(t)
    if arm == GENERAL_I or (arm is None and not bad):
        if bad:
            raise NoTheoremApplies("fixed differences share a factor with the order", bad)
        return _decompose_general(t)

    pp = prime_power(m)
    if pp is None:
        raise NoTheoremApplies(
            f"order {m} is not a prime power and fixed orbits {bad} have a - b not prime to it", bad)
    p, n = pp
    c = counters(t)
    tau = c.tau
    r = t.root
    if arm in (None, PRIME_POWER_DIVISIBLE) and (r.a % p ** tau == 0 or r.b % p ** tau == 0):
        pieces = [Summand.sphere(VirtualRep.lam(m, p ** i)) for i in range(n + 1) for _ in range(c.Z[i])]
        top = Summand.sphere(VirtualRep.lam(m, r.a, r.b))
        return Decomposition(m, (Summand.unit(), top, *pieces, *_non_fixed(t)), PRIME_POWER_DIVISIBLE,
                             f"p^tau = {p}^{tau} divides a root rotation number")
    if arm == PRIME_POWER_DIVISIBLE:
        raise NoTheoremApplies("p^tau divides neither root rotation number", [r.id])

    nt = normalize_root(t, p)
    c = counters(nt)
    tau = c.tau
    top = Summand.sphere(VirtualRep.lam(m, 1, p ** tau))
    pieces = [Summand.sphere(VirtualRep.lam(m, p ** i)) for i in range(n + 1) for _ in range(c.W[i])]
    tag = PRIME if n == 1 else PRIME_POWER
    if arm not in (None, PRIME, PRIME_POWER):
        raise NoTheoremApplies(f"unknown arm {arm}", [])
    return Decomposition(m, (Summand.unit(), top, *pieces, *_non_fixed(nt)), tag,
                         f"normalized root {nt.root.weight}, tau = {tau}")


def underlying_betti(dec: Decomposition, t: AdmissibleTree | None = None) -> tuple[int, int, int]:
    m = dec.order
    b = [0, 0, 0]
    for s in dec.summands:
        if s.kind == "unit":
            b[0] += 1
        elif s.kind == "sphere":
            b[dim(s.rep) // 2] += 1
        else:
            assert dim(s.rep) == 2, s
            b[1] += m // s.subgroup
    betti = tuple(b)
    if t is not None:
        expected = (1, strata(t).n, 1)
        assert betti == expected, f"Betti numbers {betti} != {expected}"
    return betti


def canonical_eq(d1: Decomposition, d2: Decomposition) -> bool:
    if d1.order != d2.order:
        raise ValueError("decompositions over different groups")
    return Counter(map(str, d1.summands)) == Counter(map(str, d2.summands))
