"""Chain-level Bredon homology with constant Z coefficients.

Complexes are reduced cellular chains of based ``C_m``-CW complexes with
every cell listed individually, plus the permutation action of the chosen
generator ``g``.  At level ``C_l`` the constant Mackey functor evaluates to
the ``C_l``-invariant chains, spanned by orbit sums; restriction is the
inclusion and transfer sums over cosets, so ``tr = index`` on invariants.
Homology comes from Smith normal form.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .reps import VirtualRep
from .smith import elementary_divisors, invariant_factors

Cell = tuple[int, int]  # (index, sign)


@dataclass
class GComplex:
    """Reduced cellular chains with a cyclic action.

    ``action[n][i] = (j, s)`` means ``g`` sends cell ``i`` of degree ``n`` to
    ``s`` times cell ``j``.  ``boundary[n][i]`` maps faces in degree
    ``n - 1`` to incidence numbers.
    """
    order: int
    action: dict[int, list[Cell]]
    boundary: dict[int, list[dict[int, int]]]
    name: str = ""

    def degrees(self) -> list[int]:
        return sorted(n for n, cells in self.action.items() if cells)

    def ncells(self, n: int) -> int:
        return len(self.action.get(n, ()))

    def check(self) -> None:
        """Assert ``d o d = 0`` and that ``g`` commutes with ``d``."""
        for n in self.degrees():
            for i, bd in enumerate(self.boundary.get(n, [])):
                dd: dict[int, int] = {}
                for f, c in bd.items():
                    for ff, cc in self.boundary.get(n - 1, [{}] * self.ncells(n - 1))[f].items():
                        dd[ff] = dd.get(ff, 0) + c * cc
                assert not any(dd.values()), f"d^2 != 0 at degree {n} cell {i}"
                j, s = self.action[n][i]
                lhs = {}
                for f, c in bd.items():
                    ff, ss = self.action[n - 1][f]
                    lhs[ff] = lhs.get(ff, 0) + c * ss
                rhs = {f: s * c for f, c in self.boundary[n][j].items()}
                assert {k: v for k, v in lhs.items() if v} == rhs, f"d not equivariant at degree {n}"

    def orbits(self, n: int, level: int | None = None) -> list[list[Cell]]:
        """Orbits of ``C_level`` (default: the whole group) on degree-``n`` cells."""
        step = self.order // (level or self.order)
        act = self.action[n]
        seen = [False] * len(act)
        out = []
        for i in range(len(act)):
            if seen[i]:
                continue
            orbit = [(i, 1)]
            seen[i] = True
            cur, sign = i, 1
            while True:
                for _ in range(step):
                    cur, s = act[cur]
                    sign *= s
                if cur == i:
                    if sign == -1:
                        orbit = []  # orbit sum vanishes
                    break
                seen[cur] = True
                orbit.append((cur, sign))
            if orbit:
                out.append(orbit)
        return out


def point(m: int) -> GComplex:
    return GComplex(m, {0: [(0, 1)]}, {0: [{}]}, "S^0")


def line_sphere(m: int) -> GComplex:
    """``S^1`` with trivial action: a single fixed 1-cell."""
    return GComplex(m, {1: [(0, 1)]}, {1: [{}]}, "S^1")


def rotation_sphere(m: int, k: int) -> GComplex:
    """``S^{l^k}``: fixed 0-cell at the origin, ``m/g`` rays and ``m/g`` sectors."""
    g = math.gcd(k, m)
    N = m // g
    shift = (k // g) % N if N > 1 else 0
    rays = [((i + shift) % N, 1) for i in range(N)]
    return GComplex(
        m,
        {0: [(0, 1)], 1: rays, 2: list(rays)},
        {0: [{}], 1: [{0: 1} for _ in range(N)],
         2: [_sector_boundary(i, N) for i in range(N)]},
        f"S^(l^{k})",
    )


def _sector_boundary(i: int, N: int) -> dict[int, int]:
    nxt = (i + 1) % N
    if nxt == i:
        return {}
    return {nxt: 1, i: -1}


def smash(x: GComplex, y: GComplex) -> GComplex:
    if x.order != y.order:
        raise ValueError("order mismatch")
    index: dict[tuple[int, int, int, int], tuple[int, int]] = {}
    counts: dict[int, int] = {}
    for p in x.degrees():
        for q in y.degrees():
            for i in range(x.ncells(p)):
                for j in range(y.ncells(q)):
                    n = p + q
                    index[(p, i, q, j)] = (n, counts.get(n, 0))
                    counts[n] = counts.get(n, 0) + 1
    action = {n: [None] * c for n, c in counts.items()}
    boundary = {n: [None] * c for n, c in counts.items()}
    for (p, i, q, j), (n, idx) in index.items():
        xi, xs = x.action[p][i]
        yj, ys = y.action[q][j]
        action[n][idx] = (index[(p, xi, q, yj)][1], xs * ys)
        bd: dict[int, int] = {}
        for f, c in x.boundary[p][i].items():
            t = index[(p - 1, f, q, j)][1]
            bd[t] = bd.get(t, 0) + c
        sgn = -1 if p % 2 else 1
        for f, c in y.boundary[q][j].items():
            t = index[(p, i, q - 1, f)][1]
            bd[t] = bd.get(t, 0) + sgn * c
        boundary[n][idx] = {k: v for k, v in bd.items() if v}
    return GComplex(x.order, action, boundary, f"{x.name}^{y.name}")


def sphere_complex(V: VirtualRep) -> GComplex:
    """Reduced cellular chains of ``S^V`` built as a smash of elementary spheres."""
    if not V.is_actual():
        raise ValueError(f"sphere_complex needs an actual representation, got {V}")
    m = V.order
    out = point(m)
    for k, n in V.chars:
        for _ in range(n):
            out = smash(out, rotation_sphere(m, k))
    for _ in range(V.trivial):
        out = smash(out, line_sphere(m))
    out.name = f"S^({V})"
    return out


def induce_complex(c: GComplex, m: int) -> GComplex:
    """``G_+ ^_{C_d} c`` for ``c`` over ``C_d``; ``g^(m/d)`` acts on ``c`` as its generator."""
    d = c.order
    if m % d:
        raise ValueError(f"{d} does not divide {m}")
    r = m // d
    action, boundary = {}, {}
    for n in c.degrees():
        k = c.ncells(n)
        act = []
        for coset in range(r):
            for i in range(k):
                if coset + 1 < r:
                    act.append(((coset + 1) * k + i, 1))
                else:
                    j, s = c.action[n][i]
                    act.append((j, s))
        action[n] = act
        kb = c.ncells(n - 1)
        boundary[n] = [
            {coset * kb + f: v for f, v in c.boundary[n][i].items()}
            for coset in range(r) for i in range(k)
        ]
    return GComplex(m, action, boundary, f"Ind_{d}^{m}({c.name})")


@dataclass(frozen=True)
class LevelValue:
    level: int
    degree: int
    free: int
    torsion: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {"level": self.level, "degree": self.degree, "free": self.free,
                "torsion": list(self.torsion)}

    @property
    def is_zero(self) -> bool:
        return self.free == 0 and not self.torsion


def invariant_chains(c: GComplex, level: int) -> tuple[dict[int, int], dict[int, list[dict[int, int]]]]:
    """Ranks and boundary matrices of the ``C_level``-invariant subcomplex."""
    if c.order % level:
        raise ValueError(f"{level} does not divide {c.order}")
    ranks, mats = {}, {}
    reps: dict[int, dict[int, tuple[int, int]]] = {}
    orbs = {}
    for n in c.degrees():
        orbs[n] = c.orbits(n, level)
        ranks[n] = len(orbs[n])
        # each cell in an orbit -> (basis index, sign relative to the orbit sum)
        reps[n] = {cell: (b, s) for b, o in enumerate(orbs[n]) for cell, s in o}
    for n in c.degrees():
        if n - 1 not in reps:
            continue
        rows = []
        for o in orbs[n]:
            total: dict[int, int] = {}
            for cell, s in o:
                for f, v in c.boundary[n][cell].items():
                    total[f] = total.get(f, 0) + s * v
            row: dict[int, int] = {}
            for f, v in total.items():
                if v and f in reps[n - 1]:
                    b, s = reps[n - 1][f]
                    if orbs[n - 1][b][0][0] == f:
                        row[b] = v * s
            rows.append(row)
        mats[n] = rows
    return ranks, mats


def level_homology(c: GComplex, level: int, degrees: range | None = None) -> list[LevelValue]:
    ranks, mats = invariant_chains(c, level)
    divs = {n: elementary_divisors(rows) for n, rows in mats.items()}
    lo = min(ranks, default=0)
    hi = max(ranks, default=0)
    degrees = degrees if degrees is not None else range(lo, hi + 1)
    out = []
    for n in degrees:
        rank_out = len(divs.get(n, ()))
        into = divs.get(n + 1, [])
        free = ranks.get(n, 0) - rank_out - len(into)
        out.append(LevelValue(level, n, free, tuple(x for x in into if x > 1)))
    return out


def euler_check(c: GComplex, level: int) -> bool:
    ranks, _ = invariant_chains(c, level)
    hom = level_homology(c, level)
    return (sum((-1) ** n * r for n, r in ranks.items())
            == sum((-1) ** v.degree * v.free for v in hom))


DEGREES = range(0, 5)


@lru_cache(maxsize=None)
def _sphere_levels(V: VirtualRep, level: int) -> tuple[LevelValue, ...]:
    return tuple(level_homology(sphere_complex(V), level, DEGREES))


@lru_cache(maxsize=None)
def _induced_levels(d: int, V: VirtualRep, m: int, level: int) -> tuple[LevelValue, ...]:
    return tuple(level_homology(induce_complex(sphere_complex(V), m), level, DEGREES))


def direct_sum(values: list[LevelValue]) -> LevelValue:
    v0 = values[0]
    tors = invariant_factors(x for v in values for x in v.torsion)
    return LevelValue(v0.level, v0.degree, sum(v.free for v in values), tuple(tors))


def decomposition_homology(dec, level: int) -> list[LevelValue]:
    """Level data in degrees 0..4 of the wedge named by a decomposition."""
    m = dec.order
    per_degree: dict[int, list[LevelValue]] = {n: [LevelValue(level, n, 0)] for n in DEGREES}
    for s in dec.summands:
        if s.kind == "unit":
            vals = [LevelValue(level, n, 1 if n == 0 else 0) for n in DEGREES]
        elif s.kind == "sphere":
            vals = _sphere_levels(s.rep, level)
        else:
            vals = _induced_levels(s.subgroup, s.rep, m, level)
        for v in vals:
            per_degree[v.degree].append(v)
    return [direct_sum(per_degree[n]) for n in DEGREES]


# -- comparison with the C_p table ------------------------------------------

def predicted_levels(name, p: int) -> dict[int, tuple[int, tuple[int, ...]]]:
    """Level data ``{1: ..., p: ...}`` of a named ``C_p`` Mackey functor."""
    from .vanish import MackeyName
    if name in (MackeyName.CONSTANT_Z, MackeyName.DUAL_Z):
        return {1: (1, ()), p: (1, ())}
    if name is MackeyName.BRACKET_ZMODP:
        return {1: (0, ()), p: (0, (p,))}
    return {1: (0, ()), p: (0, ())}


@dataclass
class TableReport:
    prime: int
    checked: int = 0
    mismatches: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.mismatches


def verify_table(p: int, degrees: range = DEGREES, exponents: range | None = None) -> TableReport:
    """Compare sphere homology at both levels with the ``C_p`` table at ``n - V``."""
    from .vanish import pi_cp
    exponents = exponents if exponents is not None else range(1, p)
    spheres = [VirtualRep.lam(p, k) for k in exponents]
    spheres += [VirtualRep.lam(p, j, k) for j in exponents for k in exponents]
    report = TableReport(p)
    for V in spheres:
        cx = sphere_complex(V)
        for level in (1, p):
            got = {v.degree: (v.free, v.torsion) for v in level_homology(cx, level, degrees)}
            for n in degrees:
                expect = predicted_levels(pi_cp(VirtualRep(p, n) - V), p)[level]
                report.checked += 1
                if got[n] != expect:
                    report.mismatches.append({"rep": str(V), "degree": n, "level": level,
                                              "expected": expect, "got": got[n]})
    return report
