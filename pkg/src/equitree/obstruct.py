"""Re-run the connecting-map checks behind each splitting.

Every time an orbit's cell ``S^gamma`` (``gamma = l^(a-b)`` over its
stabilizer) is attached, the map from each summand ``S^beta`` already split
off into ``S^(gamma+1)`` is classified by ``pi_0`` at ``beta - gamma - 1``,
evaluated over the common subgroup.  The replay emits one record per summand
and expects all of them to vanish.
"""
from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .decomp import (PRIME, PRIME_POWER, Decomposition, Summand, decompose, nu,
                     orbit_summand, prime_power)
from .reps import VirtualRep
from .trees import (AdmissibleTree, Weight, normalize_root, reorient, root_child_weights,
                    same_stab_child_weights)
from .vanish import Verdict, obstruction_grading, obstruction_verdict


@dataclass(frozen=True)
class ObstructionRecord:
    step: int
    orbit: int
    beta: VirtualRep
    gamma: VirtualRep
    level: int
    alpha: VirtualRep
    verdict: Verdict

    def to_json(self) -> dict:
        return {"step": self.step, "orbit": self.orbit, "beta": str(self.beta),
                "gamma": str(self.gamma), "level": self.level, "alpha": str(self.alpha),
                "verdict": str(self.verdict)}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def _record(step: int, orbit: int, beta: VirtualRep, gamma: VirtualRep, level: int) -> ObstructionRecord:
    return ObstructionRecord(step, orbit, beta, gamma, level,
                             obstruction_grading(beta, gamma, level),
                             obstruction_verdict(beta, gamma, level))


def _summand_group(s: Summand, m: int) -> int:
    return s.subgroup if s.kind == "induced" else m


def _summand_rep(s: Summand, m: int) -> VirtualRep:
    return s.rep if s.rep is not None else VirtualRep.zero(m)


@dataclass
class Replay:
    tree: AdmissibleTree
    order: list[int]
    records: list[ObstructionRecord]
    summands: list[Summand]

    @property
    def ok(self) -> bool:
        return all(r.verdict.vanishes for r in self.records)

    def decomposition(self, theorem: str) -> Decomposition:
        return Decomposition(self.tree.order, tuple(self.summands), theorem)


def _depth_order(t: AdmissibleTree, start: list[int], key) -> list[int]:
    """Orbits not in ``start``, parents before children, sorted by ``key`` within reach."""
    done = set(start)
    out: list[int] = []
    rest = [o for o in t.orbits if o.id not in done]
    for o in sorted(rest, key=key):
        out.append(o.id)
    # a child never precedes its parent as long as key grows along edges
    pos = {oid: i for i, oid in enumerate(start + out)}
    for o in rest:
        assert pos[o.parent] < pos[o.id], "attachment order breaks the tree"
    return out


def _distances(t: AdmissibleTree, sources: set[int]) -> dict[int, int]:
    """Tree distance to the nearest orbit in ``sources``."""
    adj: dict[int, list[int]] = {o.id: [] for o in t.orbits}
    for o in t.orbits:
        if o.parent is not None:
            adj[o.id].append(o.parent)
            adj[o.parent].append(o.id)
    dist = {s: 0 for s in sources}
    todo = list(sources)
    while todo:
        nxt = []
        for u in todo:
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        todo = nxt
    return dist


def proof_tree(t: AdmissibleTree, theorem: str) -> tuple[AdmissibleTree, list[int], tuple[int, int, int]]:
    """Tree the proof inducts on, its attachment order and the root block's cell ordering."""
    natural = (t.root.a, t.root.b, 0)
    if theorem not in (PRIME, PRIME_POWER):
        order = [t.root.id] + _depth_order(t, [t.root.id], key=lambda o: (o.level, o.id))
        return t, order, natural
    p, n = prime_power(t.order)
    nt = normalize_root(t, p)
    tau = max(nu(p, o.a - o.b, n) for o in nt.fixed())
    targets = [o for o in nt.fixed() if nu(p, o.a - o.b, n) == tau]
    target = min(targets, key=lambda o: (o.level, o.id))
    rt = reorient(nt, target.id, strict=False)
    path = [o.id for o in rt.path_to(nt.root.id)]
    fixed_ids = {o.id for o in rt.fixed()}
    d_path = _distances(rt, set(path))
    d_fixed = _distances(rt, fixed_ids)
    order = list(path)
    off = sorted((o for o in rt.fixed() if o.id not in set(path)), key=lambda o: (d_path[o.id], o.id))
    order += [o.id for o in off]
    order += [o.id for o in sorted((o for o in rt.orbits if o.id not in fixed_ids),
                                   key=lambda o: (d_fixed[o.id], o.id))]
    pos = {oid: i for i, oid in enumerate(order)}
    for o in rt.orbits:
        if o.parent is not None:
            assert pos[o.parent] < pos[o.id], "attachment order breaks the tree"
    r = rt.root
    if target.id == nt.root.id:
        # tau sits on the root itself: start the block from the fixed point whose
        # middle cell has a unit rotation number
        return rt, order, (r.a, 0, r.b)
    return rt, order, (r.a, r.b, 0)


def replay_tree(t: AdmissibleTree, theorem: str | None = None) -> Replay:
    """Replay the proof on ``t`` and keep the running summand list."""
    theorem = theorem or decompose(t).theorem
    rt, order, (e0, e1, e2) = proof_tree(t, theorem)
    m = rt.order
    root = rt.root
    summands = [Summand.unit(), Summand.sphere(VirtualRep.lam(m, e0 - e2, e1 - e2))]
    records: list[ObstructionRecord] = []
    step = 0
    if rt.tree_type == "I":
        gamma = VirtualRep.lam(m, e0 - e1)
        records.append(_record(step, root.id, VirtualRep.lam(m, e0 - e2, e1 - e2), gamma, m))
        summands.append(Summand.sphere(gamma))
    for oid in order[1:]:
        o = rt[oid]
        step += 1
        gamma = VirtualRep.lam(o.stab, o.a - o.b)
        for s in summands:
            level = math.gcd(o.stab, _summand_group(s, m))
            records.append(_record(step, o.id, _summand_rep(s, m), gamma, level))
        summands.append(orbit_summand(m, o.stab, o.a, o.b))
    return Replay(rt, order, records, summands)


def replay(t: AdmissibleTree) -> list[ObstructionRecord]:
    return replay_tree(t).records


def replay_cp2_orders(w: Weight, order: tuple[int, int, int]) -> list[ObstructionRecord]:
    """Single obstruction of the cofibre sequence for one ordering of ``l^a + l^b + 1``.

    ``order`` lists the rotation numbers of the three lines, each of ``a``,
    ``b`` and ``0`` once; the first is the fixed point used as the bottom
    cell, the second spans the middle cell.
    """
    m = w.stab
    e0, e1, e2 = order
    if sorted(x % m for x in order) != sorted([w.a % m, w.b % m, 0]):
        raise ValueError(f"{order} is not an ordering of ({w.a}, {w.b}, 0)")
    gamma = VirtualRep.lam(m, e0 - e1)
    beta = VirtualRep.lam(m, e0 - e2, e1 - e2)
    return [_record(0, 0, beta, gamma, m)]


def cp2_orderings(w: Weight) -> list[tuple[int, int, int]]:
    return list(itertools.permutations((w.a, w.b, 0)))


# -- counting claim along a reoriented path -----------------------------------

def claim_card_eq(path: list[Weight], tau: int) -> bool:
    """Compare valuations of ``a_i + b_i`` (i >= 1) and ``a_j - b_j`` (j < l) below ``tau``."""
    if len(path) <= 1:
        return True
    m = path[0].stab
    pp = prime_power(m)
    if pp is None:
        raise ValueError(f"order {m} is not a prime power")
    p, n = pp
    plus = Counter(nu(p, w.a + w.b, n) for w in path[1:])
    minus = Counter(nu(p, w.a - w.b, n) for w in path[:-1])
    return all(plus[s] == minus[s] for s in range(tau))


def admissible_paths(p: int, n: int, max_len: int) -> Iterator[tuple[list[Weight], int]]:
    """Fixed paths from a root prime to ``p`` that end at the first vertex of top valuation.

    Roots are taken as ``(1, b)`` up to scaling by units.  Yields ``(path, tau)``.
    """
    m = p ** n

    def grow(path: list[Weight]):
        last = path[-1]
        tau = nu(p, last.a - last.b, n)
        if len(path) > 1 and tau > 0 and all(nu(p, w.a - w.b, n) < tau for w in path[:-1]):
            yield path, tau
        if len(path) - 1 >= max_len:
            return
        opts = root_child_weights(last) if len(path) == 1 else same_stab_child_weights(last)
        for c in sorted(opts):
            yield from grow(path + [Weight(c[0], c[1], m)])

    for b in range(1, m):
        if b % p:
            yield from grow([Weight(1, b, m)])


# -- stabilizer bound -------------------------------------------------------

def stab_bound_hypothesis(t: AdmissibleTree) -> bool:
    pp = prime_power(t.order)
    if pp is None or t.tree_type != "I":
        return False
    p, n = pp
    tau = max(nu(p, o.a - o.b, n) for o in t.fixed())
    q = p ** tau
    return tau > 0 and t.root.a % q != 0 and t.root.b % q != 0


def stab_bound_check(t: AdmissibleTree) -> bool:
    """Every non-fixed orbit has stabilizer inside ``C_{p^tau}``."""
    if not stab_bound_hypothesis(t):
        raise ValueError("needs a type I prime-power tree with tau > 0 and p^tau dividing neither root entry")
    p, n = prime_power(t.order)
    tau = max(nu(p, o.a - o.b, n) for o in t.fixed())
    return all((p ** tau) % o.stab == 0 for o in t.orbits if o.stab != t.order)
