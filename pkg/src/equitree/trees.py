"""Admissible weighted trees, stored one node per group orbit.

Weights and stabilizers are constant along orbits, so the orbit quotient
carries all of the data; a parent vertex with stabilizer ``s_p`` has exactly
``s_p / s_c`` neighbours in a child orbit with stabilizer ``s_c``.
"""
from __future__ import annotations

import itertools
import json
import math
import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Iterable

from .reps import divisors


class TreeParseError(ValueError):
    pass


@dataclass(frozen=True)
class Weight:
    a: int
    b: int
    stab: int

    def __post_init__(self):
        if self.stab < 1:
            raise ValueError(f"stabilizer order must be positive, got {self.stab}")
        object.__setattr__(self, "a", self.a % self.stab)
        object.__setattr__(self, "b", self.b % self.stab)

    @property
    def diff(self) -> int:
        return (self.a - self.b) % self.stab

    def gcd(self) -> int:
        return math.gcd(math.gcd(self.a, self.b), self.stab)

    def canonical(self) -> tuple[int, int, int]:
        """Least representative up to swap and global sign."""
        s = self.stab
        a, b = self.a, self.b
        cands = [(a, b), (b, a), (-a % s, -b % s), (-b % s, -a % s)]
        return min(cands) + (s,)

    def swap_canonical(self) -> tuple[int, int, int]:
        return min((self.a, self.b), (self.b, self.a)) + (self.stab,)

    def __str__(self) -> str:
        return f"({self.a},{self.b};{self.stab})"


def canon(a: int, b: int, s: int) -> tuple[int, int, int]:
    return Weight(a, b, s).canonical()


@dataclass(frozen=True)
class Orbit:
    id: int
    parent: int | None
    weight: Weight
    level: int = 0

    @property
    def stab(self) -> int:
        return self.weight.stab

    @property
    def a(self) -> int:
        return self.weight.a

    @property
    def b(self) -> int:
        return self.weight.b


@dataclass(frozen=True)
class RawTree:
    """Structurally sound tree, not yet checked against the admissibility clauses."""
    order: int
    tree_type: str
    orbits: tuple[Orbit, ...]
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {o.id: o for o in self.orbits})

    def __getitem__(self, oid: int) -> Orbit:
        return self._index[oid]

    @property
    def root(self) -> Orbit:
        return next(o for o in self.orbits if o.parent is None)

    def children(self, oid: int) -> list[Orbit]:
        return sorted((o for o in self.orbits if o.parent == oid), key=lambda o: o.id)

    def path_to(self, oid: int) -> list[Orbit]:
        """Orbits from the root down to ``oid`` inclusive."""
        path = []
        cur: int | None = oid
        while cur is not None:
            path.append(self[cur])
            cur = self[cur].parent
        return path[::-1]

    def fixed(self) -> list[Orbit]:
        return [o for o in self.orbits if o.stab == self.order]

    def to_json(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "type": self.tree_type,
            "orbits": [
                {"id": o.id, "parent": o.parent, "a": o.a, "b": o.b, "stab": o.stab}
                for o in sorted(self.orbits, key=lambda o: o.id)
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


class AdmissibleTree(RawTree):
    """A tree that has passed :func:`validate`."""


def build(order: int, tree_type: str, records: Iterable[tuple[int, int | None, int, int, int]]) -> RawTree:
    """Assemble a tree from ``(id, parent, a, b, stab)`` tuples, computing levels."""
    recs = list(records)
    ids = [r[0] for r in recs]
    seen = set()
    for i in ids:
        if i in seen:
            raise TreeParseError(f"duplicate orbit id {i}")
        seen.add(i)
    parent = {r[0]: r[1] for r in recs}
    for i, p in parent.items():
        if p is not None and p not in parent:
            raise TreeParseError(f"orbit {i} has unknown parent {p}")
    roots = [i for i, p in parent.items() if p is None]
    if len(roots) != 1:
        raise TreeParseError(f"not a tree: expected one root, found {len(roots)}")
    level: dict[int, int] = {roots[0]: 0}

    def depth(i: int) -> int:
        trail = []
        cur = i
        while cur not in level:
            if cur in trail:
                raise TreeParseError(f"not a tree: parent cycle through orbit {cur}")
            trail.append(cur)
            cur = parent[cur]
        base = level[cur]
        for j in reversed(trail):
            base += 1
            level[j] = base
        return level[i]

    orbits = []
    for i, p, a, b, s in recs:
        if s < 1:
            raise TreeParseError(f"orbit {i}: stab must be a positive integer")
        orbits.append(Orbit(i, p, Weight(a, b, s), depth(i)))
    return RawTree(order, tree_type, tuple(orbits))


def parse(source: str) -> RawTree:
    """Decode the JSON tree format.  Only structure is checked here."""
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise TreeParseError(f"syntax error at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise TreeParseError("top level must be an object")
    for key in ("order", "type", "orbits"):
        if key not in doc:
            raise TreeParseError(f"missing key {key!r}")
    order, ttype = doc["order"], doc["type"]
    if not isinstance(order, int) or order < 1:
        raise TreeParseError("order must be a positive integer")
    if ttype not in ("I", "II"):
        raise TreeParseError(f"type must be 'I' or 'II', got {ttype!r}")
    if not isinstance(doc["orbits"], list) or not doc["orbits"]:
        raise TreeParseError("orbits must be a nonempty list")
    recs = []
    for n, o in enumerate(doc["orbits"]):
        try:
            oid, par, a, b, s = o["id"], o["parent"], o["a"], o["b"], o["stab"]
        except (KeyError, TypeError) as exc:
            raise TreeParseError(f"orbit entry {n}: missing field {exc}") from exc
        if not all(isinstance(v, int) for v in (oid, a, b, s)) or not (par is None or isinstance(par, int)):
            raise TreeParseError(f"orbit entry {n}: fields must be integers")
        recs.append((oid, par, a, b, s))
    return build(order, ttype, recs)


# -- admissibility ----------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    clause: str
    orbits: tuple[int, ...]
    message: str = ""

    def to_json(self) -> dict[str, Any]:
        return {"clause": self.clause, "orbits": list(self.orbits)}


class InadmissibleTree(ValueError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(f"clause {v.clause} {list(v.orbits)}: {v.message}" for v in violations))


def root_child_weights(w: Weight) -> set[tuple[int, int, int]]:
    """Canonical weights allowed for fixed level-1 orbits under a type I root."""
    a, b, m = w.a, w.b, w.stab
    return {canon(a, -b, m), canon(a, b - a, m), canon(b, a - b, m)}


def same_stab_child_weights(w: Weight) -> set[tuple[int, int, int]]:
    a, b, s = w.a, w.b, w.stab
    return {canon(a, b - a, s), canon(a - b, b, s)}


def drop_candidates(w: Weight, child_stab: int, sphere_root: bool = False) -> list[int]:
    """Entries among ``a, b, a-b`` whose gcd with the parent stabilizer is ``child_stab``.

    An ``S^4`` root only has the two rotation axes, so ``a - b`` is not offered there.
    """
    xs = [w.a, w.b] if sphere_root else [w.a, w.b, w.a - w.b]
    return [x for x in xs if math.gcd(x, w.stab) == child_stab]


def drop_child_values(w: Weight, child_stab: int) -> set[int]:
    """Residues mod ``child_stab`` allowed as the nonzero rotation number."""
    if child_stab == 1:
        return {0}
    vals = set()
    for x in (-w.a, -w.b, w.b - w.a):
        for s in (1, -1):
            r = (s * x) % child_stab
            if r:
                vals.add(r)
    return vals


def violations(t: RawTree) -> list[Violation]:
    m = t.order
    out: list[Violation] = []
    root = t.root
    if m % 2 == 0:
        out.append(Violation("3", (root.id,), f"group order {m} is even"))
    if root.stab != m:
        out.append(Violation("3", (root.id,), "root stabilizer must equal the group order"))
    for o in t.orbits:
        if m % o.stab:
            out.append(Violation("3", (o.id,), f"stab {o.stab} does not divide {m}"))
        if o.weight.gcd() != 1:
            out.append(Violation("3", (o.id,), f"gcd(a, b, stab) = {o.weight.gcd()}"))
    if out:
        return out

    if t.tree_type == "II":
        for o in t.orbits:
            if o.parent is not None and o.stab == m:
                out.append(Violation("1", (o.id,), "type II root must be the only fixed vertex"))

    for o in t.orbits:
        if o.parent is None:
            continue
        par = t[o.parent]
        if par.stab % o.stab:
            out.append(Violation("7", (o.id,), f"stab {o.stab} does not divide parent stab {par.stab}"))
            continue
        if o.stab == par.stab:
            if par.parent is None:
                if t.tree_type == "I" and o.weight.canonical() not in root_child_weights(par.weight):
                    out.append(Violation("5", (o.id,), f"{o.weight} not allowed under root {par.weight}"))
            elif o.weight.canonical() not in same_stab_child_weights(par.weight):
                out.append(Violation("7a", (o.id,), f"{o.weight} not allowed under {par.weight}"))
        else:
            sphere_root = t.tree_type == "II" and par.parent is None
            if not drop_candidates(par.weight, o.stab, sphere_root):
                out.append(Violation("7b", (o.id,), f"no rotation number of {par.weight} has gcd {o.stab}"))
            elif o.stab > 1:
                if 0 not in (o.a, o.b):
                    out.append(Violation("7b", (o.id,), "one rotation number must vanish"))
                elif (o.a or o.b) not in drop_child_values(par.weight, o.stab):
                    out.append(Violation("7b", (o.id,), f"{o.weight} not allowed under {par.weight}"))

    if t.tree_type == "I":
        fixed_l1 = [o for o in t.children(root.id) if o.stab == m]
        if len(fixed_l1) > 3:
            out.append(Violation("5", tuple(o.id for o in fixed_l1), "more than three fixed level-1 orbits"))

    by_parent: dict[int, list[Orbit]] = defaultdict(list)
    for o in t.orbits:
        if o.parent is not None:
            by_parent[o.parent].append(o)
    for sibs in by_parent.values():
        groups: dict[tuple, list[int]] = defaultdict(list)
        for o in sibs:
            groups[o.weight.canonical()].append(o.id)
        for ids in groups.values():
            if len(ids) > 1:
                out.append(Violation("6", tuple(sorted(ids)), "siblings share a weight up to sign"))
    return out


def validate(t: RawTree) -> AdmissibleTree:
    found = violations(t)
    if found:
        raise InadmissibleTree(found)
    return AdmissibleTree(t.order, t.tree_type, t.orbits)


def load(path) -> AdmissibleTree:
    with open(path) as fh:
        return validate(parse(fh.read()))


# -- interrogation ----------------------------------------------------------

@dataclass(frozen=True)
class Strata:
    fixed: list[int]
    by_stab: dict[int, list[int]]
    n: int
    tree_type: str


def strata(t: RawTree) -> Strata:
    m = t.order
    by_stab: dict[int, list[int]] = defaultdict(list)
    for o in sorted(t.orbits, key=lambda o: o.id):
        if o.stab != m:
            by_stab[o.stab].append(o.id)
    n = sum(m // o.stab for o in t.orbits) - (1 if t.tree_type == "II" else 0)
    return Strata(sorted(o.id for o in t.fixed()), dict(by_stab), n, t.tree_type)


def n_vertices(t: RawTree) -> int:
    return strata(t).n


def with_weights(t: RawTree, changes: dict[int, Weight], parents: dict[int, int | None] | None = None) -> RawTree:
    parents = parents or {}
    recs = []
    for o in t.orbits:
        w = changes.get(o.id, o.weight)
        recs.append((o.id, parents.get(o.id, o.parent), w.a, w.b, w.stab))
    return build(t.order, t.tree_type, recs)


def reorient(t: AdmissibleTree, target: int, strict: bool = True) -> RawTree:
    """Re-root ``t`` at the fixed vertex ``target``.

    The path ``v_0 .. v_l`` from the old root is reversed; ``v_l`` becomes the
    root with weight ``(a_l - b_l, -b_l)`` and ``v_{l-i}`` takes the weight
    ``+-(a_{l-i+1}, -b_{l-i+1})``.  Off-path orbits keep their weights and
    stay attached to the same vertices.  With ``strict=False`` a tree that
    no sign choice makes admissible is returned unvalidated instead of raising.
    """
    m = t.order
    if t.tree_type != "I":
        raise ValueError("reorientation needs a type I tree")
    path = t.path_to(target)
    if any(o.stab != m for o in path):
        raise ValueError(f"path to orbit {target} leaves the fixed set")
    ell = len(path) - 1
    if ell == 0:
        return t
    last = path[-1].weight
    parents: dict[int, int | None] = {path[-1].id: None}
    for j in range(ell):
        parents[path[j].id] = path[j + 1].id
    base = {path[-1].id: Weight(last.a - last.b, -last.b, m)}
    errors: list[Violation] = []
    first: RawTree | None = None
    for signs in itertools.product((1, -1), repeat=ell):
        changes = dict(base)
        for i in range(1, ell + 1):
            src = path[ell - i + 1].weight
            s = signs[i - 1]
            changes[path[ell - i].id] = Weight(s * src.a, -s * src.b, m)
        cand = with_weights(t, changes, parents)
        errors = violations(cand)
        if not errors:
            return AdmissibleTree(cand.order, cand.tree_type, cand.orbits)
        first = first or cand
    if not strict:
        return first
    raise InadmissibleTree(errors)


def normalize_root(t: AdmissibleTree, p: int) -> AdmissibleTree:
    """Swap the root weight for an equivalent one with both entries prime to ``p``."""
    if t.tree_type != "I":
        raise ValueError("root normalization needs a type I tree")
    r = t.root.weight
    m = t.order
    for a, b in ((r.a, r.b), (r.a - r.b, -r.b), (r.b - r.a, -r.a)):
        if a % p and b % p:
            if (a % m, b % m) == (r.a, r.b):
                return t
            return validate(with_weights(t, {t.root.id: Weight(a, b, m)}))
    return t


# -- random generation -------------------------------------------------------

def child_options(t: RawTree, parent: Orbit) -> list[Weight]:
    """Every weight a new child orbit of ``parent`` could carry, one per canonical class."""
    m = t.order
    s = parent.stab
    opts: dict[tuple, Weight] = {}
    if s == m and parent.parent is None:
        if t.tree_type == "I":
            for c in sorted(root_child_weights(parent.weight)):
                opts[c] = Weight(c[0], c[1], m)
    else:
        for c in sorted(same_stab_child_weights(parent.weight)):
            opts[c] = Weight(c[0], c[1], s)
    sphere_root = t.tree_type == "II" and parent.parent is None
    for d in divisors(s)[:-1]:
        if drop_candidates(parent.weight, d, sphere_root):
            for v in sorted(drop_child_values(parent.weight, d)):
                w = Weight(v, 0, d)
                opts.setdefault(w.canonical(), w)
    return list(opts.values())


def generate_random(m: int, max_level: int = 3, max_orbits: int = 8, seed: int = 0,
                    tree_type: str | None = None, max_children: int = 3) -> AdmissibleTree:
    """Sample an admissible tree; the same arguments always give the same tree."""
    if m % 2 == 0:
        raise ValueError("order must be odd")
    rng = random.Random(seed)
    ttype = tree_type or rng.choice(["I", "II"])
    roots = [(a, b) for a in range(m) for b in range(m) if math.gcd(math.gcd(a, b), m) == 1]
    a0, b0 = rng.choice(roots)
    recs = [(0, None, a0, b0, m)]
    tree = build(m, ttype, recs)
    frontier = [0]
    next_id = 1
    while frontier and len(recs) < max_orbits:
        oid = frontier.pop(0)
        par = tree[oid]
        if par.level >= max_level:
            continue
        for _ in range(rng.randint(0, max_children)):
            if len(recs) >= max_orbits:
                break
            taken = {c.weight.canonical() for c in tree.children(oid)}
            opts = [w for w in child_options(tree, par) if w.canonical() not in taken]
            if not opts:
                break
            w = rng.choice(opts)
            cand_recs = recs + [(next_id, oid, w.a, w.b, w.stab)]
            cand = build(m, ttype, cand_recs)
            if violations(cand):
                continue
            recs, tree = cand_recs, cand
            frontier.append(next_id)
            next_id += 1
    return validate(tree)
