"""Elementary divisors of sparse integer matrices.

Unit pivots are eliminated sparsely first; whatever survives is small and
goes through a dense Smith reduction with exact Python integers.
"""
from __future__ import annotations

import math
from typing import Iterable, Sequence


def invariant_factors(diag: Iterable[int]) -> list[int]:
    """Turn any list of nonzero diagonal entries into a divisibility chain."""
    d = sorted(abs(x) for x in diag if x)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = math.gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return sorted(d)


def _dense_diagonal(rows: list[list[int]]) -> list[int]:
    a = [r[:] for r in rows if any(r)]
    out = []
    while a:
        ncols = len(a[0])
        # smallest nonzero pivot
        best = None
        for i, r in enumerate(a):
            for j, x in enumerate(r):
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, pi, pj = best
        while True:
            p = a[pi][pj]
            dirty = False
            for i, r in enumerate(a):
                if i != pi and r[pj]:
                    q = r[pj] // p
                    if q:
                        prow = a[pi]
                        a[i] = [x - q * y for x, y in zip(r, prow)]
                    if a[i][pj]:
                        dirty = True
            prow = a[pi]
            for j in range(ncols):
                if j != pj and prow[j]:
                    q = prow[j] // p
                    if q:
                        for r in a:
                            if r[pj]:
                                r[j] -= q * r[pj]
                    if prow[j]:
                        dirty = True
            if not dirty:
                break
            best = None
            for i, r in enumerate(a):
                for j, x in enumerate(r):
                    if x and (i == pi or j == pj) and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            _, pi, pj = best
        out.append(abs(a[pi][pj]))
        del a[pi]
        for r in a:
            del r[pj]
        a = [r for r in a if any(r)]
    return out


def elementary_divisors(rows: Sequence[dict[int, int]]) -> list[int]:
    """Nonzero Smith invariants of a matrix given as sparse rows ``{col: value}``."""
    R = [dict((c, v) for c, v in r.items() if v) for r in rows]
    cols: dict[int, set[int]] = {}
    for i, r in enumerate(R):
        for c in r:
            cols.setdefault(c, set()).add(i)
    alive = set(i for i, r in enumerate(R) if r)
    ones = 0
    progress = True
    while progress:
        progress = False
        for i in sorted(alive, key=lambda i: len(R[i])):
            if i not in alive:
                continue
            r = R[i]
            piv = next((c for c, v in r.items() if v in (1, -1) and len(cols[c]) <= 64), None)
            if piv is None:
                piv = next((c for c, v in r.items() if v in (1, -1)), None)
            if piv is None:
                continue
            pv = r[piv]
            for k in list(cols[piv]):
                if k == i:
                    continue
                rk = R[k]
                f = rk[piv] * pv
                for c, v in r.items():
                    nv = rk.get(c, 0) - f * v
                    if nv:
                        if c not in rk:
                            cols[c].add(k)
                        rk[c] = nv
                    elif c in rk:
                        del rk[c]
                        cols[c].discard(k)
                if not rk:
                    alive.discard(k)
            for c in r:
                cols[c].discard(i)
            R[i] = {}
            alive.discard(i)
            ones += 1
            progress = True
    rest = [R[i] for i in sorted(alive) if R[i]]
    if not rest:
        return [1] * ones
    used = sorted({c for r in rest for c in r})
    pos = {c: j for j, c in enumerate(used)}
    dense = []
    for r in rest:
        row = [0] * len(used)
        for c, v in r.items():
            row[pos[c]] = v
        dense.append(row)
    return [1] * ones + invariant_factors(_dense_diagonal(dense))
