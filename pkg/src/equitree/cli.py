"""``equitree`` command line.

Exit codes: 0 ok, 1 tree failed validation, 2 no splitting theorem applies,
3 an internal invariant broke, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from typing import Sequence, TextIO

from . import mackey
from .decomp import NoTheoremApplies, canonical_eq, decompose, prime_power, underlying_betti
from .obstruct import replay_tree
from .reps import RepSyntaxError, VirtualRep, divisors, parse_rep
from .trees import (InadmissibleTree, TreeParseError, generate_random, load, parse, reorient,
                    violations)
from .vanish import criterion_vanishes, is_prime, pi_cp, table_verdict

OK, INVALID, NO_THEOREM, INVARIANT, USAGE = 0, 1, 2, 3, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_help(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _compact(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


def _read_tree(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse(text)


def cmd_validate(args, out: TextIO) -> int:
    try:
        raw = _read_tree(args.tree)
    except TreeParseError as exc:
        print(f"parse error: {exc}", file=out)
        return INVALID
    found = violations(raw)
    if not found:
        print("OK", file=out)
        return OK
    for v in found:
        print(_compact({**v.to_json(), "message": v.message}), file=out)
    return INVALID


def _load_admissible(path: str, err: TextIO):
    try:
        return load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except (TreeParseError, InadmissibleTree) as exc:
        print(f"invalid tree: {exc}", file=err)
        return None


def cmd_decompose(args, out: TextIO, err: TextIO) -> int:
    t = _load_admissible(args.tree, err)
    if t is None:
        return INVALID
    dec = decompose(t)
    underlying_betti(dec, t)
    print(dec.dumps(), file=out)
    return OK


def cmd_replay(args, out: TextIO, err: TextIO) -> int:
    t = _load_admissible(args.tree, err)
    if t is None:
        return INVALID
    rp = replay_tree(t)
    for r in rp.records:
        print(r.dumps(), file=out)
    if not rp.ok:
        print("replay found a non-vanishing obstruction", file=err)
        return INVARIANT
    return OK


def _coherence_targets(t, p: int):
    return [o for o in t.fixed() if o.parent is not None and (o.a - o.b) % p == 0]


def cmd_verify(args, out: TextIO, err: TextIO) -> int:
    m, count, seed = args.order, args.count, args.seed
    env = os.environ.get("EQUITREE_SEED")
    if env is not None:
        try:
            seed = int(env)
        except ValueError as exc:
            raise UsageError(f"EQUITREE_SEED must be an integer, got {env!r}") from exc
    if m < 1 or m % 2 == 0:
        raise UsageError(f"--order must be odd and positive, got {m}")
    if count < 1 or seed < 0:
        raise UsageError("--count must be positive and --seed non-negative")
    pp = prime_power(m)
    stats: Counter = Counter()
    problems: list[str] = []
    for i in range(count):
        t = generate_random(m, seed=seed + i)
        stats["trees"] += 1
        try:
            dec = decompose(t)
        except NoTheoremApplies:
            stats["no_theorem"] += 1
            continue
        stats[f"theorem:{dec.theorem}"] += 1
        try:
            underlying_betti(dec, t)
        except AssertionError as exc:
            problems.append(f"seed {seed + i}: {exc}")
        rp = replay_tree(t, dec.theorem)
        stats["records"] += len(rp.records)
        if not rp.ok:
            problems.append(f"seed {seed + i}: non-vanishing obstruction")
        if not canonical_eq(rp.decomposition(dec.theorem), dec):
            problems.append(f"seed {seed + i}: replayed summands differ from the decomposition")
        if pp is None or t.tree_type != "I":
            continue
        for target in _coherence_targets(t, pp[0]):
            try:
                r = reorient(t, target.id)
            except InadmissibleTree:
                continue
            stats["reoriented"] += 1
            d2 = decompose(r)
            if not canonical_eq(dec, d2) or any(
                    mackey.decomposition_homology(dec, lv) != mackey.decomposition_homology(d2, lv)
                    for lv in divisors(m)):
                problems.append(f"seed {seed + i}: reorientation at orbit {target.id} changes the answer")
            break
    stats["problems"] = len(problems)
    for line in problems:
        print(line, file=err)
    print(_compact({"order": m, "count": count, "seed": seed, **dict(sorted(stats.items()))}), file=out)
    return INVARIANT if problems else OK


def cmd_table(args, out: TextIO, err: TextIO) -> int:
    p = args.prime
    if not is_prime(p) or p == 2:
        raise UsageError(f"--prime must be an odd prime, got {p}")
    report = mackey.verify_table(p)
    for row in report.mismatches:
        print(_compact(row), file=err)
    # the table itself: rows are dim, columns the C_p-fixed dimension
    span = range(-4, 5)
    print("a\\f " + " ".join(f"{f:>5}" for f in span), file=out)
    for a in span:
        cells = []
        for f in span:
            if (a - f) % 2:
                cells.append(f"{'.':>5}")
                continue
            alpha = VirtualRep(p, f) + VirtualRep.lam(p, 1) * ((a - f) // 2)
            cells.append(f"{pi_cp(alpha).value.replace('p', str(p)):>5}")
        print(f"{a:>3} " + " ".join(cells), file=out)
    print(f"oracle checks: {report.checked}, mismatches: {len(report.mismatches)}", file=out)
    return OK if report.ok else INVARIANT


def cmd_criterion(args, out: TextIO, err: TextIO) -> int:
    m = args.order
    if m < 1 or m % 2 == 0:
        raise UsageError(f"--order must be odd and positive, got {m}")
    try:
        alpha = parse_rep(args.expr, m)
    except RepSyntaxError as exc:
        raise UsageError(str(exc)) from exc
    print(f"criterion: {criterion_vanishes(alpha)}", file=out)
    if is_prime(m):
        print(f"table: {table_verdict(alpha)}", file=out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="equitree", description="Admissible weighted trees and their equivariant homology.")
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("validate", help="check a tree file against the admissibility clauses")
    p.add_argument("tree")
    p = sub.add_parser("decompose", help="print the wedge decomposition of a tree")
    p.add_argument("tree")
    p = sub.add_parser("replay", help="re-run every connecting-map obstruction as JSON lines")
    p.add_argument("tree")
    p = sub.add_parser("verify", help="sample random trees and check every invariant")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p = sub.add_parser("table", help="print the C_p table and compare it with the chain oracle")
    p.add_argument("--prime", type=int, required=True)
    p = sub.add_parser("criterion", help="evaluate the vanishing criterion on a virtual representation")
    p.add_argument("expr")
    p.add_argument("--order", type=int, required=True)
    return ap


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "validate":
            return cmd_validate(args, out)
        handler = {"decompose": cmd_decompose, "replay": cmd_replay, "verify": cmd_verify,
                   "table": cmd_table, "criterion": cmd_criterion}[args.command]
        return handler(args, out, err)
    except UsageError as exc:
        parser.print_help(err)
        print(f"equitree: error: {exc}", file=err)
        return USAGE
    except NoTheoremApplies as exc:
        print(_compact({"error": str(exc), "offending": exc.offending}), file=err)
        return NO_THEOREM
    except AssertionError as exc:
        print(f"invariant violated: {exc}", file=err)
        return INVARIANT


def main() -> None:
    sys.exit(run())
