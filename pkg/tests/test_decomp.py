import math
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from equitree.decomp import (GENERAL_I, GENERAL_II, ONE_ZERO, PRIME, PRIME_POWER,
                             PRIME_POWER_DIVISIBLE, Decomposition, NoTheoremApplies, Summand,
                             canonical_eq, counters, decompose, general_hypothesis, nu,
                             one_zero_hypothesis, underlying_betti)
from equitree.mackey import decomposition_homology
from equitree.reps import VirtualRep, divisors
from equitree.trees import build, generate_random, normalize_root, strata, validate

lam = VirtualRep.lam


def tree(m, typ, *recs):
    return validate(build(m, typ, recs))


def texts(*summands):
    return sorted(str(s) for s in summands)


def test_single_root():
    d = decompose(tree(5, "I", (0, None, 1, 2, 5)))
    assert d.theorem == GENERAL_I
    assert d.texts() == texts(Summand.unit(), Summand.sphere(lam(5, 1)), Summand.sphere(lam(5, 1, 2)))
    assert underlying_betti(d) == (1, 1, 1)


def test_single_sphere_root():
    d = decompose(tree(15, "II", (0, None, 1, 2, 15)))
    assert d.theorem == GENERAL_II
    listed = Decomposition(15, (Summand.unit(), Summand.sphere(lam(15, 1, 2))), "x")
    assert canonical_eq(d, listed)
    assert d.texts() == ["1", "S(2*l^1)"]
    assert underlying_betti(d) == (1, 0, 1)


def test_two_vertex_c3():
    d = decompose(tree(3, "I", (0, None, 1, 2, 3), (1, 0, 1, 1, 3)))
    assert d.theorem == PRIME
    assert d.texts() == ["1", "S(l^1)", "S(l^1)", "S(l^1+2)"]


def test_c15_induced():
    t = tree(15, "I", (0, None, 1, 5, 15), (1, 0, 4, 0, 5))
    d = decompose(t)
    assert d.theorem == GENERAL_I
    assert d.texts() == ["1", "Ind(5;l^1)", "S(l^1)", "S(l^1+l^5)"]
    assert underlying_betti(d, t) == (1, 4, 1)


def test_composite_without_theorem():
    t = tree(15, "I", (0, None, 1, 2, 15), (1, 0, 1, 1, 15))
    with pytest.raises(NoTheoremApplies) as exc:
        decompose(t)
    assert exc.value.offending == [1]


def test_dumps():
    d = decompose(tree(15, "I", (0, None, 1, 5, 15), (1, 0, 4, 0, 5)))
    assert d.dumps() == '{"theorem":"general-I","summands":["1","Ind(5;l^1)","S(l^1)","S(l^1+l^5)"]}'


def test_summand_text():
    assert str(Summand.sphere(lam(3, 3))) == "S(2)"
    assert str(Summand.sphere(lam(3, 1) + 2)) == "S(l^1+2)"
    assert str(Summand.induced(5, lam(5, 4))) == "Ind(5;l^1)"


def test_counters():
    c = counters(tree(9, "I", (0, None, 1, 2, 9), (1, 0, 1, 7, 9)))
    assert c.tau == 1 and c.Z == {0: 1, 1: 1, 2: 0} and c.W == {0: 2, 1: 0, 2: 0}
    assert counters(tree(9, "I", (0, None, 1, 2, 9), (1, 0, 1, 1, 9))).tau == 2
    c = counters(tree(3, "I", (0, None, 1, 2, 3), (1, 0, 1, 1, 3)))
    assert (c.phi, c.psi) == (1, 1)


def test_counters_need_prime_power():
    with pytest.raises(ValueError):
        counters(tree(15, "I", (0, None, 1, 2, 15)))


def test_nu_of_zero_is_n():
    assert nu(3, 0, 3) == 3 and nu(3, 18, 3) == 2 and nu(5, 7, 2) == 0


def test_forced_arm_checks_hypothesis():
    t = tree(5, "I", (0, None, 1, 2, 5))
    with pytest.raises(NoTheoremApplies):
        decompose(t, arm=ONE_ZERO)


def test_one_zero_root_alone():
    d = decompose(tree(7, "I", (0, None, 0, 3, 7)))
    assert d.theorem == ONE_ZERO
    assert d.texts() == ["1", "S(l^1)", "S(l^1+2)"]


def test_prime_arm_counts():
    # phi + 1 copies of S(l) and psi - 1 copies of S(2), one Ind(1;2) per free orbit
    t = tree(3, "I", (0, None, 1, 2, 3), (1, 0, 1, 1, 3), (2, 0, 0, 0, 1))
    d = decompose(t)
    c = counters(normalize_root(t, 3))
    got = Counter(d.texts())
    assert got["S(l^1)"] == c.phi + 1 and got["S(2)"] == c.psi - 1 and got["Ind(1;2)"] == 1


def test_canonical_eq():
    d = decompose(tree(15, "I", (0, None, 1, 5, 15), (1, 0, 4, 0, 5)))
    assert canonical_eq(d, d)
    other = decompose(tree(15, "I", (0, None, 1, 2, 15)))
    assert not canonical_eq(d, other)
    with pytest.raises(ValueError):
        canonical_eq(d, decompose(tree(5, "I", (0, None, 1, 2, 5))))


def test_spec_listed_c5_answer_is_the_same_class():
    # the single-root answer is usually written with S(l+l^2); over C_5 both spheres canonicalize
    d = decompose(tree(5, "I", (0, None, 1, 2, 5)))
    listed = Decomposition(5, (Summand.unit(), Summand.sphere(lam(5, 1)), Summand.sphere(lam(5, 1) + lam(5, 2))), "x")
    assert canonical_eq(d, listed)


ORDERS = [3, 5, 7, 9, 15, 21, 25, 27, 45]


def _phi(n):
    return sum(1 for i in range(1, n + 1) if math.gcd(i, n) == 1)


def quotient_euler(t, d):
    """Euler characteristic of X(T)/C_d by counting fixed blocks.

    The C_k-fixed vertices form a subtree; each CP^2 block has fixed Euler
    characteristic 3, the sphere root 2, and each connected sum costs 2.
    """
    def fixed(k):
        n = sum(t.order // o.stab for o in t.orbits if o.stab % k == 0)
        return n + 2 if t.tree_type == "I" else n + 1
    total = sum(_phi(k) * fixed(k) for k in divisors(d))
    assert total % d == 0
    return total // d


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(ORDERS), st.integers(0, 10 ** 6))
def test_decomposition_properties(m, seed):
    t = generate_random(m, seed=seed)
    try:
        d = decompose(t)
    except NoTheoremApplies as exc:
        assert general_hypothesis(t) and not one_zero_hypothesis(t) and t.tree_type == "I"
        assert exc.offending == general_hypothesis(t)
        return
    assert underlying_betti(d, t) == (1, strata(t).n, 1)
    kinds = Counter(s.kind for s in d.summands)
    assert kinds["unit"] == 1
    assert sum(1 for s in d.summands if s.kind == "sphere" and s.rep.trivial + 2 * sum(n for _, n in s.rep.chars) == 4) == 1
    for lv in divisors(m):
        hom = decomposition_homology(d, lv)
        assert sum((-1) ** v.degree * v.free for v in hom) == quotient_euler(t, lv)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ORDERS), st.integers(0, 10 ** 6), st.randoms(use_true_random=False))
def test_relabeling_invariance(m, seed, rnd):
    t = generate_random(m, seed=seed)
    ids = [o.id for o in t.orbits]
    new = ids[:]
    rnd.shuffle(new)
    rename = dict(zip(ids, [100 + i for i in new]))
    recs = [(rename[o.id], rename.get(o.parent), o.a, o.b, o.stab) for o in t.orbits]
    u = validate(build(m, t.tree_type, recs))
    try:
        d = decompose(t)
    except NoTheoremApplies:
        with pytest.raises(NoTheoremApplies):
            decompose(u)
        return
    assert canonical_eq(d, decompose(u))


def test_overlap_of_general_and_one_zero():
    seen = 0
    for m in (3, 5, 7, 9, 25):
        for seed in range(300):
            t = generate_random(m, seed=seed, tree_type="I")
            if one_zero_hypothesis(t) and not general_hypothesis(t):
                seen += 1
                assert canonical_eq(decompose(t, arm=ONE_ZERO), decompose(t, arm=GENERAL_I))
    assert seen > 0


def test_divisible_arm_is_reached():
    tags = Counter()
    for m in (9, 27, 81):
        for seed in range(300):
            try:
                tags[decompose(generate_random(m, seed=seed, tree_type="I")).theorem] += 1
            except NoTheoremApplies:
                pass
    assert tags[PRIME_POWER_DIVISIBLE] > 0 and tags[PRIME_POWER] > 0


def test_prime_order_with_coprime_differences():
    # every fixed difference a unit: one S(l) per fixed orbit plus the top sphere
    for seed in range(200):
        t = generate_random(7, seed=seed, tree_type="I")
        if general_hypothesis(t) or one_zero_hypothesis(t):
            continue
        d = decompose(t)
        assert Counter(d.texts())["S(l^1)"] == len(t.fixed())
