import json
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from equitree.decomp import NoTheoremApplies, canonical_eq, decompose
from equitree.obstruct import (admissible_paths, claim_card_eq, cp2_orderings, replay,
                               replay_cp2_orders, replay_tree, stab_bound_check,
                               stab_bound_hypothesis)
from equitree.trees import Weight, build, generate_random, validate
from equitree.vanish import MackeyName


def tree(m, typ, *recs):
    return validate(build(m, typ, recs))


def test_single_root_has_one_vanishing_record():
    (r,) = replay(tree(5, "I", (0, None, 1, 2, 5)))
    assert r.verdict.vanishes and r.level == 5


def test_c15_records_all_vanish():
    recs = replay(tree(15, "I", (0, None, 1, 5, 15), (1, 0, 4, 0, 5)))
    assert len(recs) == 4 and all(r.verdict.vanishes for r in recs)
    assert {r.level for r in recs if r.orbit == 1} == {5}


def test_record_json_line():
    (r,) = replay(tree(5, "I", (0, None, 1, 2, 5)))
    line = r.dumps()
    assert " " not in line
    assert list(json.loads(line)) == ["step", "orbit", "beta", "gamma", "level", "alpha", "verdict"]
    assert json.loads(line)["verdict"] == "vanishes"


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_cp2_split_and_nontrivial_orderings(p):
    for a in range(1, p):
        b = a + p
        w = Weight(a, b, p)
        (split,) = replay_cp2_orders(w, (a, 0, b))
        (cof,) = replay_cp2_orders(w, (a, b, 0))
        assert split.verdict.vanishes
        assert cof.verdict.group is MackeyName.BRACKET_ZMODP and cof.verdict.prime == p


def test_cp2_order_must_permute_the_weights():
    with pytest.raises(ValueError):
        replay_cp2_orders(Weight(1, 2, 5), (1, 1, 0))


@pytest.mark.parametrize("m", [3, 5, 7, 9, 15, 25])
def test_cp2_always_has_a_split_ordering(m):
    for a in range(m):
        for b in range(m):
            w = Weight(a, b, m)
            if w.gcd() != 1:
                continue
            assert any(replay_cp2_orders(w, o)[0].verdict.vanishes for o in cp2_orderings(w))


def test_claim_examples():
    assert claim_card_eq([Weight(1, 2, 3), Weight(1, 1, 3)], 1)
    assert claim_card_eq([Weight(1, 2, 9)], 2)


def test_claim_needs_prime_power():
    with pytest.raises(ValueError):
        claim_card_eq([Weight(1, 2, 15), Weight(1, 1, 15)], 1)


def test_admissible_paths_end_at_first_top_valuation():
    found = list(admissible_paths(3, 2, 3))
    assert found
    for path, tau in found:
        assert tau > 0 and (path[-1].a - path[-1].b) % 3 == 0


def test_stab_bound_examples():
    t = tree(9, "I", (0, None, 1, 2, 9), (1, 0, 1, 7, 9), (2, 1, 1, 0, 3))
    assert stab_bound_hypothesis(t) and stab_bound_check(t)
    with pytest.raises(ValueError):
        stab_bound_check(tree(9, "I", (0, None, 1, 2, 9)))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([3, 5, 7, 9, 15, 25, 27]), st.integers(0, 10 ** 6))
def test_replay_agrees_with_decompose(m, seed):
    t = generate_random(m, seed=seed)
    try:
        d = decompose(t)
    except NoTheoremApplies:
        return
    rp = replay_tree(t, d.theorem)
    assert rp.ok
    assert canonical_eq(rp.decomposition(d.theorem), d)
    assert Counter(r.step for r in rp.records)[0] <= 1
