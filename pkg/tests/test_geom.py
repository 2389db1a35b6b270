from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from equitree.geom import (Block, StepKind, compatible_same_group, compatible_subgroup,
                           equivalent_weights, filtration_steps, fixed_census_block,
                           tangential_reps)
from equitree.reps import VirtualRep, divisors
from equitree.trees import Weight, build, generate_random


@st.composite
def weights(draw, orders=(3, 5, 7, 9, 15, 21, 25, 27)):
    m = draw(st.sampled_from(orders))
    a, b = draw(st.integers(0, m - 1)), draw(st.integers(0, m - 1))
    w = Weight(a, b, m)
    if w.gcd() != 1:
        w = Weight(1, b, m)
    return w


def test_tangential_reps_at_coordinate_points():
    top = tangential_reps(Weight(1, 2, 5))
    assert top == (VirtualRep.lam(5, 1, 4), VirtualRep.lam(5, 4, 3), VirtualRep.lam(5, 1, 2))


@given(weights())
def test_affine_move_permutes_tangent_reps(w):
    moved = Weight(w.a - w.b, -w.b, w.stab)
    assert Counter(tangential_reps(moved)) == Counter(tangential_reps(w))


def test_compatible_same_group_examples():
    assert compatible_same_group(Weight(1, 2, 5), Weight(1, 3, 5))
    assert compatible_same_group(Weight(1, 2, 5), Weight(2, 4, 5))
    assert not compatible_same_group(Weight(1, 2, 5), Weight(1, 2, 5))


def test_compatible_same_group_needs_same_group():
    with pytest.raises(ValueError):
        compatible_same_group(Weight(1, 2, 5), Weight(1, 2, 15))


@given(st.sampled_from([3, 5, 7, 9, 15]).flatmap(
    lambda m: st.tuples(weights((m,)), weights((m,)))))
def test_compatible_same_group_symmetric(pair):
    w1, w2 = pair
    assert compatible_same_group(w1, w2) == compatible_same_group(w2, w1)


def test_compatible_subgroup_examples():
    assert compatible_subgroup(Weight(1, 5, 15), Weight(4, 0, 5))
    for a in range(5):
        for b in range(5):
            w = Weight(a, b, 5)
            if w.gcd() == 1:
                assert not compatible_subgroup(Weight(1, 2, 15), w)
    assert not compatible_subgroup(Weight(1, 5, 15), Weight(0, 0, 5))


def test_compatible_subgroup_needs_proper_divisor():
    with pytest.raises(ValueError):
        compatible_subgroup(Weight(1, 5, 15), Weight(1, 0, 15))


def test_equivalent_weights_closed():
    cls = equivalent_weights(Weight(1, 2, 7))
    for a, b in cls:
        assert (b, a) in cls and ((a - b) % 7, -b % 7) in cls


def test_census_examples():
    c = fixed_census_block(Weight(1, 2, 15), 3)
    assert (c.isolated_points, c.sphere_components) == (3, 0)
    c = fixed_census_block(Weight(1, 1, 3), 3)
    assert (c.isolated_points, c.sphere_components) == (1, 1)
    for block in Block:
        assert fixed_census_block(Weight(1, 2, 15), 1, block).whole_space


@given(weights())
def test_census_euler_characteristic(w):
    for d in divisors(w.stab)[1:]:
        assert fixed_census_block(w, d, Block.CP2).euler_characteristic(Block.CP2) == 3
        assert fixed_census_block(w, d, Block.S4).euler_characteristic(Block.S4) == 2


def test_census_rejects_non_divisor():
    with pytest.raises(ValueError):
        fixed_census_block(Weight(1, 2, 15), 4)


def test_filtration_single_roots():
    t = build(5, "I", [(0, None, 1, 2, 5)])
    steps = filtration_steps(t)
    assert [s.kind for s in steps] == [StepKind.BASE, StepKind.ROOT_MIDDLE, StepKind.ROOT_TOP]
    assert steps[1].grading == VirtualRep.lam(5, -1)
    assert steps[2].grading == VirtualRep.lam(5, 1, 2)
    t = build(15, "II", [(0, None, 1, 2, 15)])
    assert [s.kind for s in filtration_steps(t)] == [StepKind.BASE, StepKind.ROOT_TOP]


def test_filtration_two_vertex_c3():
    t = build(3, "I", [(0, None, 1, 2, 3), (1, 0, 1, 1, 3)])
    steps = filtration_steps(t)
    assert len(steps) == 4
    assert steps[1].kind is StepKind.ORBIT and steps[1].grading == VirtualRep.zero(3) + 2


def test_filtration_step_json():
    t = build(15, "I", [(0, None, 1, 5, 15), (1, 0, 4, 0, 5)])
    assert filtration_steps(t)[1].to_json() == {"kind": "orbit", "orbit": 1, "stab": 5, "grading": "l^4"}


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([3, 5, 7, 9, 15, 25, 27]), st.integers(0, 10 ** 6))
def test_filtration_shape(m, seed):
    t = generate_random(m, seed=seed)
    steps = filtration_steps(t)
    assert len(steps) == 1 + len(t.orbits) + (1 if t.tree_type == "I" else 0)
    attach = [s for s in steps if s.kind is StepKind.ORBIT]
    assert Counter(s.stab for s in attach) == Counter(o.stab for o in t.orbits if o.parent is not None)
    levels = [t[s.orbit].level for s in attach]
    assert levels == sorted(levels, reverse=True)
