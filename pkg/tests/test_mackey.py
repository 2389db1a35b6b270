import pytest
from hypothesis import given, settings, strategies as st

from equitree.decomp import decompose, underlying_betti
from equitree.mackey import (LevelValue, decomposition_homology, euler_check, induce_complex,
                             level_homology, line_sphere, point, rotation_sphere, smash,
                             sphere_complex, verify_table)
from equitree.reps import VirtualRep, divisors
from equitree.trees import build, generate_random, validate

lam = VirtualRep.lam


def summary(cx, level):
    return [(v.free, v.torsion) for v in level_homology(cx, level, range(0, 5))]


@pytest.mark.parametrize("cx", [
    point(3), line_sphere(5), rotation_sphere(9, 3), rotation_sphere(5, 2),
    smash(rotation_sphere(3, 1), rotation_sphere(3, 1)),
    smash(line_sphere(5), rotation_sphere(5, 1)),
    induce_complex(rotation_sphere(5, 1), 15),
    sphere_complex(lam(15, 1, 5) + 1),
], ids=lambda c: c.name)
def test_complexes_are_equivariant_and_square_zero(cx):
    cx.check()
    for lv in divisors(cx.order):
        assert euler_check(cx, lv)


def test_rotation_sphere_over_c3():
    cx = sphere_complex(lam(3, 1))
    assert summary(cx, 3)[:3] == [(0, (3,)), (0, ()), (1, ())]
    assert summary(cx, 1)[:3] == [(0, ()), (0, ()), (1, ())]


def test_fixed_rotation_is_a_plain_sphere():
    cx = sphere_complex(lam(9, 3))
    assert summary(cx, 3)[:3] == [(0, ()), (0, ()), (1, ())]
    assert summary(cx, 9)[0] == (0, (3,))


def test_induced_sphere():
    cx = induce_complex(sphere_complex(lam(5, 1)), 15)
    assert summary(cx, 5)[0] == (0, (5, 5, 5))
    assert summary(cx, 15)[0] == (0, (5,))
    assert summary(cx, 1)[2] == (3, ())


def test_sphere_complex_needs_actual_rep():
    with pytest.raises(ValueError):
        sphere_complex(lam(5, 1) - 1)


def test_level_must_divide():
    with pytest.raises(ValueError):
        level_homology(point(9), 2)


def test_level_value_json():
    v = LevelValue(3, 0, 0, (3,))
    assert v.to_json() == {"level": 3, "degree": 0, "free": 0, "torsion": [3]}
    assert not v.is_zero and LevelValue(1, 2, 0).is_zero


@pytest.mark.parametrize("p", [3, 5, 7])
def test_table_matches_chain_oracle(p):
    report = verify_table(p)
    assert report.ok, report.mismatches[:3]
    assert report.checked == 2 * 5 * ((p - 1) + (p - 1) ** 2)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 5, 7, 9, 15, 25, 27]), st.integers(0, 10 ** 6))
def test_level_one_recovers_betti_numbers(m, seed):
    t = generate_random(m, seed=seed)
    try:
        d = decompose(t)
    except Exception:
        return
    frees = [v.free for v in decomposition_homology(d, 1)]
    b0, b2, b4 = underlying_betti(d)
    assert frees == [b0, 0, b2, 0, b4]


def test_decomposition_homology_of_c15_example():
    d = decompose(validate(build(15, "I", [(0, None, 1, 5, 15), (1, 0, 4, 0, 5)])))
    top = decomposition_homology(d, 15)
    assert [v.degree for v in top] == [0, 1, 2, 3, 4]
    assert top[4].free == 1
