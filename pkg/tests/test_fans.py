import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anticanonical import lattice as L
from anticanonical.cycles import Cycle, dihedral_equal, invariants_of, symmetry_group
from anticanonical.errors import NotContractible, NotToric
from anticanonical.fans import (
    Fan,
    are_opposite,
    corner_blowdown,
    corner_blowup,
    cycle_from_fan,
    fan_from_cycle,
    fan_symmetries,
    insert_ray,
    is_toric,
    opposite_pairs,
    winding_number,
)
from anticanonical.pairs import HEXAGON

from strategies import P2, hirzebruch, toric_fans


def test_small_fans():
    assert Fan(P2).cycle == (-1, -1, -1)
    for a in range(4):
        assert hirzebruch(a).cycle == (0, a, 0, -a)
    assert Fan(HEXAGON).cycle == (1,) * 6


def test_fan_from_cycle_normalizes():
    f = fan_from_cycle((0, 1, 1, 2, 1, 1))
    assert f.rays[:2] == ((1, 0), (0, 1))
    assert f.cycle == (0, 1, 1, 2, 1, 1)


@pytest.mark.parametrize("c", [(2, 2, 2, 2), (1, 1, 1, 1, 1), (3, 2, 2, 2, 2, 2)])
def test_wrong_sum_is_not_toric(c):
    with pytest.raises(NotToric):
        fan_from_cycle(c)
    assert not is_toric(c)


def test_double_winding_is_not_toric():
    # twelve (-1)-curves close up, but only after going around twice
    c = (1,) * 12
    with pytest.raises(NotToric, match="winding"):
        fan_from_cycle(c)
    assert winding_number(HEXAGON + HEXAGON) == 2


def test_right_sum_may_still_fail_to_close():
    assert sum((1, 0, 0, 3, 2, 2, 1, 2, 4)) == 15
    assert not is_toric((1, 0, 0, 3, 2, 2, 1, 2, 4))


def test_fan_rejects_bad_rays():
    with pytest.raises(NotToric):
        Fan(((1, 0), (1, 2), (-1, -1)))
    with pytest.raises(NotToric):
        Fan(((1, 0), (-1, -1), (0, 1)))


def test_blowup_and_blowdown():
    f = Fan(HEXAGON)
    g = corner_blowup(f, 3)
    assert g.rays[3] == (-1, 1)
    assert g.cycle == (1, 1, 2, 1, 2, 1, 1)
    assert corner_blowdown(g, 4) == f
    with pytest.raises(NotContractible):
        corner_blowdown(g, 3)
    with pytest.raises(NotContractible):
        corner_blowdown(Fan(P2), 1)
    assert insert_ray(f, (-1, 1)) == g


def test_opposite_pairs_on_hexagon():
    f = Fan(HEXAGON)
    assert opposite_pairs(f) == [(1, 4), (2, 5), (3, 6), (4, 1), (5, 2), (6, 3)]
    assert are_opposite(f, 1, 4)
    assert not are_opposite(f, 1, 3)


def test_hexagon_symmetries():
    syms = fan_symmetries(Fan(HEXAGON))
    assert len(syms) == 12
    for g, m in syms:
        assert abs(L.matdet(m)) == 1
        assert L.matdet(m) == (-1 if g.reflected else 1)


@settings(max_examples=500, deadline=None)
@given(toric_fans())
def test_sum_rule_and_round_trip(f):
    c = cycle_from_fan(f)
    assert sum(c) == 3 * len(c) - 12
    assert invariants_of(c).charge == 0
    g = fan_from_cycle(c)
    assert g.cycle == c
    assert g == f


@settings(max_examples=500, deadline=None)
@given(toric_fans(), st.data())
def test_blowup_blowdown_inverse(f, data):
    i = data.draw(st.integers(1, len(f)))
    g = corner_blowup(f, i)
    assert len(g) == len(f) + 1
    assert invariants_of(g.cycle).charge == 0
    assert corner_blowdown(g, i + 1).rays == f.rays


@settings(max_examples=300, deadline=None)
@given(toric_fans(), st.sampled_from([((1, 1), (0, 1)), ((2, 1), (1, 1)), ((0, -1), (1, 0))]), st.data())
def test_basis_change_invariance(f, m, data):
    g = f.transformed(m)
    assert g.cycle == f.cycle
    i = data.draw(st.integers(1, len(f)))
    j = data.draw(st.integers(1, len(f)))
    assert are_opposite(f, i, j) == are_opposite(g, i, j)


@settings(max_examples=300, deadline=None)
@given(toric_fans())
def test_symmetries_preserve_cycle(f):
    c = f.cycle
    syms = fan_symmetries(f)
    assert syms[0][0].is_identity
    for g, _ in syms:
        assert g.act(c) == c
    # the cycle determines the fan, so every relabeling symmetry is realized
    assert sorted(map(str, (g for g, _ in syms))) == sorted(map(str, symmetry_group(c)))
    k = 1 % len(f)
    assert dihedral_equal(f.rotated(k).cycle, c)
    assert Cycle(f.rotated(k).cycle) == Cycle(c[k:] + c[:k])
