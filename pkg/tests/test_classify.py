import itertools

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from anticanonical.classify import (
    _orbits,
    deformation_types,
    feasible_presentations,
    has_alternating_twos,
    orbit_upper_bound,
    realized_subgroup,
)
from anticanonical.cycles import Cycle, dihedral_group, is_negative_definite
from anticanonical.errors import ContainsMinusOneCurve, LengthOutOfRange, NotNegativeDefinite
from anticanonical.pairs import get_model


@pytest.mark.parametrize("name, order", [("T6", 12), ("T7", 14), ("Ti", 8), ("Tii", 16), ("T9", 6)])
def test_realized_orders(name, order):
    r = realized_subgroup(name)
    assert r.order == order
    assert any(g.reflected for g in r.subgroup)


def test_realized_rotations():
    assert sorted(g.rotation for g in realized_subgroup("Ti").subgroup if not g.reflected) == [0, 2, 4, 6]
    assert sorted(g.rotation for g in realized_subgroup("T9").subgroup if not g.reflected) == [0, 3, 6]


@pytest.mark.parametrize("name", ["Ti", "T9"])
def test_realized_subgroup_preserves_elliptic_support(name):
    model = get_model(name)
    support = tuple(int(a == 1) for a in model.cycle)
    for g in realized_subgroup(name).subgroup:
        assert g.act(support) == support
        assert g.act(model.cycle) == model.cycle


def test_feasible_presentations_examples():
    pres = feasible_presentations((3, 2, 2, 2, 2, 2))
    assert len(pres) == 12
    pres = feasible_presentations((3, 2, 3, 2, 3, 2, 3, 2))
    ti = [p for p in pres if p.model == "Ti"]
    tii = [p for p in pres if p.model == "Tii"]
    assert ti and tii
    odd_only = [p for p in ti if all(m == 0 for m in p.marks[1::2])]
    assert odd_only
    for p in ti:
        assert p.pi1.order == (2 if p in odd_only else 1)
    assert all(p.pi1.is_trivial for p in tii)
    for p in pres:
        c = p.pair().cycle
        assert tuple(c) == tuple((3, 2, 3, 2, 3, 2, 3, 2)[p.alignment(k)] for k in range(8))


def test_input_checks():
    with pytest.raises(NotNegativeDefinite):
        deformation_types((2, 2, 2, 2, 2, 2))
    with pytest.raises(ContainsMinusOneCurve):
        deformation_types((1, 3, 3, 3, 3, 3))
    with pytest.raises(NotNegativeDefinite):
        feasible_presentations((1, 3, 3, 3, 3, 3))
    with pytest.raises(LengthOutOfRange):
        deformation_types((3, 3, 3, 3, 3))
    with pytest.raises(LengthOutOfRange):
        deformation_types((3,) * 10)


@pytest.mark.parametrize(
    "c, count",
    [
        ((3, 2, 2, 2, 2, 2), 1),
        ((4, 2, 2, 3, 2, 2), 1),
        ((3, 2, 2, 2, 3, 2, 2), 1),
        ((3, 2, 3, 2, 3, 2, 3, 2), 2),
        ((4, 2, 2, 2, 3, 2, 2, 2), 2),
        ((3, 3, 2, 2, 2, 2, 2, 2), 1),
    ],
)
def test_counts(c, count):
    assert deformation_types(c).count == count


def test_pattern_representatives():
    t = deformation_types((3, 2, 3, 2, 3, 2, 3, 2))
    assert sorted(p.pi1.order for p in t.representatives) == [1, 2]
    assert t.to_json()["count"] == 2


def test_length_nine_interval():
    t = deformation_types((3, 2, 2, 3, 2, 2, 3, 2, 2))
    assert not t.exact
    assert t.lo == 1 and 1 <= t.hi <= 3
    assert t.to_json()["count"] == {"lo": t.lo, "hi": t.hi}
    generic = Cycle((3, 4, 5, 2, 2, 2, 2, 2, 2))
    assert orbit_upper_bound(generic, "T9") == 3
    assert deformation_types(generic).hi == 3


def test_alternating_pattern_detection():
    assert has_alternating_twos((2, 3, 2, 3, 2, 3, 2, 3))
    assert has_alternating_twos((4, 2, 2, 2, 3, 2, 2, 2))
    assert not has_alternating_twos((3, 3, 2, 2, 2, 2, 2, 2))
    assert not has_alternating_twos((2,) * 9)


nd = st.integers(6, 9).flatmap(lambda n: st.lists(st.integers(2, 5), min_size=n, max_size=n))


@settings(max_examples=200, deadline=None)
@given(nd, st.data())
def test_dihedral_invariance(c, data):
    c = Cycle(c)
    assume(is_negative_definite(c))
    g = data.draw(st.sampled_from(dihedral_group(len(c))))
    a, b = deformation_types(c), deformation_types(g.act(c))
    assert (a.lo, a.hi, a.distinct_pi1) == (b.lo, b.hi, b.distinct_pi1)


@settings(max_examples=200, deadline=None)
@given(st.integers(6, 7).flatmap(lambda n: st.lists(st.integers(2, 5), min_size=n, max_size=n)))
def test_full_realized_groups_give_one_orbit(c):
    c = Cycle(c)
    assume(is_negative_definite(c))
    model = "T6" if len(c) == 6 else "T7"
    assert orbit_upper_bound(c, model) == 1


def test_length_eight_dichotomy_exhaustive():
    # every length-8 cycle with entries in [2,4], up to relabeling
    seen = set()
    for c in itertools.product(range(2, 5), repeat=8):
        c = Cycle(c)
        if not is_negative_definite(c):
            continue
        key = min(g.act(c) for g in dihedral_group(8))
        if key in seen:
            continue
        seen.add(key)
        t = deformation_types(c)
        if has_alternating_twos(c):
            assert t.count == 2
            assert sorted(p.pi1.order for p in t.representatives) == [1, 2]
        else:
            assert t.count == 1
            assert all(p.pi1.is_trivial for p in feasible_presentations(c))


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(2, 5), min_size=9, max_size=9))
def test_pi1_constant_on_double_cosets(c):
    c = Cycle(c)
    assume(is_negative_definite(c))
    pres = {p.alignment: p for p in feasible_presentations(c)}
    for orbit in _orbits(c, get_model("T9"), list(pres)):
        assert len({pres[s].pi1 for s in orbit}) == 1
    t = deformation_types(c)
    assert 1 <= t.lo <= t.hi <= 3
    assert t.distinct_pi1 <= t.hi
