import random
from fractions import Fraction
from math import lcm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anticanonical.cycles import (
    Cycle,
    DihedralElement,
    canonical_form,
    dihedral_canonical,
    dihedral_equal,
    dihedral_group,
    generate_subgroup,
    intersection_matrix,
    invariants_of,
    is_negative_definite,
    relabeling,
    symmetry_group,
)
from anticanonical.errors import LengthOutOfRange

from strategies import cycles


def test_cycle_parse_and_text():
    assert Cycle.parse("0,1,1,2,1,1") == Cycle((0, 1, 1, 2, 1, 1))
    assert Cycle.parse("(-1,2,1,1)") == (-1, 2, 1, 1)
    assert Cycle.parse("[3, 2, 2]") == (3, 2, 2)
    assert str(Cycle((1, 2, 3))) == "(1,2,3)"
    with pytest.raises(LengthOutOfRange):
        Cycle((1, 2))


def test_invariants_examples():
    inv = invariants_of(Cycle((3, 2, 2, 2, 2, 2)))
    assert (inv.d_squared, inv.charge, inv.lambda_rank) == (-1, 7, 5)
    hexagon = invariants_of(Cycle((1,) * 6))
    assert (hexagon.d_squared, hexagon.charge) == (6, 0)
    assert hexagon.lambda_rank is None
    elliptic = invariants_of(Cycle((2,) * 9))
    assert (elliptic.d_squared, elliptic.charge) == (0, 3)


def test_intersection_matrix_shape():
    m = intersection_matrix(Cycle((3, 2, 4)))
    assert m == [[-3, 1, 1], [1, -2, 1], [1, 1, -4]]


@pytest.mark.parametrize(
    "c, expected",
    [
        ((3, 2, 2, 2, 2, 2), True),
        ((2,) * 6, False),
        ((2, 2, 2, 1, 2, 2), False),
        ((3, 3, 3), True),
        ((2, 2, 2), False),
    ],
)
def test_negative_definite_examples(c, expected):
    assert is_negative_definite(Cycle(c)) is expected


def test_dihedral_group_structure():
    for n in (3, 6, 9):
        g = dihedral_group(n)
        assert len(set(g)) == 2 * n
        for a in g:
            assert a.compose(a.inverse()).is_identity
    r, s = DihedralElement(8, 1), DihedralElement(8, 0, True)
    assert len(generate_subgroup(8, [r, s])) == 16
    assert len(generate_subgroup(8, [DihedralElement(8, 2), s])) == 8


def test_relabeling_and_symmetry():
    c = Cycle((2, 1, 2, 2, 1, 2, 2, 1, 2))
    d = Cycle((1, 2, 2, 1, 2, 2, 1, 2, 2))
    g = relabeling(c, d)
    assert g is not None and g.act(c) == d
    assert relabeling(c, Cycle((1,) * 9)) is None
    assert len(symmetry_group(Cycle((2,) * 9))) == 18
    assert len(symmetry_group(Cycle((2, 2, 1) * 3))) == 6
    assert len(symmetry_group(Cycle((3, 4, 5, 2, 2, 2, 2, 2, 2)))) == 1


@settings(max_examples=300, deadline=None)
@given(cycles(), st.data())
def test_action_is_right_action(c, data):
    n = len(c)
    g = data.draw(st.sampled_from(dihedral_group(n)))
    h = data.draw(st.sampled_from(dihedral_group(n)))
    assert g.compose(h).act(c) == h.act(g.act(c))


@settings(max_examples=1000, deadline=None)
@given(cycles(lo=-3, hi=6), st.data())
def test_canonical_form_idempotent_and_orbit_constant(c, data):
    c = Cycle(c)
    canon, g = dihedral_canonical(c)
    assert g.act(c) == canon
    assert canonical_form(canon) == canon
    h = data.draw(st.sampled_from(dihedral_group(len(c))))
    moved = Cycle(h.act(c))
    assert canonical_form(moved) == canon
    assert dihedral_equal(c, moved)
    assert invariants_of(moved) == invariants_of(c)


# Independent definiteness oracle: Gram-Schmidt with respect to the form itself.
# A basis vector with non-negative square is an explicit witness against
# definiteness; otherwise the form is diagonal with negative entries.


def _bilinear(c, x, y):
    n = len(c)
    total = 0
    for i in range(n):
        total -= c[i] * x[i] * y[i]
        total += x[i] * y[(i + 1) % n] + x[(i + 1) % n] * y[i]
    return total


def _witness(c):
    """Nonzero integer x with x.Mx >= 0, or None when the form is negative definite."""
    n = len(c)
    basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(n):
        q = _bilinear(c, basis[k], basis[k])
        if q >= 0:
            scale = lcm(*(v.denominator for v in basis[k]))
            return [int(v * scale) for v in basis[k]]
        for r in range(k + 1, n):
            f = _bilinear(c, basis[k], basis[r]) / q
            basis[r] = [a - f * b for a, b in zip(basis[r], basis[k])]
    return None


_rng = random.Random(20261016)


@settings(max_examples=1000, deadline=None)
@given(st.one_of(cycles(), cycles(lo=2, hi=5)))
def test_negative_definite_matches_form_oracle(c):
    c = Cycle(c)
    w = _witness(c)
    if w is None:
        assert is_negative_definite(c)
        for _ in range(200):
            x = [_rng.randint(-5, 5) for _ in c]
            if any(x):
                assert _bilinear(c, x, x) < 0
    else:
        assert any(w) and _bilinear(c, w, w) >= 0
        assert not is_negative_definite(c)


@settings(max_examples=500, deadline=None)
@given(cycles(min_len=6, max_len=9, lo=1, hi=6))
def test_negative_definite_charge_at_least_three(c):
    c = Cycle(c)
    if is_negative_definite(c):
        assert invariants_of(c).charge >= 3
        assert invariants_of(c).lambda_rank == invariants_of(c).charge - 2
