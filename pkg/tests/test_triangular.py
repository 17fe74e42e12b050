from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superhopf.exact import CycScalar
from superhopf.hopf import PairElement, flip
from superhopf.superalg import GroupTable, group_algebra
from superhopf.triangular import (
    check_quasitriangular,
    check_triangular,
    drinfeld_element,
    drinfeld_report,
    is_rank_le_2,
    minimal_part,
    r_u,
    sweedler,
    sweedler_hopf,
    sweedler_r,
)
from superhopf.twist import sweedler_j, twist_r

ONE = CycScalar.one()
HALF = CycScalar.rational("1/2")


def _expected_r(lam):
    """Hand expansion of (J_lam)_21^-1 R_g J_lam on the basis (1, g, x, gx)."""
    c = CycScalar.rational(lam) * HALF
    R = {(0, 0): HALF, (0, 1): HALF, (1, 0): HALF, (1, 1): -HALF}
    for key, sign in (((2, 2), -1), ((3, 2), -1), ((2, 3), 1), ((3, 3), -1)):
        R[key] = c * sign
    return PairElement(4, {k: v for k, v in R.items() if v})


@pytest.mark.parametrize("lam", [0, 1, -2, Fraction(3, 5)])
def test_sweedler_family(lam):
    T = sweedler(CycScalar.rational(lam))
    assert check_triangular(T.hopf, T.r).ok
    assert T.r == _expected_r(lam)
    assert twist_r(T.hopf, r_u(T.hopf, {1: ONE}), sweedler_j(CycScalar.rational(lam))) == T.r
    assert drinfeld_element(T.hopf, T.r) == (0, 1, 0, 0)
    assert minimal_part(T.hopf, T.r)[1] == (2 if lam == 0 else 4)


def test_flipped_sign_pattern_is_not_triangular():
    # R_g - (lam/2)(x(x)x - gx(x)x + x(x)gx + gx(x)gx) is the flip of the structure above
    H = sweedler_hopf()
    R = sweedler_r(1)
    literal = PairElement(4, flip(H, R.coeffs))
    rep = check_quasitriangular(H, literal)
    assert rep["intertwines_coproduct"].passed
    assert not rep["delta_left"].passed and not rep["delta_right"].passed


@given(st.fractions(min_value=-10, max_value=10, max_denominator=9))
def test_sweedler_random_lambda(lam):
    T = sweedler(CycScalar.rational(lam))
    assert check_triangular(T.hopf, T.r).ok
    assert drinfeld_report(T.hopf, T.r).ok
    assert minimal_part(T.hopf, T.r)[1] == (2 if lam == 0 else 4)
    assert is_rank_le_2(T.hopf, T.r) == (lam == 0)


def test_r_u_on_group_algebra():
    H = group_algebra(GroupTable.cyclic(2))
    R = r_u(H, {1: ONE})
    assert check_triangular(H, R).ok
    assert drinfeld_element(H, R) == (0, 1)
    assert is_rank_le_2(H, R)


def test_r_u_requires_involutive_grouplike():
    H = group_algebra(GroupTable.cyclic(4))
    with pytest.raises(ValueError):
        r_u(H, {1: ONE})
    with pytest.raises(ValueError):
        r_u(H, {0: ONE, 2: ONE})


def test_non_triangular_detected():
    H = sweedler_hopf()
    R = PairElement(4, {(0, 0): ONE, (2, 2): ONE})
    rep = check_triangular(H, R)
    assert not rep.ok
    assert not rep["intertwines_coproduct"].passed


def test_trivial_r_on_group_algebra_has_trivial_drinfeld_element():
    H = group_algebra(GroupTable.from_spec("Z2xZ2"))
    R = PairElement.unit(H)
    assert check_triangular(H, R).ok
    assert drinfeld_element(H, R) == (1, 0, 0, 0)
    assert minimal_part(H, R)[1] == 1
