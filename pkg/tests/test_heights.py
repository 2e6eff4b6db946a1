import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given

from zerodim.heights import (
    PointVariety,
    chow_height_bracket,
    primitive_vector,
    rootin_lhs,
    variety_height,
)
from zerodim.variety import chow_form

from strategies import varieties

@pytest.fixture(autouse=True)
def _precision():
    with mpmath.workprec(200):
        yield


def _inside(iv, ref, tol=mpmath.mpf(10) ** -30):
    # the oracle itself rounds, so allow a margin far below the interval widths
    with mpmath.workprec(200):
        lo = mpmath.mpf(iv.lo.numerator) / iv.lo.denominator
        hi = mpmath.mpf(iv.hi.numerator) / iv.hi.denominator
        return lo - tol <= ref <= hi + tol


@mpmath.workprec(200)
def _oracle_height(V):
    total = mpmath.mpf(0)
    for z in V.points:
        den = math.lcm(*(Fraction(c).denominator for c in z))
        vec = [den] + [int(Fraction(c) * den) for c in z]
        total += mpmath.log(mpmath.sqrt(sum(mpmath.mpf(v) ** 2 for v in vec)), 2)
    return total


def test_primitive_vector():
    assert primitive_vector((Fraction(3, 2),)) == (2, 3)
    assert primitive_vector((Fraction(1, 2), Fraction(-1, 3))) == (6, 3, -2)
    assert primitive_vector((0, 0)) == (1, 0, 0)


def test_single_rational_point():
    V = PointVariety(1, ((Fraction(3, 2),),))
    assert _inside(variety_height(V), mpmath.log(mpmath.sqrt(13), 2))


def test_single_integer_point():
    V = PointVariety(2, ((2, 4),))
    assert _inside(variety_height(V), mpmath.log(21, 2) / 2)


def test_origin_has_height_zero():
    assert variety_height(PointVariety(3, ((0, 0, 0),))) == variety_height(PointVariety(1, ((0,),)))
    assert variety_height(PointVariety(1, ((0,),))).hi == 0


def test_duplicate_points_rejected():
    with pytest.raises(ValueError):
        PointVariety(1, ((1,), (1,)))


def test_bracket_rejects_degree_zero():
    with pytest.raises(ValueError):
        chow_height_bracket(0, 0, 1)


@given(varieties())
def test_height_matches_oracle(V):
    assert _inside(variety_height(V, 96), _oracle_height(V))


@given(varieties(max_D=2), varieties(max_D=2))
def test_height_is_additive_over_disjoint_union(A, B):
    if A.n != B.n or set(A.points) & set(B.points):
        return
    U = A.union(B)
    s = variety_height(A) + variety_height(B)
    u = variety_height(U)
    assert u.lo <= s.hi and s.lo <= u.hi


@given(varieties())
def test_rootin_lhs_is_below_height(V):
    assert rootin_lhs(V).lo <= variety_height(V).hi


@given(varieties(max_D=3))
def test_chow_height_bracket_contains_height(V):
    ch = chow_form(V)
    lo, hi = chow_height_bracket(ch.height(), V.D, V.n)
    h = variety_height(V)
    assert lo.lo <= h.hi and h.lo <= hi.hi
