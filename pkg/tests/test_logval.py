from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from zerodim.logval import LogVal, leq_certified, log2_interval, lognorm2, refine_leq

TOL = mpmath.mpf(2) ** -500


@pytest.fixture(autouse=True)
def _precision():
    with mpmath.workprec(600):
        yield


def _mp(q: Fraction):
    # endpoints are dyadic, so this is exact at any working precision
    return mpmath.mpf(q.numerator) / q.denominator


def test_rejects_empty_and_non_dyadic():
    with pytest.raises(ValueError):
        LogVal(Fraction(2), Fraction(1))
    with pytest.raises(ValueError):
        LogVal(Fraction(1, 3), Fraction(1))


def test_exact_powers_of_two():
    assert log2_interval(8) == LogVal.exact(3)
    assert log2_interval(Fraction(1, 4)) == LogVal.exact(-2)
    assert log2_interval(1).is_exact


def test_log2_three_against_oracle():
    iv = log2_interval(3, 64)
    ref = mpmath.log(3, 2)
    assert _mp(iv.lo) - TOL <= ref <= _mp(iv.hi) + TOL
    assert iv.width <= Fraction(1, 2 ** 60)


def test_lognorm_of_pythagorean_vector():
    iv = lognorm2([3, 4])
    assert _mp(iv.lo) - TOL <= mpmath.log(5, 2) <= _mp(iv.hi) + TOL


def test_log_of_nonpositive_rejected():
    with pytest.raises(ValueError):
        log2_interval(0)
    with pytest.raises(ValueError):
        log2_interval(-3)


def test_certified_comparison():
    a, b = LogVal(Fraction(1), Fraction(2)), LogVal(Fraction(3), Fraction(4))
    assert leq_certified(a, b) is True
    assert leq_certified(b, a) is False
    assert leq_certified(a, LogVal(Fraction(3, 2), Fraction(5))) is None


def test_refine_separates_close_values():
    ok, _, _, prec = refine_leq(lambda p: log2_interval(2 ** 40 + 1, p),
                                lambda p: log2_interval(2 ** 40 + 2, p))
    assert ok is True


def test_refine_gives_up_on_equal_values():
    ok, _, _, prec = refine_leq(lambda p: log2_interval(3, p), lambda p: log2_interval(3, p))
    assert ok is None and prec == 1024


positive = st.builds(Fraction, st.integers(1, 10 ** 30), st.integers(1, 10 ** 12))


@given(positive, st.sampled_from([16, 64, 200]))
def test_log2_brackets_oracle(q, prec):
    iv = log2_interval(q, prec)
    ref = mpmath.log(_mp(q), 2)
    assert _mp(iv.lo) - TOL <= ref <= _mp(iv.hi) + TOL


@given(positive, positive)
def test_log_of_product_is_sum(a, b):
    lhs = log2_interval(a * b)
    rhs = log2_interval(a) + log2_interval(b)
    assert lhs.lo <= rhs.hi and rhs.lo <= lhs.hi


@given(positive, positive, st.fractions(-5, 5, max_denominator=7))
def test_arithmetic_is_outward(a, b, k):
    A, B = log2_interval(a), log2_interval(b)
    ra, rb = mpmath.log(_mp(a), 2), mpmath.log(_mp(b), 2)
    s = A + B
    assert _mp(s.lo) - TOL <= ra + rb <= _mp(s.hi) + TOL
    d = A - B
    assert _mp(d.lo) - TOL <= ra - rb <= _mp(d.hi) + TOL
    m = A.scale(k)
    assert _mp(m.lo) - TOL <= _mp(k) * ra <= _mp(m.hi) + TOL
    p = A * B
    assert _mp(p.lo) - TOL <= ra * rb <= _mp(p.hi) + TOL


@given(positive)
def test_higher_precision_nests(q):
    lo, hi = log2_interval(q, 32), log2_interval(q, 256)
    assert lo.lo <= hi.lo and hi.hi <= lo.hi
