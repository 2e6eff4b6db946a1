from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zerodim.parsing import ParseError, parse_points, parse_poly, parse_system
from zerodim.poly import MPoly, format_poly

from strategies import polys

x1, x2 = MPoly.var(2, 0), MPoly.var(2, 1)


def test_basic_polynomial():
    assert parse_poly("x1^3 - 32*x2 + 7") == x1 ** 3 - 32 * x2 + 7


def test_leading_minus_and_parentheses():
    assert parse_poly("-x1 + 2") == -MPoly.var(1, 0) + 2
    assert parse_poly("(x1 + x2)*(x1 - x2)") == x1 ** 2 - x2 ** 2
    assert parse_poly("3*(-x1)", 1) == -3 * MPoly.var(1, 0)


def test_huge_literals_stay_exact():
    big = 10 ** 40 + 1
    assert parse_poly(f"{big}*x1").coefficient((1,)) == big


def test_comments_and_whitespace():
    assert parse_poly("x1 # a comment\n + 1") == MPoly.var(1, 0) + 1


def test_system_shares_one_ring():
    sys_ = parse_system("x1 - 1\n\n# skip\nx3^2\n")
    assert [f.nvars for f in sys_] == [3, 3]


@pytest.mark.parametrize("text,line,col", [
    ("x1^-1", 1, 4),
    ("x1 +", 1, 5),
    ("x1 $ 2", 1, 4),
    ("x0", 1, 1),
    ("", 1, 1),
    ("(x1", 1, 4),
])
def test_errors_carry_position(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_poly(text)
    assert (info.value.line, info.value.column) == (line, col)


def test_system_error_reports_line():
    with pytest.raises(ParseError) as info:
        parse_system("x1\nx2 +* 3\n")
    assert info.value.line == 2


def test_declared_variable_count_enforced():
    with pytest.raises(ParseError):
        parse_poly("x3", 2)


def test_points():
    V = parse_points("1, 2\n-1/2, 3  # comment\n")
    assert V.points == ((1, 2), (Fraction(-1, 2), 3))
    for bad in ("1, 2\n3\n", "1\n1\n", "1/0\n", "1.5\n", ""):
        with pytest.raises(ParseError):
            parse_points(bad)


@given(polys(nvars=3, max_deg=4, coeffs=st.integers(-10 ** 12, 10 ** 12)))
def test_print_parse_round_trip(f):
    assert parse_poly(format_poly(f), 3) == f


@given(st.text(alphabet="x0123^*+-() #\n\t/.a", max_size=30))
def test_parser_never_crashes(text):
    try:
        parse_system(text)
    except ParseError:
        pass


@given(st.text(alphabet="0123,/- \n#", max_size=30))
def test_points_parser_never_crashes(text):
    try:
        parse_points(text)
    except ParseError:
        pass
