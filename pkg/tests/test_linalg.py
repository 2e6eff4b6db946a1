from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from zerodim.linalg import cramer, det, det_bareiss, nullspace, rank, rref, solve

entries = st.integers(-9, 9)


def matrices(rows=st.integers(1, 5), cols=st.integers(1, 5)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(entries, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0]))


square = st.integers(1, 5).flatmap(
    lambda k: st.lists(st.lists(entries, min_size=k, max_size=k), min_size=k, max_size=k))


def test_small_examples():
    assert det_bareiss([[2, 1], [1, 3]]) == 5
    assert det([[Fraction(1, 2), 0], [0, 4]]) == 2
    assert rank([[1, 2], [2, 4]]) == 1
    assert solve([[1, 1], [1, -1]], [3, 1]) == [2, 1]
    assert solve([[1, 1], [1, 1]], [1, 2]) is None
    assert nullspace([[1, 2]]) == [[2, -1]]
    assert cramer([[2, 0], [0, 3]], [4, 9]) == (6, [12, 18])


def test_rref_rows_are_primitive_integers():
    rows, piv = rref([[2, 4], [1, 3]])
    assert piv == [0, 1]
    for r in rows:
        assert all(isinstance(v, int) for v in r)


@given(matrices())
def test_rank_matches_oracle(M):
    assert rank(M) == sympy.Matrix(M).rank()


@given(square)
def test_det_matches_oracle(M):
    assert det_bareiss(M) == sympy.Matrix(M).det()
    assert det(M) == det_bareiss(M)


@given(matrices())
def test_nullspace_vectors(M):
    basis = nullspace(M, len(M[0]))
    assert len(basis) == len(M[0]) - sympy.Matrix(M).rank()
    for v in basis:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in M)
        first = next(x for x in v if x)
        assert first > 0


@given(matrices(), st.lists(entries, min_size=5, max_size=5))
def test_solve_consistency(M, rhs):
    b = rhs[: len(M)]
    x = solve(M, b)
    aug_rank = sympy.Matrix([row + [v] for row, v in zip(M, b)]).rank()
    if x is None:
        assert aug_rank > sympy.Matrix(M).rank()
    else:
        assert [sum(Fraction(a) * xi for a, xi in zip(row, x)) for row in M] == b


@given(square, st.lists(entries, min_size=5, max_size=5))
def test_cramer_solves(M, rhs):
    b = rhs[: len(M)]
    d, nums = cramer(M, b)
    assert d == det_bareiss(M)
    if d:
        x = [Fraction(v, d) for v in nums]
        assert [sum(a * xi for a, xi in zip(row, x)) for row in M] == b
