from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from zerodim.bounds import SystemProfile
from zerodim.heights import PointVariety
from zerodim.poly import MPoly, poly_eval, u_eval, u_mod, ucoeffs
from zerodim.variety import (
    NotSeparatingError,
    build_rur,
    certify_value,
    chow_form,
    find_separating_form,
    ideal_presentation,
    is_separating,
    monomial_basis,
    remainder,
    umap,
    umap_oracle,
)

from strategies import polys, varieties

F = Fraction


def _rur(V):
    return build_rur(V, find_separating_form(V))


def test_chow_form_of_two_points():
    V = PointVariety(1, ((1,), (-1,)))
    ch = chow_form(V)
    U0, U1 = MPoly.var(2, 0), MPoly.var(2, 1)
    assert ch.form == (U0 + U1) * (U0 - U1)


def test_chow_form_clears_denominators():
    V = PointVariety(1, ((F(1, 2),),))
    ch = chow_form(V)
    U0, U1 = MPoly.var(2, 0), MPoly.var(2, 1)
    assert ch.form == 2 * U0 + U1
    assert ch.c == 2


def test_rur_two_points_sign():
    V = PointVariety(1, ((1,), (-1,)))
    rur = build_rur(V, (1,))
    assert list(rur.omega0) == [-1, 0, 1]
    assert [list(w) for w in rur.omegas] == [[2]]
    for z in V.points:
        assert rur.point_at(z[0]) == z


def test_separating_form_examples():
    V = PointVariety(2, ((0, 0), (1, 0), (0, 1), (1, 1)))
    assert not is_separating(V, (1, 1))
    u = find_separating_form(V)
    assert is_separating(V, u)
    assert find_separating_form(PointVariety(2, ((2, 4),))) == (0, 0)
    with pytest.raises(NotSeparatingError):
        build_rur(V, (1, 1))


def test_single_point_rur():
    rur = _rur(PointVariety(2, ((2, 4),)))
    assert list(rur.omega0) == [0, 1]
    assert [list(w) for w in rur.omegas] == [[2], [4]]


def test_monomial_basis_greedy_order():
    V = PointVariety(2, ((0, 0), (1, 0), (0, 1)))
    assert monomial_basis(V).exponents == ((0, 0), (1, 0), (0, 1))
    B = monomial_basis(PointVariety(1, ((0,), (1,), (2,))))
    assert B.exponents == ((0,), (1,), (2,))
    assert B.delta == 2


def test_remainder_of_square_on_single_point():
    V = PointVariety(1, ((2,),))
    rur = _rur(V)
    rem = remainder(V, rur, monomial_basis(V), MPoly.var(1, 0) ** 2)
    assert rem.pbar == MPoly.constant(1, 4)
    assert rem.a == 1


def test_remainder_of_half_point():
    V = PointVariety(1, ((F(1, 2),),))
    rur = _rur(V)
    rem = remainder(V, rur, monomial_basis(V), MPoly.var(1, 0))
    assert rem.pbar == MPoly.constant(1, F(1, 2))
    assert rem.a == 2 and rem.coefficients == [F(1, 2)]


def test_presentation_on_two_points():
    V = PointVariety(2, ((0, 1), (2, 3)))
    gens = ideal_presentation(V, _rur(V))
    assert gens
    for g in gens:
        for z in V.points:
            assert poly_eval(g, z) == 0


def test_certify_value():
    x = MPoly.var(1, 0)
    prof = SystemProfile.from_system([x ** 2 - 2])
    assert certify_value(prof, x, F(14142, 10000), F(1, 1000)) == "nonzero"
    assert certify_value(prof, MPoly(1, {}), F(0), F(0)) == "zero"
    assert certify_value(prof, x, F(1, 1000), F(1, 100)) == "unknown"


# -- properties ----------------------------------------------------------------

small = st.builds(F, st.integers(-9, 9), st.integers(1, 3))


@settings(max_examples=40, deadline=None)
@given(varieties(max_n=2, max_D=4, coords=small))
def test_rur_recovers_points(V):
    rur = _rur(V)
    w0 = rur.omega0
    assert len(w0) - 1 == V.D
    for z in V.points:
        t = sum(ui * c for ui, c in zip(rur.u, z))
        assert u_eval(w0, t) == 0
        assert rur.point_at(t) == tuple(F(c) for c in z)


@settings(max_examples=40, deadline=None)
@given(varieties(max_n=2, max_D=4, coords=small), polys(nvars=2, max_deg=3))
def test_umap_matches_lagrange_oracle(V, p):
    p = p if V.n == 2 else MPoly(1, {e[:1]: c for e, c in p.items() if e[1] == 0})
    rur = _rur(V)
    assert umap(rur, p) == umap_oracle(V, rur, p)


@settings(max_examples=40, deadline=None)
@given(varieties(max_n=2, max_D=4, coords=small), polys(nvars=2, max_deg=3))
def test_umap_kills_the_ideal(V, p):
    if V.n != 2:
        return
    rur = _rur(V)
    for g in ideal_presentation(V, rur):
        assert not any(umap(rur, g * p) if p else umap(rur, g))


@settings(max_examples=30, deadline=None)
@given(varieties(max_n=2, max_D=4, coords=small), polys(nvars=2, max_deg=3))
def test_remainder_agrees_on_points(V, p):
    if V.n != 2:
        return
    rur = _rur(V)
    B = monomial_basis(V)
    rem = remainder(V, rur, B, p)
    for z in V.points:
        assert poly_eval(rem.pbar, z) == poly_eval(p, z)
    assert set(rem.pbar.terms) <= set(B.exponents)
    assert all((c * rem.a).denominator == 1 for c in rem.coefficients)


@settings(max_examples=30, deadline=None)
@given(varieties(max_n=2, max_D=4, coords=small))
def test_basis_is_independent_and_staircase(V):
    B = monomial_basis(V)
    assert len(B.exponents) == V.D
    assert B.exponents[0] == (0,) * V.n
    for e in B.exponents[1:]:
        assert any(e[i] and tuple(v - (j == i) for j, v in enumerate(e)) in B.exponents
                   for i in range(V.n))


@settings(max_examples=30, deadline=None)
@given(varieties(max_n=1, max_D=4, coords=small))
def test_omega0_roots_are_the_form_values(V):
    rur = _rur(V)
    vals = [sum(u * c for u, c in zip(rur.u, z)) for z in V.points]
    assert len(set(vals)) == V.D
    lead = rur.omega0[-1]
    prod_ = [F(lead)]
    for v in vals:
        prod_ = [F(0)] + prod_
        for k in range(len(prod_) - 1):
            prod_[k] -= v * prod_[k + 1]
    assert prod_ == [F(c) for c in rur.omega0]
