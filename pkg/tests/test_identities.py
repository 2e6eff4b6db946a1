from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from zerodim.bounds import SystemProfile, nss_bounds, perron_bounds
from zerodim.harness import nss2_system
from zerodim.identities import (
    BezoutIdentity,
    NonTriangularError,
    monomials_upto,
    nss_search,
    perron_search,
    solve_triangular,
    verify_identity,
    weighted_monomials,
)
from zerodim.logval import log2_interval
from zerodim.poly import MPoly, poly_eval, poly_height

x = MPoly.var(1, 0)
x1, x2 = MPoly.var(2, 0), MPoly.var(2, 1)


def test_coprime_linear_forms():
    ident = nss_search([x, x - 1], 3)
    assert ident.a == 1 and ident.delta == 1
    assert verify_identity(ident, [x, x - 1])


def test_certificate_needs_degree_two():
    ident = nss_search([x - 2, x ** 2], 4)
    assert ident.a == 4 and ident.delta == 2
    assert verify_identity(ident, [x - 2, x ** 2])


def test_consistent_system_has_no_certificate():
    assert nss_search([x], 3) is None


def test_corrupted_identity_fails_verification():
    ident = nss_search([x - 2, x ** 2], 4)
    bad = BezoutIdentity(ident.a + 1, ident.cofactors, ident.delta)
    assert not verify_identity(bad, [x - 2, x ** 2])


@pytest.mark.parametrize("n,h,expected", [(1, 1, 4), (1, 2, 16), (2, 1, 16), (2, 2, 256), (2, 3, 4096)])
def test_nss2_forces_large_constant(n, h, expected):
    f = nss2_system(n, 2, h)
    ident = nss_search(f, 6)
    assert verify_identity(ident, f)
    assert ident.a == expected
    assert ident.height_a().lo >= 2 ** n * h


def test_perron_on_a_line_and_a_parabola():
    rels = perron_search([x - 2, x ** 2])
    assert len(rels) == 1
    P = rels[0].P
    y1, y2 = MPoly.var(2, 0), MPoly.var(2, 1)
    assert P in (y1 ** 2 + 4 * y1 - y2 + 4, -(y1 ** 2 + 4 * y1 - y2 + 4))
    assert verify_identity(rels[0], [x - 2, x ** 2])


def test_perron_chain_two_variables():
    f = [x1 - 2, x2 - x1 ** 2, x2 ** 2]
    rels = perron_search(f)
    assert rels
    b = perron_bounds([1, 2, 2], [poly_height(g) for g in f])
    for r in rels:
        assert verify_identity(r, f)
        assert r.degree_in(0) >= 4
        assert max(r.weighted_degrees().values()) <= b.weighted_degree
        assert r.height().lo >= 4


def test_weighted_monomials():
    assert set(weighted_monomials([1, 2], 2)) == {(0, 0), (1, 0), (2, 0), (0, 1)}
    assert len(monomials_upto(2, 2)) == 6


def test_solve_triangular():
    V = solve_triangular([x1 ** 2 - 4, x2 - x1 ** 2 * 3])
    assert set(V.points) == {(2, 12), (-2, 12)}
    with pytest.raises(NonTriangularError):
        solve_triangular([x1 * x2 - 1, x2 - 1])
    with pytest.raises(ValueError):
        solve_triangular([x1 ** 2 - 2, x2])


@settings(max_examples=25, deadline=None)
@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(1, 3))
def test_disjoint_roots_always_certified(a, b, k):
    if a == b:
        return
    f = [(x - a) ** k, x - b]
    prof = SystemProfile.from_system(f)
    ident = nss_search(f, nss_bounds(prof).degree)
    assert ident is not None and verify_identity(ident, f)
    assert ident.height_a().hi <= nss_bounds(prof).height.hi
