"""Bezout identities, algebraic dependence relations and triangular solving.

The searches are bounded-degree linear algebra over Q: unknown
coefficients go into a Macaulay-style matrix and are solved exactly.
Every identity is verified by full expansion before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from math import lcm, prod
from typing import Optional, Sequence, Union

from .heights import PointVariety
from .linalg import nullspace, solve
from .logval import DEFAULT_PRECISION, LogVal, log2_interval
from .poly import MPoly, as_scalar, max_abs_coeff, term_list


class NonTriangularError(ValueError):
    pass


# ---------------------------------------------------------------------------
# triangular chains

def _rational_roots(coeffs: list) -> list[Fraction]:
    """Distinct rational roots of a univariate polynomial given low to high.

    Raises if some root is not rational.
    """
    deg = len(coeffs) - 1
    if deg == 1:
        return [Fraction(-coeffs[0]) / coeffs[1]]
    import sympy

    t = sympy.Symbol("t")
    poly = sympy.Poly([sympy.Rational(Fraction(c).numerator, Fraction(c).denominator)
                       for c in reversed(coeffs)], t, domain="QQ")
    roots, found = [], 0
    for factor, mult in poly.factor_list()[1]:
        if factor.degree() == 1:
            a, b = factor.all_coeffs()
            roots.append(Fraction(int((-b / a).p), int((-b / a).q)))
            found += mult
    if found != deg:
        raise ValueError("head roots not rational")
    return sorted(set(roots))


def solve_triangular(system: Sequence[MPoly]) -> PointVariety:
    """Exact zeros of ``(f_1(x_1), c_2 x_2 - g_2(x_1), ..., c_n x_n - g_n(x_1..x_{n-1}))``."""
    if not system:
        raise NonTriangularError("empty system")
    n = system[0].nvars
    if len(system) != n:
        raise NonTriangularError(f"expected {n} polynomials for {n} variables, got {len(system)}")
    head = system[0]
    if not head or head.is_constant() or head.variables() != {0}:
        raise NonTriangularError("first polynomial must be univariate in x1 and nonconstant")
    coeffs = [0] * (head.degree() + 1)
    for e, c in head.terms.items():
        coeffs[e[0]] = c
    partial = [(r,) for r in _rational_roots(coeffs)]
    for i in range(1, n):
        f = system[i]
        if any(v > i for v in f.variables()) or f.degree_in(i) != 1:
            raise NonTriangularError(f"polynomial {i + 1} is not linear in x{i + 1} over x1..x{i}")
        lead, rest = {}, {}
        for e, c in f.terms.items():
            (lead if e[i] == 1 else rest)[e] = c
        if len(lead) != 1 or any(sum(e) != 1 for e in lead):
            raise NonTriangularError(f"x{i + 1} must appear with a constant coefficient")
        c_i = next(iter(lead.values()))
        g = MPoly(n, rest)
        partial = [
            pt + (as_scalar(-Fraction(g(pt + (0,) * (n - i))) / c_i),)
            for pt in partial
        ]
    return PointVariety(n, tuple(partial))


# ---------------------------------------------------------------------------
# Nullstellensatz certificates

@dataclass(frozen=True)
class BezoutIdentity:
    """``a = sum g_i f_i`` with integer cofactors."""

    a: int
    cofactors: tuple
    delta: int

    def height_a(self, precision: int = DEFAULT_PRECISION) -> LogVal:
        return log2_interval(self.a, precision)

    def to_json(self) -> dict:
        return {
            "a": str(self.a),
            "cofactors": [term_list(g) for g in self.cofactors],
            "delta": self.delta,
        }


def monomials_upto(n: int, deg: int) -> list[tuple]:
    """Exponent vectors of total degree at most ``deg``, in ascending graded order."""
    if deg < 0:
        return []
    out = [e for e in product(range(deg + 1), repeat=n) if sum(e) <= deg]
    out.sort(key=lambda e: (sum(e), tuple(-x for x in e)))
    return out


def _certificate_at(f: Sequence[MPoly], delta: int) -> Optional[BezoutIdentity]:
    n = f[0].nvars
    rows = {e: k for k, e in enumerate(monomials_upto(n, delta))}
    columns = []  # (poly index, multiplier exponent)
    entries = []
    for i, fi in enumerate(f):
        for m in monomials_upto(n, delta - fi.degree()):
            col = {}
            for e, c in fi.terms.items():
                col[rows[tuple(a + b for a, b in zip(e, m))]] = c
            columns.append((i, m))
            entries.append(col)
    if not columns:
        return None
    matrix = [[0] * len(columns) for _ in rows]
    for j, col in enumerate(entries):
        for r, c in col.items():
            matrix[r][j] = c
    rhs = [0] * len(rows)
    rhs[rows[(0,) * n]] = 1
    sol = solve(matrix, rhs)
    if sol is None:
        return None
    a = reduce(lcm, (Fraction(v).denominator for v in sol), 1)
    cof = [dict() for _ in f]
    for (i, m), v in zip(columns, sol):
        if v:
            cof[i][m] = int(Fraction(v) * a)
    return BezoutIdentity(a, tuple(MPoly(n, c) for c in cof), delta)


def nss_search(f: Sequence[MPoly], delta_max: int, delta_min: Optional[int] = None) -> Optional[BezoutIdentity]:
    """Smallest-degree certificate ``a = sum g_i f_i`` with ``deg(g_i f_i) <= delta``.

    Tries ``delta = max deg f_i, ..., delta_max`` and returns None when
    every level is infeasible.
    """
    if not f:
        raise ValueError("empty system")
    for fi in f:
        if not fi:
            raise ValueError("zero polynomial in system")
        if not fi.is_integer():
            raise ValueError("system polynomials must have integer coefficients")
    start = max(fi.degree() for fi in f) if delta_min is None else delta_min
    for delta in range(start, delta_max + 1):
        ident = _certificate_at(f, delta)
        if ident is not None:
            assert verify_identity(ident, f)
            return ident
    return None


# ---------------------------------------------------------------------------
# Perron relations

@dataclass(frozen=True)
class PerronRelation:
    """Nonzero ``P`` in ``y_1..y_{n+1}`` with ``P(f_1, ..., f_{n+1}) = 0``."""

    P: MPoly
    degs: tuple

    def weighted_degrees(self) -> dict:
        return {e: sum(a * d for a, d in zip(e, self.degs)) for e in self.P.terms}

    def degree_in(self, i: int) -> int:
        return self.P.degree_in(i)

    def height(self, precision: int = DEFAULT_PRECISION) -> LogVal:
        return log2_interval(max_abs_coeff(self.P), precision)

    def monomial_heights(self, heights: Sequence, precision: int = DEFAULT_PRECISION) -> dict:
        """``h(c_alpha) + sum alpha_i h_i`` for every monomial of ``P``."""
        out = {}
        for e, c in self.P.terms.items():
            v = log2_interval(abs(c), precision)
            for a, h in zip(e, heights):
                if a:
                    v = v + LogVal.coerce(h).scale(a)
            out[e] = v
        return out

    def to_json(self) -> dict:
        return {"relation": term_list(self.P)}


def weighted_monomials(degs: Sequence[int], limit: int) -> list[tuple]:
    out = []

    def rec(i, prefix, used):
        if i == len(degs):
            out.append(tuple(prefix))
            return
        k = 0
        while used + k * degs[i] <= limit:
            rec(i + 1, prefix + [k], used + k * degs[i])
            k += 1

    rec(0, [], 0)
    out.sort(key=lambda e: (sum(a * d for a, d in zip(e, degs)), tuple(-x for x in e)))
    return out


def perron_search(f: Sequence[MPoly]) -> list[PerronRelation]:
    """Kernel basis of ``c -> sum c_alpha f^alpha`` over ``sum alpha_i d_i <= prod d_i``."""
    if not f:
        raise ValueError("empty system")
    n = f[0].nvars
    if len(f) != n + 1:
        raise ValueError(f"need exactly {n + 1} polynomials in {n} variables, got {len(f)}")
    if any(not fi or fi.is_constant() for fi in f):
        raise ValueError("polynomials must be nonconstant")
    degs = tuple(fi.degree() for fi in f)
    alphas = weighted_monomials(degs, prod(degs))
    cache = [{0: MPoly.constant(n, 1)} for _ in f]

    def power(i, k):
        got = cache[i].get(k)
        if got is None:
            got = power(i, k - 1) * f[i]
            cache[i][k] = got
        return got

    images = []
    for alpha in alphas:
        img = MPoly.constant(n, 1)
        for i, k in enumerate(alpha):
            if k:
                img = img * power(i, k)
        images.append(img)
    row_keys = sorted({e for img in images for e in img.terms})
    index = {e: r for r, e in enumerate(row_keys)}
    matrix = [[0] * len(alphas) for _ in row_keys]
    for j, img in enumerate(images):
        for e, c in img.terms.items():
            matrix[index[e]][j] = c
    kernel = nullspace(matrix, len(alphas))
    if not kernel:
        raise RuntimeError("Perron theorem violated")
    out = []
    for vec in kernel:
        P = MPoly(n + 1, {alpha: c for alpha, c in zip(alphas, vec) if c})
        rel = PerronRelation(P, degs)
        assert verify_identity(rel, f)
        out.append(rel)
    return out


# ---------------------------------------------------------------------------

def verify_identity(ident: Union[BezoutIdentity, PerronRelation], f: Sequence[MPoly]) -> bool:
    """Check the defining identity by exact expansion."""
    if isinstance(ident, BezoutIdentity):
        if len(ident.cofactors) != len(f) or ident.a <= 0:
            return False
        n = f[0].nvars
        total = MPoly(n)
        for g, fi in zip(ident.cofactors, f):
            total = total + g * fi
        return total == MPoly.constant(n, ident.a)
    if isinstance(ident, PerronRelation):
        if not ident.P or ident.P.nvars != len(f):
            return False
        return not ident.P.compose(list(f))
    raise TypeError(f"cannot verify {type(ident).__name__}")
