"""Chow forms, rational univariate representations and remainders for
finite sets of rational points.

Everything here is exact. The integer data (Chow form, omega polynomials,
Cramer matrix) is built from the points themselves, and every construction
is cross-checked against direct evaluation at the points.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product
from math import lcm, prod
from typing import Optional, Sequence

from .bounds import SystemProfile, value_bounds
from .heights import PointVariety
from .linalg import cramer, rank, solve
from .logval import DEFAULT_PRECISION, LogVal, log2_interval
from .poly import (
    MPoly,
    as_scalar,
    content_gcd,
    max_abs_coeff,
    poly_eval,
    u_deriv,
    u_eval,
    u_mod,
    u_modinv,
    u_mul,
    ucoeffs,
    univ_squarefree,
)


class NotSeparatingError(ValueError):
    """The linear form takes the same value at two points."""


# ---------------------------------------------------------------------------
# Chow form

@dataclass(frozen=True)
class ChowForm:
    """``c * prod (U0 + zeta . U)`` as a primitive integer form in ``U0..Un``."""

    n: int
    D: int
    form: MPoly
    c: int

    def height(self, precision: int = DEFAULT_PRECISION) -> LogVal:
        return log2_interval(max_abs_coeff(self.form), precision)

    def specialize(self, u: Sequence[int]) -> tuple[list, list[list]]:
        """``(omega_0, [omega_1, ..., omega_n])`` as coefficient lists, low to high."""
        if len(u) != self.n:
            raise ValueError(f"separating vector must have {self.n} entries")
        t = MPoly.var(1, 0)
        images = [t] + [MPoly.constant(1, -ui) for ui in u]
        w0 = ucoeffs(self.form.compose(images))
        ws = [ucoeffs(self.form.diff(i).compose(images)) for i in range(1, self.n + 1)]
        return w0, ws


def chow_form(V: PointVariety) -> ChowForm:
    n = V.n
    form = MPoly.constant(n + 1, 1)
    for vec in V.primitive_vectors:
        form = form * MPoly.linear_form(list(vec))
    # a product of primitive forms is primitive (Gauss's lemma)
    assert content_gcd(form) == 1, "Chow form is not primitive"
    assert form.leading_term()[1] > 0
    c = prod(vec[0] for vec in V.primitive_vectors)
    return ChowForm(n, V.D, form, c)


# ---------------------------------------------------------------------------
# separating forms and RUR

def _linear_value(u, point):
    return sum((ui * zi for ui, zi in zip(u, point)), Fraction(0))


def is_separating(V: PointVariety, u: Sequence[int]) -> bool:
    values = [_linear_value(u, p) for p in V.points]
    return len(set(values)) == len(values)


def find_separating_form(V: PointVariety) -> tuple[int, ...]:
    """First ``u`` in lexicographic order on ``{0..D'}^n`` separating ``V``.

    ``D' = D(D-1)/2``; for a single point this is the zero vector.
    """
    D = V.D
    bound = D * (D - 1) // 2
    for u in product(range(bound + 1), repeat=V.n):
        if is_separating(V, u):
            return tuple(u)
    raise AssertionError("no separating form in the grid")  # cannot happen


@dataclass(frozen=True)
class RUR:
    """Separating vector ``u`` with ``omega_0, ..., omega_n`` in Z[t] (low-to-high lists)."""

    u: tuple
    omega0: tuple
    omegas: tuple

    @property
    def D(self) -> int:
        return len(self.omega0) - 1

    @property
    def n(self) -> int:
        return len(self.u)

    @property
    def omega0_prime(self) -> list:
        return u_deriv(list(self.omega0))

    def polys(self) -> list[MPoly]:
        return [MPoly.univariate(self.omega0)] + [MPoly.univariate(w) for w in self.omegas]

    def point_at(self, t) -> tuple:
        """The point ``(omega_i(t) / omega_0'(t))_i`` for a root ``t`` of omega_0."""
        dw = u_eval(self.omega0_prime, t)
        return tuple(as_scalar(Fraction(u_eval(list(w), t)) / dw) for w in self.omegas)

    def to_json(self) -> dict:
        return {
            "u": list(self.u),
            "omega": [[str(c) for c in self.omega0]] + [[str(c) for c in w] for w in self.omegas],
        }


def build_rur(V: PointVariety, u: Sequence[int], chow: Optional[ChowForm] = None) -> RUR:
    """Specialize the Chow form at ``U0 = t, U_j = -u_j`` (partials taken first)."""
    u = tuple(int(v) for v in u)
    if len(u) != V.n:
        raise ValueError(f"separating vector must have {V.n} entries")
    chow = chow or chow_form(V)
    w0, ws = chow.specialize(u)
    if not univ_squarefree(MPoly.univariate(w0)):
        raise NotSeparatingError("omega_0 not squarefree")
    rur = RUR(u, tuple(w0), tuple(tuple(w) for w in ws))
    assert rur.D == V.D
    for w in ws:
        assert len(w) - 1 < V.D
    for p in V.points:
        t = _linear_value(u, p)
        assert u_eval(w0, t) == 0
        assert rur.point_at(t) == p, "coordinate parametrization fails at a point"
    return rur


# ---------------------------------------------------------------------------
# monomial basis

def _mono_key(e):
    return (sum(e), tuple(-x for x in e))


def _eval_mono(e, point):
    out = Fraction(1)
    for x, k in zip(point, e):
        if k:
            out *= Fraction(x) ** k
    return out


@dataclass(frozen=True)
class MonomialBasis:
    """Monomials spanning the functions on ``V``, starting with 1."""

    exponents: tuple
    matrix: tuple  # matrix[k][j] = b_j(zeta_k)

    @property
    def delta(self) -> int:
        return max(sum(e) for e in self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def monomials(self, n: int) -> list[MPoly]:
        return [MPoly(n, {e: 1}) for e in self.exponents]


def monomial_basis(V: PointVariety) -> MonomialBasis:
    """Greedy basis: scan ``x_k * b`` by (degree, graded lex) and keep rank-increasing ones."""
    n, D = V.n, V.D
    pts = V.points
    basis = [(0,) * n]
    vectors = [[_eval_mono(basis[0], p) for p in pts]]
    rejected: set = set()
    while len(basis) < D:
        cands = set()
        for b in basis:
            for k in range(n):
                e = list(b)
                e[k] += 1
                e = tuple(e)
                if e not in rejected and e not in basis:
                    cands.add(e)
        progressed = False
        for e in sorted(cands, key=_mono_key):
            vec = [_eval_mono(e, p) for p in pts]
            if rank(vectors + [vec]) > len(vectors):
                basis.append(e)
                vectors.append(vec)
                progressed = True
                break
            rejected.add(e)
        assert progressed, "basis closure stalled below D"
    M = tuple(tuple(as_scalar(vectors[j][k]) for j in range(D)) for k in range(D))
    out = MonomialBasis(tuple(basis), M)
    assert out.delta < D
    return out


# ---------------------------------------------------------------------------
# the U map

def umap(rur: RUR, p: MPoly) -> list:
    """Coefficients of ``omega_0' * phi(p) mod omega_0`` in ``1, t, ..., t^(D-1)``."""
    if p.nvars != rur.n:
        raise ValueError(f"polynomial has {p.nvars} variables, expected {rur.n}")
    m = list(rur.omega0)
    D = rur.D
    dw = rur.omega0_prime
    inv = u_modinv(dw, m)
    images = [u_mod(u_mul(list(w), inv), m) for w in rur.omegas]
    powers = [{0: [Fraction(1)]} for _ in images]

    def power(i, k):
        got = powers[i].get(k)
        if got is None:
            got = u_mod(u_mul(power(i, k - 1), images[i]), m)
            powers[i][k] = got
        return got

    acc: list = []
    for e, c in p.terms.items():
        term = [Fraction(c)]
        for i, k in enumerate(e):
            if k:
                term = u_mod(u_mul(term, power(i, k)), m)
        acc = acc + [0] * (len(term) - len(acc))
        for j, v in enumerate(term):
            acc[j] += v
    out = u_mod(u_mul(acc, dw), m) if any(acc) else []
    out = list(out) + [0] * (D - len(out))
    return [as_scalar(v) for v in out]


def umap_oracle(V: PointVariety, rur: RUR, p: MPoly) -> list:
    """Same as :func:`umap` by Lagrange interpolation of ``omega_0'(l(z)) p(z)``."""
    nodes = [_linear_value(rur.u, z) for z in V.points]
    dw = rur.omega0_prime
    values = [Fraction(u_eval(dw, t)) * Fraction(poly_eval(p, z)) for t, z in zip(nodes, V.points)]
    D = len(nodes)
    out = [Fraction(0)] * D
    for k, (tk, yk) in enumerate(zip(nodes, values)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, tj in enumerate(nodes):
            if j != k:
                basis = u_mul(basis, [-tj, Fraction(1)]) or [Fraction(0)]
                denom *= tk - tj
        for i, c in enumerate(basis):
            out[i] += yk * c / denom
    return [as_scalar(v) for v in out]


def extended_column(V: PointVariety, rur: RUR, q: MPoly) -> tuple[list[int], int]:
    """Integer coefficients of ``omega_{n+1}`` for the graph ``{(zeta, q(zeta))}``.

    The separating vector is extended by 0. Returns the coefficient list
    (padded to length D) and the constant ``c`` of the extended Chow form.
    """
    W = PointVariety(V.n + 1, tuple(tuple(z) + (poly_eval(q, z),) for z in V.points))
    ch = chow_form(W)
    t = MPoly.var(1, 0)
    images = [t] + [MPoly.constant(1, -ui) for ui in rur.u] + [MPoly.constant(1, 0)]
    col = ucoeffs(ch.form.diff(V.n + 1).compose(images))
    col = [int(v) for v in col] + [0] * (V.D - len(col))
    return col, ch.c


# ---------------------------------------------------------------------------
# remainders

@dataclass(frozen=True)
class Remainder:
    """``p_bar = N / a`` supported on the monomial basis.

    ``a`` is the least positive common denominator of the coefficients.
    ``det_A`` is the Cramer determinant of the integer column matrix and
    ``c_p`` the Chow constant of the graph of ``p``; ``a`` divides
    ``det_A * c_p``.
    """

    a: int
    N: tuple
    pbar: MPoly
    basis: tuple
    det_A: int
    c_p: int
    ratios: tuple = field(default=(), compare=False)

    @property
    def coefficients(self) -> list:
        return [as_scalar(Fraction(v, self.a)) for v in self.N]

    def height_a(self, precision: int = DEFAULT_PRECISION) -> LogVal:
        return log2_interval(self.a, precision)

    def height_N(self, precision: int = DEFAULT_PRECISION) -> LogVal:
        m = max((abs(v) for v in self.N), default=0)
        return log2_interval(m, precision) if m else LogVal.exact(0)

    def to_json(self) -> dict:
        return {
            "a": str(self.a),
            "N": [str(v) for v in self.N],
            "basis": [list(e) for e in self.basis],
            "det_A": str(self.det_A),
        }


def _ratio(u_vec, col):
    """``r`` with ``u_vec == r * col``; asserts proportionality."""
    r = None
    for x, y in zip(u_vec, col):
        if y == 0:
            assert x == 0, "U-image not proportional to the integer column"
            continue
        q = Fraction(x) / y
        assert r is None or r == q, "U-image not proportional to the integer column"
        r = q
    return r if r is not None else Fraction(0)


def remainder_columns(V: PointVariety, rur: RUR, B: MonomialBasis):
    """Integer Cramer matrix (columns indexed by the basis) and the ratios ``U(b) / column``."""
    D = V.D
    cols, ratios = [], []
    for b in B.monomials(V.n):
        col, _ = extended_column(V, rur, b)
        ratios.append(_ratio(umap(rur, b), col))
        cols.append(col)
    A = [[cols[j][i] for j in range(D)] for i in range(D)]
    return A, ratios


def remainder(V: PointVariety, rur: RUR, B: MonomialBasis, p: MPoly, columns=None) -> Remainder:
    """Remainder of ``p`` modulo the ideal of ``V`` by Cramer's rule, checked by evaluation.

    ``columns`` may carry a precomputed :func:`remainder_columns` result.
    """
    if p.nvars != V.n:
        raise ValueError(f"polynomial has {p.nvars} variables, expected {V.n}")
    n, D = V.n, V.D
    A, ratios = columns if columns is not None else remainder_columns(V, rur, B)
    v, c_p = extended_column(V, rur, p)
    r_p = _ratio(umap(rur, p), v)
    det_A, dets = cramer(A, v)
    if det_A == 0:
        raise ArithmeticError("singular Cramer matrix")
    coeffs = [Fraction(dj, det_A) * r_p / rb for dj, rb in zip(dets, ratios)]

    # evaluation oracle: M y = (p(zeta_k))
    rhs = [poly_eval(p, z) for z in V.points]
    y = solve([list(row) for row in B.matrix], rhs)
    if y is None or [Fraction(t) for t in y] != coeffs:
        raise ArithmeticError("Cramer remainder disagrees with the evaluation oracle")

    a = reduce(lcm, (c.denominator for c in coeffs), 1)
    N = tuple(int(c * a) for c in coeffs)
    assert (det_A * c_p) % a == 0
    pbar = MPoly(n, {e: c for e, c in zip(B.exponents, coeffs)})
    return Remainder(a, N, pbar, B.exponents, det_A, c_p, tuple(ratios))


# ---------------------------------------------------------------------------
# presentation and value certification

def ideal_presentation(V: PointVariety, rur: RUR) -> list[MPoly]:
    """Integer generators vanishing exactly on ``V``.

    ``omega_0(l(x))`` and ``omega_0'(l(x)) x_i - omega_i(l(x))``; zero
    polynomials and exact duplicates are dropped.
    """
    n = V.n
    ell = MPoly.linear_form(list(rur.u))
    xs = [MPoly.var(n, i) for i in range(n)]

    def at_ell(coeffs):
        return MPoly.univariate(coeffs).compose([ell])

    gens = [at_ell(rur.omega0)]
    dw = at_ell(rur.omega0_prime)
    for i, w in enumerate(rur.omegas):
        gens.append(dw * xs[i] - at_ell(w))
    out: list[MPoly] = []
    for g in gens:
        if g and g not in out:
            out.append(g)
    for g in out:
        assert g.is_integer()
        for z in V.points:
            assert poly_eval(g, z) == 0
    assert len(monomial_basis(V)) == V.D
    return out


def certify_value(profile: SystemProfile, p: MPoly, approx, err, precision: int = DEFAULT_PRECISION) -> str:
    """Decide whether ``p(zeta)`` is zero from an enclosure ``approx +- err``.

    Returns ``"zero"``, ``"nonzero"`` or ``"unknown"``. A nonzero value has
    ``log|p(zeta)| >= -B`` with ``B`` the two-sided value bound, so an
    enclosure inside ``(-2^-B, 2^-B)`` certifies zero.
    """
    approx, err = Fraction(approx), Fraction(err)
    if err < 0:
        raise ValueError("error radius must be nonnegative")
    if not p:
        return "zero"
    if not p.is_integer():
        raise ValueError("p must have integer coefficients")
    d_p = p.degree()
    h_p = log2_interval(max_abs_coeff(p), precision)
    B = value_bounds(profile, d_p, h_p, precision).two_sided
    k = -((-B.hi.numerator) // B.hi.denominator)  # ceil
    threshold = Fraction(1, 2 ** k) if k >= 0 else Fraction(2 ** -k)
    if abs(approx) + err < threshold:
        return "zero"
    if abs(approx) - err > 0:
        return "nonzero"
    return "unknown"


def point_profile(V: PointVariety, rur: RUR, precision: int = DEFAULT_PRECISION,
                  distinguished=None) -> SystemProfile:
    """Profile of the RUR presentation with ``D`` and ``delta`` filled in."""
    gens = ideal_presentation(V, rur)
    B = monomial_basis(V)
    return SystemProfile.from_system(gens, distinguished, precision, D=V.D, delta=B.delta)
