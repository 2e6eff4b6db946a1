"""Closed-form degree and height bounds for zero-dimensional systems over Q.

Every height bound is returned as a certified :class:`LogVal`; degree
bounds are exact integers. A :class:`SystemProfile` carries the numeric
data (n, degrees, heights, distinguished polynomial) every formula needs.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import prod
from typing import Optional, Sequence

from .logval import DEFAULT_PRECISION, LogVal, leq_certified, log2_interval
from .poly import MPoly, max_abs_coeff


class UnderdeterminedWarning(UserWarning):
    """Fewer polynomials than variables: the zero set may not be finite."""


def _lg(k, precision):
    return log2_interval(k, precision)


@dataclass(frozen=True)
class SystemProfile:
    """Degrees and heights of ``f_1, ..., f_s`` in ``n`` variables.

    ``distinguished`` is 1-based and names the polynomial playing the role
    of ``f_s``. ``max_coeffs`` (optional) keeps the exact coefficient maxima
    so heights can be re-measured at any precision.
    """

    n: int
    degs: tuple
    heights: tuple
    distinguished: int
    D: Optional[int] = None
    delta: Optional[int] = None
    max_coeffs: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        degs = tuple(int(d) for d in self.degs)
        heights = tuple(LogVal.coerce(h) for h in self.heights)
        object.__setattr__(self, "degs", degs)
        object.__setattr__(self, "heights", heights)
        if self.n < 1:
            raise ValueError("need at least one variable")
        if not degs:
            raise ValueError("need at least one polynomial")
        if len(heights) != len(degs):
            raise ValueError("degs and heights differ in length")
        if any(d < 1 for d in degs):
            raise ValueError("all degrees must be at least 1")
        if any(h.lo < 0 for h in heights):
            raise ValueError("heights must be nonnegative")
        if not 1 <= self.distinguished <= len(degs):
            raise ValueError(f"distinguished index must lie in 1..{len(degs)}")

    # -- construction ---------------------------------------------------

    @classmethod
    def from_values(cls, n, degs, heights, distinguished=None, **kw) -> "SystemProfile":
        """Profile from plain numbers; heights may be ints, Fractions or LogVals."""
        s = len(degs)
        prof = cls(n, tuple(degs), tuple(heights), distinguished or s, **kw)
        if distinguished is None:
            prof = prof.with_best_distinguished()
        return prof

    @classmethod
    def from_system(cls, polys: Sequence[MPoly], distinguished=None, precision=DEFAULT_PRECISION,
                    D=None, delta=None) -> "SystemProfile":
        if not polys:
            raise ValueError("empty system")
        n = polys[0].nvars
        if any(f.nvars != n for f in polys):
            raise ValueError("polynomials live in different rings")
        for f in polys:
            if not f:
                raise ValueError("zero polynomial in system")
            if not f.is_integer():
                raise ValueError("system polynomials must have integer coefficients")
        degs = tuple(f.degree() for f in polys)
        coeffs = tuple(max_abs_coeff(f) for f in polys)
        heights = tuple(log2_interval(c, precision) for c in coeffs)
        prof = cls(n, degs, heights, distinguished or len(polys), D=D, delta=delta, max_coeffs=coeffs)
        if distinguished is None:
            prof = prof.with_best_distinguished(precision)
        return prof

    def at_precision(self, precision: int) -> "SystemProfile":
        if self.max_coeffs is None:
            return self
        return replace(self, heights=tuple(log2_interval(c, precision) for c in self.max_coeffs))

    def with_distinguished(self, idx: int) -> "SystemProfile":
        return replace(self, distinguished=idx)

    def with_best_distinguished(self, precision=DEFAULT_PRECISION) -> "SystemProfile":
        """Choose the distinguished index minimizing the sharp arithmetic Bezout value."""
        best, best_hi = None, None
        for j in range(1, self.s + 1):
            cand = self.with_distinguished(j)
            hi = arith_bezout_height_bound(cand, precision)[0].hi
            if best_hi is None or hi < best_hi:
                best, best_hi = cand, hi
        return best

    # -- derived quantities ---------------------------------------------

    @property
    def s(self) -> int:
        return len(self.degs)

    @property
    def d_s(self) -> int:
        return self.degs[self.distinguished - 1]

    @property
    def h_s(self) -> LogVal:
        return self.heights[self.distinguished - 1]

    @property
    def others(self) -> list:
        """(degree, height) of the non-distinguished polynomials, degrees descending."""
        rest = [(d, h) for j, (d, h) in enumerate(zip(self.degs, self.heights), 1)
                if j != self.distinguished]
        return sorted(rest, key=lambda dh: -dh[0])

    @property
    def sorted_degs(self) -> list:
        return [d for d, _ in self.others]

    @property
    def d(self) -> int:
        degs = self.sorted_degs
        return degs[0] if degs else self.d_s

    @property
    def h(self) -> LogVal:
        hs = [h for _, h in self.others]
        out = LogVal.exact(0)
        for x in hs:
            out = out.max(x)
        return out

    @property
    def r(self) -> int:
        return min(self.s - 1, self.n)

    @property
    def d_uniform(self) -> int:
        return max(self.degs)

    @property
    def h_uniform(self) -> LogVal:
        out = LogVal.exact(0)
        for x in self.heights:
            out = out.max(x)
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "degs": list(self.degs),
            "heights": [h.to_json() for h in self.heights],
            "distinguished": self.distinguished,
            "d": self.d,
            "h": self.h.to_json(),
            "r": self.r,
            "D": self.D,
            "delta": self.delta,
        }


# ---------------------------------------------------------------------------
# Bezout and arithmetic Bezout

def bezout_degree_bound(p: SystemProfile) -> int:
    """``d_1 ... d_{n-1} d_s`` over the sorted non-distinguished degrees."""
    if p.s < p.n:
        warnings.warn(
            f"{p.s} polynomials in {p.n} variables: the variety may not be zero-dimensional",
            UnderdeterminedWarning,
            stacklevel=2,
        )
    factors = p.sorted_degs[: p.n - 1]
    return prod(factors) * p.d_s


def arith_bezout_height_bound(p: SystemProfile, precision: int = DEFAULT_PRECISION):
    """Sharp and coarse upper bounds for h(V); returns ``(sharp, coarse)``."""
    p = p.at_precision(precision)
    n, ds = p.n, p.d_s
    factors = p.sorted_degs[: n - 1]
    total = prod(factors) * ds
    lg = _lg(n + 1, precision)
    sharp = (
        p.h_s.scale(Fraction(total, ds))
        + p.h.scale(sum(Fraction(total, dj) for dj in factors))
        + lg.scale(2 * n * total)
    )
    d = p.d
    coarse = (
        p.h_s.scale(d ** (n - 1))
        + p.h.scale((n - 1) * Fraction(d) ** (n - 2) * ds if n >= 2 else 0)
        + lg.scale(2 * n * d ** (n - 1) * ds)
    )
    return sharp, coarse


# ---------------------------------------------------------------------------
# roots and values

@dataclass(frozen=True)
class RootBounds:
    upper: LogVal
    coord_lower: LogVal
    separation: LogVal


def root_bounds(p: SystemProfile, precision: int = DEFAULT_PRECISION) -> RootBounds:
    """Coordinate bounds with uniform ``d = max deg``, ``h = max height``.

    ``upper`` bounds ``log|zeta_i|``; ``coord_lower`` and ``separation``
    bound ``|log|zeta_i||`` and ``|log|zeta_i - xi_i||`` for nonzero values.
    """
    p = p.at_precision(precision)
    n, d, h = p.n, p.d_uniform, p.h_uniform
    upper = h.scale(n * d ** (n - 1)) + _lg(n + 1, precision).scale(2 * n * d ** n)
    lower = h.scale(2 * n * d ** (n - 1)) + _lg(n + 2, precision).scale(4 * (n + 1) * d ** n)
    sep = h.scale(4 * n * d ** (2 * n - 1)) + _lg(2 * n + 2, precision).scale(4 * (2 * n + 1) * d ** (2 * n))
    return RootBounds(upper, lower, sep)


@dataclass(frozen=True)
class ValueBounds:
    upper: LogVal
    two_sided: LogVal
    difference: LogVal


def value_bounds(p: SystemProfile, d_p: int, h_p, precision: int = DEFAULT_PRECISION) -> ValueBounds:
    """Bounds on ``log|p(zeta)|`` and ``|log|p(zeta) - p(xi)||``.

    ``d_p = 0`` is accepted; every term carrying a ``d_p`` factor vanishes.
    """
    p = p.at_precision(precision)
    n, d, h = p.n, p.d_uniform, p.h_uniform
    h_p = LogVal.coerce(h_p)
    upper = h_p + h.scale(n * d ** (n - 1) * d_p) + _lg(n + 1, precision).scale(3 * n * d ** n * d_p)
    two = (h_p.scale(d ** n) + h.scale(2 * n * d ** (n - 1) * d_p)
           + _lg(n + 2, precision).scale(4 * (n + 1) * d ** n * d_p))
    diff = (h_p.scale(d ** (2 * n)) + h.scale(4 * n * d ** (2 * n - 1) * d_p)
            + _lg(2 * n + 2, precision).scale(4 * (2 * n + 1) * d ** (2 * n) * d_p))
    return ValueBounds(upper, two, diff)


# ---------------------------------------------------------------------------
# Nullstellensatz, shape lemma, remainders, Perron

@dataclass(frozen=True)
class NSSBounds:
    degree: int
    height: LogVal


def nss_bounds(p: SystemProfile, precision: int = DEFAULT_PRECISION) -> NSSBounds:
    """Degree and height bounds for a Bezout identity ``a = sum g_i f_i``."""
    p = p.at_precision(precision)
    n, ds, r = p.n, p.d_s, p.r
    factors = p.sorted_degs[:r]
    total = prod(factors) * ds
    const = _lg(n + 3, precision).scale(6 * n + 9)
    if p.s - n > 1:
        const = const + _lg(p.s - n, precision).scale(3 * n)
    height = (
        p.h_s.scale(Fraction(total, ds))
        + p.h.scale(sum(Fraction(total, dk) for dk in factors))
        + const.scale(total)
    )
    return NSSBounds(total, height)


def shape_height_bound(p: SystemProfile, D: int, precision: int = DEFAULT_PRECISION) -> LogVal:
    """Height bound for every ``omega_i`` of the rational univariate representation."""
    if D < 1:
        raise ValueError("D must be at least 1")
    p = p.at_precision(precision)
    n, d, ds = p.n, p.d, p.d_s
    return (
        p.h_s.scale(d ** (n - 1))
        + p.h.scale((n - 1) * Fraction(d) ** (n - 2) * ds if n >= 2 else 0)
        + _lg(n + 1, precision).scale(2 * n * d ** (n - 1) * ds)
        + _lg((n + 1) * D, precision).scale(4 * D)
    )


@dataclass(frozen=True)
class UMapBounds:
    monomial: LogVal
    poly: LogVal


def umap_bounds(p: SystemProfile, alpha_norm: int, d_p: int, h_p,
                precision: int = DEFAULT_PRECISION) -> UMapBounds:
    p = p.at_precision(precision)
    n, d, h = p.n, p.d_uniform, p.h_uniform
    lg = _lg((n + 2) * d, precision)
    mono = h.scale(n * d ** (n - 1) * alpha_norm) + lg.scale(4 * n * d ** n * alpha_norm)
    poly = LogVal.coerce(h_p) + h.scale(n * d ** (n - 1) * d_p) + lg.scale(5 * n * d ** n * d_p)
    return UMapBounds(mono, poly)


@dataclass(frozen=True)
class RemainderBounds:
    denominator: LogVal
    numerator: LogVal


def remainder_bounds(p: SystemProfile, delta: int, d_p: int, h_p,
                     precision: int = DEFAULT_PRECISION) -> RemainderBounds:
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    p = p.at_precision(precision)
    n, d, h = p.n, p.d_uniform, p.h_uniform
    lg = _lg((n + 2) * d, precision)
    den = h.scale(n * d ** (2 * n - 1) * delta) + lg.scale(5 * n * d ** (2 * n) * delta)
    weight = d_p + d ** n * delta
    num = LogVal.coerce(h_p) + h.scale(n * d ** (n - 1) * weight) + lg.scale(5 * n * d ** n * weight)
    return RemainderBounds(den, num)


@dataclass(frozen=True)
class PerronBounds:
    weighted_degree: int
    height: LogVal


def perron_bounds(degs: Sequence[int], heights: Sequence, precision: int = DEFAULT_PRECISION) -> PerronBounds:
    """Bounds for an algebraic relation among ``n + 1`` polynomials in ``n`` variables.

    ``height`` bounds ``h(c_alpha) + sum alpha_i h_i`` for every monomial.
    """
    if len(degs) != len(heights):
        raise ValueError("degs and heights differ in length")
    if len(degs) < 2:
        raise ValueError("need n + 1 >= 2 polynomials")
    n = len(degs) - 1
    total = prod(degs)
    height = LogVal.exact(0)
    for d_i, h_i in zip(degs, heights):
        height = height + LogVal.coerce(h_i).scale(Fraction(total, d_i))
    height = height + _lg(2 * n + 8, precision).scale((n + 2) * total)
    return PerronBounds(total, height)


# ---------------------------------------------------------------------------
# report

@dataclass
class BoundEntry:
    name: str
    theorem: str
    value: object
    form: str = ""
    inputs: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        if isinstance(self.value, LogVal):
            body = self.value.to_json()
        else:
            body = {"lo": str(self.value), "hi": str(self.value), "exact": True}
        out = {"name": self.name, "theorem": self.theorem, **body}
        if self.form:
            out["form"] = self.form
        if self.inputs:
            out["inputs"] = {k: str(v) for k, v in self.inputs.items()}
        return out


@dataclass
class BoundReport:
    profile: SystemProfile
    entries: list = field(default_factory=list)

    def add(self, *args, **kw):
        self.entries.append(BoundEntry(*args, **kw))

    def __getitem__(self, name):
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"bounds": [e.to_json() for e in self.entries], "profile": self.profile.to_json()}


def bound_report(p: SystemProfile, precision: int = DEFAULT_PRECISION, d_p=None, h_p=None,
                 perron_heights=None) -> BoundReport:
    """Evaluate every bound applicable to the profile.

    Value, U-map and remainder bounds need ``d_p`` and ``h_p``. When
    ``p.D`` or ``p.delta`` are unknown, the Bezout number and ``D - 1``
    stand in for them (all formulas are nondecreasing in both).
    """
    rep = BoundReport(p)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UnderdeterminedWarning)
        deg = bezout_degree_bound(p)
    rep.add("bezout_degree", "Bezout inequality", deg)
    sharp, coarse = arith_bezout_height_bound(p, precision)
    assert leq_certified(sharp, coarse) is not False
    rep.add("arith_bezout_sharp", "arithmetic Bezout inequality", sharp, "first")
    rep.add("arith_bezout_coarse", "arithmetic Bezout inequality", coarse, "second")
    rb = root_bounds(p, precision)
    rep.add("root_upper", "root upper bound", rb.upper)
    rep.add("root_coord_lower", "lower and separation bounds (coordinates)", rb.coord_lower)
    rep.add("root_separation", "lower and separation bounds (separation)", rb.separation)
    nb = nss_bounds(p, precision)
    rep.add("nss_degree", "arithmetic Nullstellensatz", nb.degree)
    rep.add("nss_height", "arithmetic Nullstellensatz", nb.height, "first")
    D = p.D if p.D is not None else deg
    rep.add("shape_height", "arithmetic Shape Lemma", shape_height_bound(p, D, precision),
            inputs={"D": D})
    if p.s == p.n + 1:
        heights = perron_heights if perron_heights is not None else p.heights
        pb = perron_bounds(p.degs, heights, precision)
        rep.add("perron_weighted_degree", "arithmetic Perron theorem", pb.weighted_degree)
        rep.add("perron_height", "arithmetic Perron theorem", pb.height)
    if d_p is not None and h_p is not None:
        vb = value_bounds(p, d_p, h_p, precision)
        rep.add("value_upper", "upper bounds for the roots", vb.upper, inputs={"d_p": d_p})
        rep.add("value_two_sided", "lower and separation bounds (1)", vb.two_sided, inputs={"d_p": d_p})
        rep.add("value_difference", "lower and separation bounds (2)", vb.difference, inputs={"d_p": d_p})
        ub = umap_bounds(p, d_p, d_p, h_p, precision)
        rep.add("umap_poly", "height of U(p)", ub.poly, inputs={"d_p": d_p})
        delta = p.delta if p.delta is not None else max(D - 1, 0)
        rb2 = remainder_bounds(p, delta, d_p, h_p, precision)
        rep.add("remainder_denominator", "height of the remainder modulo I", rb2.denominator,
                inputs={"delta": delta})
        rep.add("remainder_numerator", "height of the remainder modulo I", rb2.numerator,
                inputs={"delta": delta, "d_p": d_p})
    return rep
