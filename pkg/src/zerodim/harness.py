"""Example gallery, seeded random varieties and the end-to-end inequality suite.

Every check compares an exactly computed quantity with a bound (or a
lower bound with a quantity) using certified intervals, refining the
precision when the comparison is undecided.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, asdict
from fractions import Fraction
from itertools import combinations, product
from math import prod
from typing import Callable, Optional, Sequence

import numpy as np

from .bounds import (
    SystemProfile,
    arith_bezout_height_bound,
    bezout_degree_bound,
    nss_bounds,
    perron_bounds,
    remainder_bounds,
    root_bounds,
    shape_height_bound,
    umap_bounds,
    value_bounds,
)
from .heights import PointVariety, chow_height_bracket, rootin_lhs, variety_height
from .identities import nss_search, perron_search, solve_triangular, verify_identity
from .logval import DEFAULT_PRECISION, MAX_PRECISION, LogVal, log2_interval, refine_leq
from .poly import MPoly, max_abs_coeff, poly_eval, primitive_part
from .variety import (
    build_rur,
    chow_form,
    find_separating_form,
    ideal_presentation,
    monomial_basis,
    remainder,
    remainder_columns,
    umap,
)

SECTIONS = ("v2", "random", "gallery", "nss", "perron")

# upper-bound formulas the suite evaluates; each can be tampered with
BOUND_NAMES = (
    "v2_height_upper",
    "rootin",
    "bezout_degree",
    "arith_bezout_sharp",
    "arith_bezout_coarse",
    "chow_bracket",
    "shape_degree_omega",
    "shape_height",
    "umap_monomial",
    "remainder_denominator",
    "remainder_numerator",
    "root_upper",
    "root_coord_lower",
    "root_separation",
    "value_upper",
    "value_two_sided",
    "value_difference",
    "nss_degree",
    "nss_height",
    "perron_weighted_degree",
    "perron_height",
)


# ---------------------------------------------------------------------------
# helpers

def _x(n):
    return [MPoly.var(n, i) for i in range(n)]


def _height(f: MPoly, precision: int) -> LogVal:
    return log2_interval(max_abs_coeff(f), precision)


def _abslog(q, precision: int) -> LogVal:
    return log2_interval(abs(Fraction(q)), precision).abs()


def _const(v) -> Callable[[int], LogVal]:
    val = LogVal.coerce(v)
    return lambda prec: val


# ---------------------------------------------------------------------------
# gallery

@dataclass
class GalleryCase:
    name: str
    kind: str
    params: dict
    system: list
    points: Optional[PointVariety]
    anchor: str
    expected: dict = field(default_factory=dict)


def v1_case(n: int, d: int) -> GalleryCase:
    if d not in (1, 2):
        raise ValueError("only d in {1, 2} has rational points")
    xs = _x(n)
    system = [x ** d - 1 for x in xs]
    roots = (1,) if d == 1 else (1, -1)
    pts = PointVariety(n, tuple(product(roots, repeat=n)))
    case = GalleryCase(f"V1(n={n},d={d})", "v1", {"n": n, "d": d}, system, pts,
                       "roots of unity grid", {"D": d ** n})
    _verify_points(case)
    assert pts.D == d ** n
    return case


def v2_system(n: int, d: int, h: int) -> list:
    xs = _x(n)
    return [xs[0] - 2 ** h] + [xs[i] - xs[i - 1] ** d for i in range(1, n)]


def v2_case(n: int, d: int, h: int) -> GalleryCase:
    system = v2_system(n, d, h)
    pt = tuple(2 ** (d ** i * h) for i in range(n))
    case = GalleryCase(f"V2(n={n},d={d},h={h})", "v2", {"n": n, "d": d, "h": h}, system,
                       PointVariety(n, (pt,)), "powers of two chain",
                       {"log_last": d ** (n - 1) * h, "pbar_last_pow": 2 ** (d ** n * h)})
    _verify_points(case)
    return case


def v3_case(n: int, d: int, h: int) -> GalleryCase:
    xs = _x(n)
    system = [2 ** h * xs[0] - 1] + [xs[i] - xs[i - 1] ** d for i in range(1, n)]
    V = solve_triangular(system)
    case = GalleryCase(f"V3(n={n},d={d},h={h})", "v3", {"n": n, "d": d, "h": h}, system, V,
                       "inverse powers of two chain", {"log_last": -(d ** (n - 1)) * h})
    _verify_points(case)
    last = V.points[0][-1]
    assert last == Fraction(1, 2 ** (d ** (n - 1) * h))
    return case


def nss2_system(n: int, d: int, h: int) -> list:
    xs = _x(n)
    return v2_system(n, d, h) + [xs[-1] ** d]


def bmp_system(n: int, d: int, h: int) -> list:
    if n < 2:
        raise ValueError("the system needs n >= 2")
    xs = _x(n)
    out = [xs[0] ** d]
    for i in range(1, n - 1):
        out.append(xs[i - 1] * xs[-1] ** (d - 1) - xs[i] ** d)
    out.append(2 ** h - xs[n - 2] * xs[-1] ** (d - 1))
    return out


def _verify_points(case: GalleryCase):
    for f in case.system:
        for z in case.points:
            assert poly_eval(f, z) == 0, f"{case.name}: point {z} is not a zero"


def gallery() -> list[GalleryCase]:
    cases = []
    for n in (1, 2, 3):
        for d in (1, 2):
            cases.append(v1_case(n, d))
    for n, d, h in product((1, 2, 3), (2, 3), range(1, 9)):
        cases.append(v2_case(n, d, h))
    for n, d, h in product((1, 2, 3), (1, 2, 3), range(1, 5)):
        cases.append(v3_case(n, d, h))
    for n, h in product((1, 2), (1, 2, 3)):
        cases.append(GalleryCase(f"NSS2(n={n},d=2,h={h})", "nss2", {"n": n, "d": 2, "h": h},
                                 nss2_system(n, 2, h), None, "empty chain",
                                 {"log_a_min": 2 ** n * h}))
    for n, h in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]:
        cases.append(GalleryCase(f"BMP(n={n},d=2,h={h})", "bmp", {"n": n, "d": 2, "h": h},
                                 bmp_system(n, 2, h), None, "Brownawell-Masser-Philippon system",
                                 {"deg_min": 2 ** n, "log_a_min": 2 ** (n - 1) * h,
                                  "search": n == 2}))
    for n, h in product((1, 2), (1, 2)):
        cases.append(GalleryCase(f"Perron(n={n},d=2,h={h})", "perron", {"n": n, "d": 2, "h": h},
                                 nss2_system(n, 2, h), None, "dependent chain",
                                 {"deg_y1_min": 2 ** n, "log_min": 2 ** n * h}))
    return cases


# ---------------------------------------------------------------------------
# configuration and random generation

@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    n_varieties: int = 100
    max_n: int = 3
    max_D: int = 5
    coord_bits: int = 10
    polys_per_variety: int = 5
    max_dp: int = 4
    max_hp: int = 8
    n_nss: int = 20
    nss_max_n: int = 2
    nss_max_D: int = 3
    nss_coord_bits: int = 3
    delta_cap: int = 12
    precision: int = DEFAULT_PRECISION
    max_precision: int = MAX_PRECISION
    sections: tuple = SECTIONS
    tamper: tuple = ()  # pairs (bound name, amount subtracted)

    def __post_init__(self):
        checks = [
            (1 <= self.max_n <= 3, "max_n must lie in 1..3"),
            (1 <= self.max_D <= 6, "max_D must lie in 1..6"),
            (1 <= self.coord_bits <= 10, "coord_bits must lie in 1..10"),
            (1 <= self.max_dp <= 4, "max_dp must lie in 1..4"),
            (0 <= self.max_hp <= 8, "max_hp must lie in 0..8"),
            (1 <= self.nss_max_n <= 2, "nss_max_n must lie in 1..2"),
            (1 <= self.nss_max_D <= 3, "nss_max_D must lie in 1..3"),
            (1 <= self.nss_coord_bits <= 10, "nss_coord_bits must lie in 1..10"),
            (self.n_varieties >= 0 and self.n_nss >= 0 and self.polys_per_variety >= 0,
             "counts must be nonnegative"),
            (1 <= self.delta_cap, "delta_cap must be positive"),
            (1 <= self.precision <= self.max_precision, "precision must not exceed max_precision"),
        ]
        for ok, msg in checks:
            if not ok:
                raise ValueError(msg)
        bad = [s for s in self.sections if s not in SECTIONS]
        if bad:
            raise ValueError(f"unknown sections {bad}")
        tamper = tuple(sorted(dict(self.tamper).items()))
        for name, _ in tamper:
            if name not in BOUND_NAMES:
                raise ValueError(f"unknown bound {name!r}")
        object.__setattr__(self, "tamper", tamper)
        object.__setattr__(self, "sections", tuple(self.sections))

    def tamper_amount(self, name: str):
        return dict(self.tamper).get(name, 0)

    def to_json(self) -> dict:
        out = asdict(self)
        out["tamper"] = [[k, str(v)] for k, v in self.tamper]
        out["sections"] = list(self.sections)
        return out


def _rng(cfg: SuiteConfig, stream: int, index: int):
    return np.random.default_rng([cfg.seed, stream, index])


def _rand_int(rng, lo, hi) -> int:
    return int(rng.integers(lo, hi + 1))


def random_points(rng, n: int, D: int, bits: int) -> PointVariety:
    lim = 2 ** bits
    pts: list = []
    while len(pts) < D:
        pt = tuple(Fraction(_rand_int(rng, -lim, lim), _rand_int(rng, 1, lim)) for _ in range(n))
        pt = tuple(q.numerator if q.denominator == 1 else q for q in pt)
        if pt not in pts:
            pts.append(pt)
    return PointVariety(n, tuple(pts))


def random_poly(rng, n: int, max_dp: int, max_hp: int) -> MPoly:
    """Nonconstant integer polynomial with degree at most ``max_dp`` and height at most ``max_hp``."""
    while True:
        d_p = _rand_int(rng, 1, max_dp)
        h_p = _rand_int(rng, 0, max_hp)
        lim = 2 ** h_p
        terms = {}
        for k in range(_rand_int(rng, 1, 4)):
            deg = d_p if k == 0 else _rand_int(rng, 0, d_p)
            e = [0] * n
            for _ in range(deg):
                e[_rand_int(rng, 0, n - 1)] += 1
            c = 0
            while c == 0:
                c = _rand_int(rng, -lim, lim)
            terms[tuple(e)] = terms.get(tuple(e), 0) + c
        p = MPoly(n, terms)
        if p and not p.is_constant() and max_abs_coeff(p) <= lim:
            return p


def random_variety(cfg: SuiteConfig, index: int = 0):
    """``(V, presentation, profile)`` for the ``index``-th random variety of ``cfg``."""
    rng = _rng(cfg, 0, index)
    n = _rand_int(rng, 1, cfg.max_n)
    D = _rand_int(rng, 1, cfg.max_D)
    V = random_points(rng, n, D, cfg.coord_bits)
    rur = build_rur(V, find_separating_form(V))
    gens = ideal_presentation(V, rur)
    for g in gens:
        for z in V.points:
            assert poly_eval(g, z) == 0
    B = monomial_basis(V)
    prof = SystemProfile.from_system(gens, None, cfg.precision, D=V.D, delta=B.delta)
    return V, gens, prof


def empty_system(cfg: SuiteConfig, index: int = 0):
    """A presentation of a random variety plus a linear polynomial avoiding it."""
    rng = _rng(cfg, 1, index)
    n = _rand_int(rng, 1, cfg.nss_max_n)
    D = _rand_int(rng, 1, cfg.nss_max_D)
    V = random_points(rng, n, D, cfg.nss_coord_bits)
    rur = build_rur(V, find_separating_form(V))
    gens = ideal_presentation(V, rur)
    firsts = {Fraction(z[0]) for z in V.points}
    lim = 2 ** cfg.nss_coord_bits
    while True:
        q = Fraction(_rand_int(rng, -lim, lim), _rand_int(rng, 1, lim))
        if q not in firsts:
            break
    extra = q.denominator * MPoly.var(n, 0) - q.numerator
    return V, gens + [extra]


def nss_profile(system, precision=DEFAULT_PRECISION) -> SystemProfile:
    """Profile with the distinguished index minimizing the Nullstellensatz degree bound."""
    base = SystemProfile.from_system(system, 1, precision)
    best = None
    for j in range(1, base.s + 1):
        cand = base.with_distinguished(j)
        nb = nss_bounds(cand, precision)
        key = (nb.degree, nb.height.hi, j)
        if best is None or key < best[0]:
            best = (key, cand)
    return best[1]


# ---------------------------------------------------------------------------
# report

@dataclass
class CheckResult:
    case: str
    check: str
    theorem: str
    criterion: int
    relation: str
    exact: object
    bound: object
    verdict: bool
    precision: int = DEFAULT_PRECISION

    @staticmethod
    def _interval(v) -> dict:
        if isinstance(v, LogVal):
            j = v.to_json()
            return {"lo": j["lo"], "hi": j["hi"]}
        return {"lo": str(v), "hi": str(v)}

    def margin(self) -> str:
        from .logval import decimal_string

        if self.exact is None or self.bound is None:
            return "none"
        try:
            e, b = LogVal.coerce(self.exact), LogVal.coerce(self.bound)
        except (TypeError, ValueError):
            return "0" if self.verdict else "none"
        if self.relation == ">=":
            m = e.lo - b.hi
        elif self.relation == "==":
            m = -abs(e.mid - b.mid)
        else:
            m = b.lo - e.hi
        return decimal_string(m, 12, up=False)

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "check": self.check,
            "theorem": self.theorem,
            "criterion": self.criterion,
            "relation": self.relation,
            "exact": self._interval(self.exact),
            "bound": self._interval(self.bound),
            "margin": self.margin(),
            "verdict": self.verdict,
        }


@dataclass
class SuiteReport:
    config: SuiteConfig
    results: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.verdict for r in self.results)

    @property
    def failures(self) -> list:
        return [r for r in self.results if not r.verdict]

    def by_criterion(self) -> dict:
        out: dict = {}
        for r in self.results:
            ok, total = out.get(r.criterion, (0, 0))
            out[r.criterion] = (ok + bool(r.verdict), total + 1)
        return dict(sorted(out.items()))

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json(),
            "passed": self.passed,
            "summary": {str(k): {"passed": v[0], "total": v[1]} for k, v in self.by_criterion().items()},
            "results": [r.to_json() for r in self.results],
            "notes": list(self.notes),
        }

    def dumps(self, pretty: bool = False) -> str:
        return json.dumps(self.to_json(), indent=2 if pretty else None, sort_keys=True)


class _Checker:
    def __init__(self, cfg: SuiteConfig, report: SuiteReport):
        self.cfg = cfg
        self.report = report

    def leq(self, case, check, theorem, crit, lhs, rhs, relation="<=", decide=None):
        """Record ``lhs <= rhs`` (callables of precision); ``rhs`` is tampered if named.

        ``decide`` is an exact comparison used when the intervals cannot be
        separated, which happens when both sides are the same real number.
        """
        cfg = self.cfg
        amount = cfg.tamper_amount(check) if relation == "<=" else 0
        if amount:
            base = rhs
            rhs = lambda prec: base(prec) - amount  # noqa: E731
        verdict, a, b, prec = refine_leq(lhs, rhs, cfg.precision, cfg.max_precision)
        if verdict is None and decide is not None and not amount:
            verdict = decide()
        if relation == ">=":
            # lhs is the lower bound, rhs the exact quantity
            a, b = b, a
        self.report.results.append(
            CheckResult(case, check, theorem, crit, relation, a, b, bool(verdict), prec)
        )
        return bool(verdict)

    def geq(self, case, check, theorem, crit, exact, lower):
        return self.leq(case, check, theorem, crit, lower, exact, relation=">=")

    def int_leq(self, case, check, theorem, crit, exact: int, bound: int):
        bound = bound - self.cfg.tamper_amount(check)
        self.report.results.append(
            CheckResult(case, check, theorem, crit, "<=", exact, bound, exact <= bound)
        )

    def equal(self, case, check, theorem, crit, exact, expected):
        self.report.results.append(
            CheckResult(case, check, theorem, crit, "==", exact, expected, exact == expected)
        )

    def truth(self, case, check, theorem, crit, ok: bool):
        self.report.results.append(
            CheckResult(case, check, theorem, crit, "==", int(bool(ok)), 1, bool(ok))
        )


# ---------------------------------------------------------------------------
# sections

def _rootin_exact(V: PointVariety) -> bool:
    """The rootin inequality on squared norms, where it is a rational comparison."""
    lhs = rhs = Fraction(1)
    for z, vec in zip(V.points, V.primitive_vectors):
        lhs *= 1 + sum(Fraction(c) ** 2 for c in z)
        rhs *= sum(v * v for v in vec)
    return lhs <= rhs


def _v2_checks(ck: _Checker, case: GalleryCase):
    n, d, h = case.params["n"], case.params["d"], case.params["h"]
    V = case.points
    prof = SystemProfile.from_system(case.system, None, ck.cfg.precision)
    hV = lambda p: variety_height(V, p)  # noqa: E731
    base = d ** (n - 1) * h
    ck.geq(case.name, "v2_height_lower", "height of the powers-of-two chain", 1, hV, _const(base))
    ck.leq(case.name, "v2_height_upper", "height of the powers-of-two chain", 1, hV,
           lambda p: log2_interval(n + 1, p).scale(Fraction(1, 2)) + base)
    ck.leq(case.name, "arith_bezout_sharp", "arithmetic Bezout inequality", 1, hV,
           lambda p: arith_bezout_height_bound(prof, p)[0])


def _variety_checks(ck: _Checker, name: str, V: PointVariety, prof: SystemProfile, polys: list,
                    bound_checks: bool = True, extra: Optional[dict] = None):
    """Checks on one explicit variety with the profile of a system defining it."""
    cfg = ck.cfg
    n, D = V.n, V.D
    u = find_separating_form(V)
    chow = chow_form(V)
    rur = build_rur(V, u, chow)
    B = monomial_basis(V)
    hV = lambda p: variety_height(V, p)  # noqa: E731

    if bound_checks:
        ck.leq(name, "rootin", "norms of (1, zeta) against the height", 2,
               lambda p: rootin_lhs(V, p), hV, decide=lambda: _rootin_exact(V))
        ck.int_leq(name, "bezout_degree", "Bezout inequality", 2, D, bezout_degree_bound(prof))
        ck.leq(name, "arith_bezout_sharp", "arithmetic Bezout inequality", 2, hV,
               lambda p: arith_bezout_height_bound(prof, p)[0])
        ck.leq(name, "arith_bezout_coarse", "arithmetic Bezout inequality", 2, hV,
               lambda p: arith_bezout_height_bound(prof, p)[1])
        ck.leq(name, "chow_bracket", "height of V against the height of its Chow form", 2,
               lambda p: (hV(p) - chow.height(p)).abs(),
               lambda p: chow_height_bracket(chow.height(p), D, n, p)[1] - chow.height(p))
        # Shape Lemma degrees and heights
        ck.equal(name, "shape_degree_omega0", "arithmetic Shape Lemma", 2, len(rur.omega0) - 1, D)
        for i, w in enumerate(rur.omegas, 1):
            if any(w):
                ck.int_leq(name, "shape_degree_omega", "arithmetic Shape Lemma", 2, len(w) - 1, D - 1)
        for i, w in enumerate(rur.polys()):
            if w:
                ck.leq(name, "shape_height", "arithmetic Shape Lemma", 2,
                       lambda p, w=w: _height(w, p), lambda p: shape_height_bound(prof, D, p))
        for b in B.monomials(n):
            if b.degree() >= 1:
                img = umap(rur, b)
                if any(img):
                    rep = primitive_part(MPoly.univariate(img))[0]
                    ck.leq(name, "umap_monomial", "height of U(x^alpha)", 2,
                           lambda p, rep=rep: _height(rep, p),
                           lambda p, k=b.degree(): umap_bounds(prof, k, k, 0, p).monomial)

    # coordinates: upper, lower and separation bounds
    rb = lambda p: root_bounds(prof, p)  # noqa: E731
    for k, z in enumerate(V.points):
        for i, zi in enumerate(z):
            if zi != 0:
                ck.leq(name, "root_upper", "upper bound for the roots", 3,
                       lambda p, zi=zi: log2_interval(abs(Fraction(zi)), p), lambda p: rb(p).upper)
                ck.leq(name, "root_coord_lower", "lower bound for the roots", 3,
                       lambda p, zi=zi: _abslog(zi, p), lambda p: rb(p).coord_lower)
    for z, w in combinations(V.points, 2):
        for zi, wi in zip(z, w):
            if zi != wi:
                ck.leq(name, "root_separation", "separation bound for the roots", 3,
                       lambda p, q=Fraction(zi) - Fraction(wi): _abslog(q, p),
                       lambda p: rb(p).separation)

    columns = remainder_columns(V, rur, B)
    for j, poly in enumerate(polys):
        d_p = poly.degree()
        hp = lambda p, poly=poly: _height(poly, p)  # noqa: E731
        vb = lambda p, d_p=d_p, hp=hp: value_bounds(prof, d_p, hp(p), p)  # noqa: E731
        vals = [poly_eval(poly, z) for z in V.points]
        for v in vals:
            if v != 0:
                ck.leq(name, "value_upper", "upper bound for values at the roots", 3,
                       lambda p, v=v: log2_interval(abs(Fraction(v)), p), lambda p, vb=vb: vb(p).upper)
                ck.leq(name, "value_two_sided", "lower bound for values at the roots", 3,
                       lambda p, v=v: _abslog(v, p), lambda p, vb=vb: vb(p).two_sided)
        for v, w in combinations(vals, 2):
            if v != w:
                ck.leq(name, "value_difference", "separation of values at the roots", 3,
                       lambda p, q=Fraction(v) - Fraction(w): _abslog(q, p),
                       lambda p, vb=vb: vb(p).difference)
        try:
            rem = remainder(V, rur, B, poly, columns)
            ok = all(poly_eval(rem.pbar, z) == val for z, val in zip(V.points, vals))
        except ArithmeticError:
            rem, ok = None, False
        ck.truth(name, "remainder_oracle", "remainder by Cramer's rule equals interpolation", 6, ok)
        if rem is None or not bound_checks:
            continue
        delta = B.delta
        rbnd = lambda p, d_p=d_p, hp=hp: remainder_bounds(prof, delta, d_p, hp(p), p)  # noqa: E731
        ck.leq(name, "remainder_denominator", "height of the remainder modulo I", 2,
               lambda p, rem=rem: rem.height_a(p), lambda p, rbnd=rbnd: rbnd(p).denominator)
        ck.leq(name, "remainder_numerator", "height of the remainder modulo I", 2,
               lambda p, rem=rem: rem.height_N(p), lambda p, rbnd=rbnd: rbnd(p).numerator)
    if extra:
        for poly, expected in extra.items():
            rem = remainder(V, rur, B, poly, columns)
            ck.equal(name, "remainder_value", "remainder of the last coordinate power", 6,
                     str(rem.pbar), str(expected))


def _random_section(ck: _Checker):
    cfg = ck.cfg
    for k in range(cfg.n_varieties):
        V, gens, prof = random_variety(cfg, k)
        rng = _rng(cfg, 2, k)
        polys = [random_poly(rng, V.n, cfg.max_dp, cfg.max_hp) for _ in range(cfg.polys_per_variety)]
        _variety_checks(ck, f"random[{k}](n={V.n},D={V.D})", V, prof, polys)


def _gallery_section(ck: _Checker, cases):
    cfg = ck.cfg
    for case in cases:
        if case.kind not in ("v1", "v2", "v3"):
            continue
        V = case.points
        n = V.n
        prof = SystemProfile.from_system(case.system, None, cfg.precision)
        if case.kind == "v1":
            ck.equal(case.name, "bezout_degree_attained", "Bezout inequality", 0,
                     V.D, bezout_degree_bound(prof))
        xs = _x(n)
        polys = list(xs)
        extra = None
        if case.kind == "v2":
            d = case.params["d"]
            extra = {xs[-1] ** d: MPoly.constant(n, case.expected["pbar_last_pow"])}
        if case.kind == "v3":
            d, h = case.params["d"], case.params["h"]
            last = V.points[0][-1]
            ck.equal(case.name, "v3_log_last", "exact size of the last coordinate", 3,
                     Fraction(last), Fraction(1, 2 ** (d ** (n - 1) * h)))
            ck.report.notes.append({
                "case": case.name,
                "log2_last_coordinate": str(case.expected["log_last"]),
                "coord_lower_bound": root_bounds(prof, cfg.precision).coord_lower.to_json(),
            })
        _variety_checks(ck, case.name, V, prof, polys, bound_checks=False, extra=extra)


def _nss_checks(ck: _Checker, name: str, system: list, lower: Optional[dict] = None, search=True):
    cfg = ck.cfg
    prof = nss_profile(system, cfg.precision)
    nb = nss_bounds(prof, cfg.precision)
    if lower is not None:
        ck.int_leq(name, "nss_degree", "arithmetic Nullstellensatz", 4, lower["deg_min"], nb.degree)
        ck.leq(name, "nss_height", "arithmetic Nullstellensatz", 4,
               _const(lower["log_a_min"]), lambda p: nss_bounds(prof.at_precision(p), p).height)
    if not search:
        return
    cap = min(nb.degree, cfg.delta_cap)
    ident = nss_search(system, cap)
    if ident is None:
        ck.report.results.append(CheckResult(name, "nss_found", "arithmetic Nullstellensatz", 4,
                                             "<=", None, cap, False))
        return None
    ck.int_leq(name, "nss_degree", "arithmetic Nullstellensatz", 4, ident.delta, nb.degree)
    ck.truth(name, "nss_identity", "Bezout identity expands exactly", 4, verify_identity(ident, system))
    hb = lambda p: nss_bounds(prof, p).height  # noqa: E731
    ck.leq(name, "nss_height", "arithmetic Nullstellensatz", 4, lambda p: ident.height_a(p), hb)
    for g, f in zip(ident.cofactors, system):
        if g:
            ck.leq(name, "nss_height", "arithmetic Nullstellensatz", 4,
                   lambda p, g=g, f=f: _height(g, p) + _height(f, p), hb)
    ck.report.notes.append({"case": name, "nss_delta": ident.delta, "nss_log2_a": ident.height_a().to_json()})
    return ident


def _nss_section(ck: _Checker, cases):
    cfg = ck.cfg
    for k in range(cfg.n_nss):
        V, system = empty_system(cfg, k)
        _nss_checks(ck, f"empty[{k}](n={V.n},D={V.D})", system)
    for case in cases:
        if case.kind == "nss2":
            ident = _nss_checks(ck, case.name, case.system)
            if ident is not None:
                ck.geq(case.name, "nss2_height_lower", "a is divisible by 2^(d^n h)", 4,
                       lambda p: ident.height_a(p), _const(case.expected["log_a_min"]))
        elif case.kind == "bmp":
            n, d = case.params["n"], case.params["d"]
            ident = _nss_checks(ck, case.name, case.system, lower=case.expected,
                                search=case.expected["search"])
            if ident is not None:
                g1 = ident.cofactors[0]
                deg = (g1 * case.system[0]).degree() if g1 else 0
                ck.geq(case.name, "bmp_degree_lower", "certificate degree lower bound", 4,
                       _const(deg), _const(case.expected["deg_min"]))
                ck.geq(case.name, "bmp_height_lower", "certificate height lower bound", 4,
                       lambda p: ident.height_a(p), _const(case.expected["log_a_min"]))


def _perron_section(ck: _Checker, cases):
    cfg = ck.cfg
    for case in cases:
        if case.kind != "perron":
            continue
        f = case.system
        degs = [g.degree() for g in f]
        rels = perron_search(f)
        ck.geq(case.name, "perron_kernel", "algebraic dependence exists", 5,
               _const(len(rels)), _const(1))
        pb = perron_bounds(degs, [_height(g, cfg.precision) for g in f], cfg.precision)
        for rel in rels:
            ck.geq(case.name, "perron_deg_y1_lower", "degree lower bound in y1", 5,
                   _const(rel.degree_in(0)), _const(case.expected["deg_y1_min"]))
            ck.geq(case.name, "perron_height_lower", "height lower bound", 5,
                   lambda p, rel=rel: rel.height(p), _const(case.expected["log_min"]))
            ck.int_leq(case.name, "perron_weighted_degree", "arithmetic Perron theorem", 5,
                       max(rel.weighted_degrees().values()), pb.weighted_degree)
            for e in rel.P.terms:
                ck.leq(case.name, "perron_height", "arithmetic Perron theorem", 5,
                       lambda p, rel=rel, e=e: rel.monomial_heights([_height(g, p) for g in f], p)[e],
                       lambda p: perron_bounds(degs, [_height(g, p) for g in f], p).height)
        if case.params["n"] == 1:
            best = min(rels, key=lambda r: max_abs_coeff(r.P))
            ck.equal(case.name, "perron_minimal_height", "minimal relation attains the lower bound", 5,
                     max_abs_coeff(best.P), 2 ** case.expected["log_min"])


def run_suite(cfg: Optional[SuiteConfig] = None) -> SuiteReport:
    """Run the configured sections; results are ordered deterministically."""
    cfg = cfg or SuiteConfig()
    report = SuiteReport(cfg)
    ck = _Checker(cfg, report)
    cases = gallery()
    if "v2" in cfg.sections:
        for case in cases:
            if case.kind == "v2":
                _v2_checks(ck, case)
    if "random" in cfg.sections:
        _random_section(ck)
    if "gallery" in cfg.sections:
        _gallery_section(ck, cases)
    if "nss" in cfg.sections:
        _nss_section(ck, cases)
    if "perron" in cfg.sections:
        _perron_section(ck, cases)
    return report
