"""Exact sparse multivariate polynomials over the integers and rationals.

Coefficients are Python ``int`` or ``fractions.Fraction``; a Fraction with
denominator 1 is always normalized to ``int`` so integrality checks stay cheap.
Terms iterate in graded lexicographic order with ``x1 > x2 > ... > xn``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class ZeroPolynomialError(ValueError):
    """Raised where an operation is undefined on the zero polynomial."""


def as_scalar(c) -> Scalar:
    """Normalize an exact number to ``int`` when integral, else ``Fraction``."""
    if isinstance(c, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, str):
        return as_scalar(Fraction(c.strip()))
    if isinstance(c, float):
        raise TypeError("floats are not exact scalars; pass int, Fraction or 'a/b'")
    # numpy integers and other Integral types
    try:
        return int(c) if int(c) == c else as_scalar(Fraction(c))
    except (TypeError, ValueError) as exc:
        raise TypeError(f"cannot interpret {c!r} as an exact scalar") from exc


def grlex_key(exps: Sequence[int]):
    return (sum(exps), tuple(exps))


class MPoly:
    """Immutable sparse polynomial in ``nvars`` variables.

    ``terms`` maps exponent tuples to nonzero coefficients.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        clean: dict[tuple, Scalar] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent {exps} does not have length {nvars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = as_scalar(c)
            if c:
                c = clean.get(exps, 0) + c
                if c:
                    clean[exps] = as_scalar(c)
                else:
                    clean.pop(exps, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MPoly":
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, nvars: int, c) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "MPoly":
        """The variable ``x_{i+1}`` (0-based index ``i``)."""
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[i] = 1
        return cls._raw(nvars, {tuple(exps): 1})

    @classmethod
    def univariate(cls, coeffs: Iterable) -> "MPoly":
        """Univariate polynomial from coefficients listed low to high."""
        return cls(1, {(k,): c for k, c in enumerate(coeffs)})

    @classmethod
    def linear_form(cls, coeffs: Sequence) -> "MPoly":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(n, terms)

    # -- basic protocol -------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """(exponents, coefficient) pairs in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def coefficient(self, exps: Sequence[int]) -> Scalar:
        return self._terms.get(tuple(exps), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self == MPoly.constant(self.nvars, c)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"MPoly({self.nvars}, {format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return MPoly.constant(self.nvars, other)

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = as_scalar(s)
            else:
                out.pop(e, None)
        return MPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            c = as_scalar(other)
            if not c:
                return MPoly._raw(self.nvars, {})
            return MPoly._raw(self.nvars, {e: as_scalar(v * c) for e, v in self._terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly._raw(self.nvars, {e: as_scalar(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "MPoly":
        return self * c

    # -- structure ------------------------------------------------------

    def degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("degree undefined for zero polynomial")
        return max(sum(e) for e in self._terms)

    def degree_in(self, i: int) -> int:
        if not self._terms:
            raise ZeroPolynomialError("degree undefined for zero polynomial")
        return max(e[i] for e in self._terms)

    def is_integer(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def variables(self) -> set[int]:
        """0-based indices of variables that actually occur."""
        return {i for e in self._terms for i, k in enumerate(e) if k}

    def leading_term(self):
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        return max(self._terms.items(), key=lambda kv: grlex_key(kv[0]))

    def diff(self, i: int) -> "MPoly":
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = as_scalar(c * e[i])
        return MPoly._raw(self.nvars, out)

    def extend(self, nvars: int) -> "MPoly":
        """Embed into a ring with more variables appended on the right."""
        if nvars < self.nvars:
            raise ValueError("cannot shrink the variable set")
        pad = (0,) * (nvars - self.nvars)
        return MPoly._raw(nvars, {e + pad: c for e, c in self._terms.items()})

    def compose(self, images: Sequence["MPoly"]) -> "MPoly":
        """Substitute ``x_i -> images[i]``; all images share one ring."""
        if len(images) != self.nvars:
            raise ValueError(f"need {self.nvars} images, got {len(images)}")
        if not images:
            return self
        m = images[0].nvars
        if any(g.nvars != m for g in images):
            raise ValueError("images live in different rings")
        cache: list[dict[int, MPoly]] = [{0: MPoly.constant(m, 1), 1: g} for g in images]

        def power(i, k):
            got = cache[i].get(k)
            if got is None:
                half = power(i, k // 2)
                got = half * half
                if k % 2:
                    got = got * images[i]
                cache[i][k] = got
            return got

        out: dict = {}
        for e, c in self._terms.items():
            term = MPoly.constant(m, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            for f, v in term._terms.items():
                out[f] = out.get(f, 0) + v
        return MPoly._raw(m, {f: as_scalar(v) for f, v in out.items() if v})

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return poly_eval(self, point)


# ---------------------------------------------------------------------------
# module-level operations

def poly_degree(f: MPoly) -> int:
    return f.degree()


def poly_eval(f: MPoly, point: Sequence) -> Scalar:
    """Exact value of ``f`` at ``point``, nested Horner in x1, then x2, ..."""
    if len(point) != f.nvars:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {f.nvars} variables")
    pt = [as_scalar(v) for v in point]
    if not f._terms:
        return 0
    if f.nvars == 0:
        return f._terms[()]
    return as_scalar(_horner(list(f._terms.items()), pt, 0))


def _horner(terms, pt, i):
    if i == len(pt):
        return sum(c for _, c in terms)
    groups: dict[int, list] = {}
    for e, c in terms:
        groups.setdefault(e[i], []).append((e, c))
    x = pt[i]
    acc = 0
    for k in range(max(groups), -1, -1):
        acc = acc * x
        if k in groups:
            acc += _horner(groups[k], pt, i + 1)
    return acc


def poly_height(f: MPoly, precision: int = 64):
    """Interval for ``log2 max |c|`` over the coefficients of an integer polynomial."""
    from .logval import log2_interval

    if not f:
        raise ZeroPolynomialError("height undefined for zero polynomial")
    if not f.is_integer():
        raise ValueError("height defined for integer polynomials")
    return log2_interval(max_abs_coeff(f), precision)


def max_abs_coeff(f: MPoly) -> int:
    if not f:
        raise ZeroPolynomialError("zero polynomial has no coefficients")
    return max(abs(c) for c in f._terms.values())


def primitive_part(f: MPoly):
    """Split ``f`` as ``content * primitive`` with ``primitive`` in Z[x].

    The primitive part has coprime integer coefficients and a positive
    leading coefficient in graded-lex order; the sign goes to the content.
    """
    if not f:
        raise ZeroPolynomialError("primitive part undefined for zero polynomial")
    coeffs = [Fraction(c) for c in f._terms.values()]
    den = reduce(lcm, (c.denominator for c in coeffs), 1)
    ints = [int(c * den) for c in coeffs]
    g = reduce(gcd, ints, 0)
    content = Fraction(g, den)
    if f.leading_term()[1] < 0:
        content = -content
    prim = MPoly._raw(f.nvars, {e: as_scalar(c / content) for e, c in f._terms.items()})
    return prim, as_scalar(content)


def content_gcd(f: MPoly) -> int:
    """gcd of the coefficients of an integer polynomial."""
    return reduce(gcd, f._terms.values(), 0)


# ---------------------------------------------------------------------------
# univariate helpers on dense coefficient lists (low -> high)

def ucoeffs(p: MPoly) -> list:
    if p.nvars != 1:
        raise ValueError("expected a univariate polynomial")
    if not p:
        return []
    out = [0] * (p.degree() + 1)
    for (k,), c in p._terms.items():
        out[k] = c
    return out


def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def u_add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def u_sub(a, b):
    return u_add(a, [-c for c in b])


def u_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def u_divmod(a, b):
    """Exact division with remainder over Q; ``b`` must be nonzero."""
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in a]
    _trim(r)
    q = [Fraction(0)] * max(len(r) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(r) >= len(b):
        coef = r[-1] / lead
        shift = len(r) - len(b)
        q[shift] = coef
        for i, c in enumerate(b):
            r[shift + i] -= coef * c
        r.pop()
        _trim(r)
    return _trim(q), r


def u_mod(a, m):
    return u_divmod(a, m)[1]


def u_deriv(a):
    return _trim([k * a[k] for k in range(1, len(a))])


def u_gcd(a, b):
    """Monic gcd over Q."""
    a = _trim([Fraction(c) for c in a])
    b = _trim([Fraction(c) for c in b])
    while b:
        a, b = b, u_mod(a, b)
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def u_ext_gcd(a, b):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = _trim([Fraction(c) for c in a]), _trim([Fraction(c) for c in b])
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = u_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, u_sub(s0, u_mul(q, s1))
        t0, t1 = t1, u_sub(t0, u_mul(q, t1))
    if not r0:
        return [], [], []
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0]


def u_eval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return as_scalar(acc) if acc != 0 else 0


def univ_squarefree(p: MPoly) -> bool:
    a = ucoeffs(p)
    if not a:
        raise ZeroPolynomialError("squarefreeness undefined for zero polynomial")
    return len(u_gcd(a, u_deriv(a))) <= 1


def univ_modinv(p: MPoly, m: MPoly) -> MPoly:
    """Inverse of ``p`` modulo ``m`` over Q, of degree below ``deg m``."""
    mc = ucoeffs(m)
    if len(mc) < 2:
        raise ValueError("modulus must have degree at least 1")
    inv = u_modinv(ucoeffs(p), mc)
    return MPoly.univariate(inv)


def u_modinv(a, m):
    g, s, _ = u_ext_gcd(u_mod(a, m), m)
    if len(g) != 1:
        raise ValueError("not invertible modulo m")
    return u_mod(s, m)


# ---------------------------------------------------------------------------
# printing

def _fmt_coeff(c: Scalar) -> str:
    return str(c)


def format_poly(f: MPoly, names: Sequence[str] | None = None) -> str:
    """Render in the input grammar, e.g. ``x1^3 - 32*x2 + 7``.

    Integer polynomials round-trip through the parser; rational
    coefficients print as ``a/b`` and are display-only.
    """
    if not f:
        return "0"
    if names is None:
        names = [f"x{i + 1}" for i in range(f.nvars)]
    parts = []
    for exps, c in f.items():
        mono = "*".join(
            names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(exps) if k
        )
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = _fmt_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(a)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def term_list(f: MPoly) -> list:
    """JSON-friendly ``[[coefficient_string, [exponents...]], ...]``."""
    return [[str(c), list(e)] for e, c in f.items()]


def from_term_list(nvars: int, data) -> MPoly:
    return MPoly(nvars, {tuple(e): Fraction(c) for c, e in data})
