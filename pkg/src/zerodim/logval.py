"""Certified dyadic intervals for base-2 logarithmic quantities.

All endpoints are dyadic rationals. Every operation rounds the lower end
down and the upper end up, so the bracketed real value is never lost.
Logarithms are computed with the atanh series in fixed-point integer
arithmetic, with a rigorous tail bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Union

DEFAULT_PRECISION = 64
MAX_PRECISION = 1024
GUARD_BITS = 16
_MIN_GRID = 64

Number = Union[int, Fraction]


def _is_dyadic(q: Fraction) -> bool:
    d = q.denominator
    return d & (d - 1) == 0


def _grid_bits(q: Fraction) -> int:
    return q.denominator.bit_length() - 1


def _floor_to(q: Fraction, bits: int) -> Fraction:
    return Fraction((q.numerator << bits) // q.denominator, 1 << bits)


def _ceil_to(q: Fraction, bits: int) -> Fraction:
    return Fraction(-((-q.numerator << bits) // q.denominator), 1 << bits)


@dataclass(frozen=True)
class LogVal:
    """A closed interval ``[lo, hi]`` with dyadic endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        if not (_is_dyadic(lo) and _is_dyadic(hi)):
            raise ValueError("LogVal endpoints must be dyadic rationals")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def exact(cls, v: Number) -> "LogVal":
        v = Fraction(v)
        if _is_dyadic(v):
            return cls(v, v)
        bits = max(_MIN_GRID, v.denominator.bit_length() + _MIN_GRID)
        return cls(_floor_to(v, bits), _ceil_to(v, bits))

    @classmethod
    def coerce(cls, v) -> "LogVal":
        return v if isinstance(v, LogVal) else cls.exact(v)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def _bits(self) -> int:
        return max(_MIN_GRID, _grid_bits(self.lo), _grid_bits(self.hi))

    def __add__(self, other) -> "LogVal":
        other = LogVal.coerce(other)
        return LogVal(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self) -> "LogVal":
        return LogVal(-self.hi, -self.lo)

    def __sub__(self, other) -> "LogVal":
        return self + (-LogVal.coerce(other))

    def __rsub__(self, other) -> "LogVal":
        return LogVal.coerce(other) - self

    def scale(self, q: Number) -> "LogVal":
        """Multiply by an exact rational, rounding outward to a dyadic grid."""
        q = Fraction(q)
        a, b = self.lo * q, self.hi * q
        if a > b:
            a, b = b, a
        if _is_dyadic(a) and _is_dyadic(b):
            return LogVal(a, b)
        bits = self._bits()
        return LogVal(_floor_to(a, bits), _ceil_to(b, bits))

    def __mul__(self, other) -> "LogVal":
        if isinstance(other, LogVal):
            if other.is_exact:
                return self.scale(other.lo)
            if self.is_exact:
                return other.scale(self.lo)
            prods = [self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi]
            return LogVal(min(prods), max(prods))
        return self.scale(other)

    __rmul__ = __mul__

    def __truediv__(self, q: Number) -> "LogVal":
        return self.scale(1 / Fraction(q))

    def abs(self) -> "LogVal":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return LogVal(Fraction(0), max(-self.lo, self.hi))

    def max(self, other) -> "LogVal":
        other = LogVal.coerce(other)
        return LogVal(max(self.lo, other.lo), max(self.hi, other.hi))

    def contains(self, v: Number) -> bool:
        return self.lo <= v <= self.hi

    def __repr__(self) -> str:
        if self.is_exact:
            return f"LogVal({float(self.lo):.6g})"
        return f"LogVal([{float(self.lo):.12g}, {float(self.hi):.12g}])"

    def to_json(self, digits: int = 20) -> dict:
        return {
            "lo": decimal_string(self.lo, digits, up=False),
            "hi": decimal_string(self.hi, digits, up=True),
            "exact": self.is_exact,
        }


def decimal_string(q: Fraction, digits: int = 20, up: bool = False) -> str:
    """Decimal rendering of ``q`` rounded outward (down or up) to ``digits`` places.

    Values representable exactly with ``digits`` places are printed exactly.
    """
    q = Fraction(q)
    scale = 10 ** digits
    num = q.numerator * scale
    k = -((-num) // q.denominator) if up else num // q.denominator
    sign = "-" if k < 0 else ""
    k = abs(k)
    whole, frac = divmod(k, scale)
    if frac == 0:
        return f"{sign}{whole}"
    s = str(frac).rjust(digits, "0").rstrip("0")
    return f"{sign}{whole}.{s}"


# ---------------------------------------------------------------------------
# logarithms

def _atanh_sum(num: int, den: int, F: int, upper: bool) -> int:
    """Fixed-point (scale 2**F) bound on atanh(num/den) for 0 <= num/den <= 1/3."""
    if num == 0:
        return 0
    if upper:
        z = -((-num << F) // den)
        z2 = -((-z * z) >> F)
    else:
        z = (num << F) // den
        z2 = (z * z) >> F
    total = 0
    p = z
    k = 0
    while p > 1:
        if upper:
            total += -((-p) // (2 * k + 1))
            p = -((-p * z2) >> F)
        else:
            total += p // (2 * k + 1)
            p = (p * z2) >> F
        k += 1
    if upper:
        # tail: sum_{j>=k} z^(2j+1)/(2j+1) <= p / ((2k+1)(1 - z^2)) <= 9p/8
        total += -((-9 * max(p, 1)) // 8) + 1
    return total


@lru_cache(maxsize=64)
def _ln2_bounds(F: int) -> tuple[int, int]:
    # ln 2 = 2 atanh(1/3)
    return 2 * _atanh_sum(1, 3, F, False), 2 * _atanh_sum(1, 3, F, True)


@lru_cache(maxsize=4096)
def _log2_int(a: int, precision: int) -> LogVal:
    if a <= 0:
        raise ValueError("logarithm of a nonpositive number")
    e = a.bit_length() - 1
    if a == 1 << e:
        return LogVal(Fraction(e), Fraction(e))
    F = precision + GUARD_BITS
    # a / 2^e in (1, 2): z = (a - 2^e) / (a + 2^e) in (0, 1/3)
    base = 1 << e
    num, den = a - base, a + base
    ln_lo = 2 * _atanh_sum(num, den, F, False)
    ln_hi = 2 * _atanh_sum(num, den, F, True)
    l2_lo, l2_hi = _ln2_bounds(F)
    frac_lo = (ln_lo << F) // l2_hi
    frac_hi = -((-ln_hi << F) // l2_lo)
    lo = Fraction((e << F) + frac_lo, 1 << F)
    hi = Fraction((e << F) + frac_hi, 1 << F)
    return LogVal(lo, hi)


def log2_interval(x: Number, precision: int = DEFAULT_PRECISION) -> LogVal:
    """Interval of width at most ``2**-precision`` containing ``log2 x``.

    Powers of two (including 1 and 1/2**k) give exact point intervals.
    """
    x = Fraction(x)
    if x <= 0:
        raise ValueError("log2 requires a positive argument")
    if x.denominator == 1:
        return _log2_int(x.numerator, precision)
    return _log2_int(x.numerator, precision + 1) - _log2_int(x.denominator, precision + 1)


def lognorm2(v, precision: int = DEFAULT_PRECISION) -> LogVal:
    """``log2`` of the Euclidean norm of a rational vector, from the exact sum of squares."""
    s = sum(Fraction(c) ** 2 for c in v)
    if s == 0:
        raise ValueError("log norm of the zero vector")
    return log2_interval(s, precision + 1).scale(Fraction(1, 2))


def leq_certified(a: LogVal, b: LogVal) -> Optional[bool]:
    """True if ``a <= b`` is certain, False if ``a > b`` is certain, None otherwise."""
    a, b = LogVal.coerce(a), LogVal.coerce(b)
    if a.hi <= b.lo:
        return True
    if a.lo > b.hi:
        return False
    return None


def refine_leq(
    lhs: Callable[[int], LogVal],
    rhs: Callable[[int], LogVal],
    precision: int = DEFAULT_PRECISION,
    max_precision: int = MAX_PRECISION,
) -> tuple[Optional[bool], LogVal, LogVal, int]:
    """Decide ``lhs <= rhs`` by doubling precision until certified or capped.

    Returns the verdict, the last intervals and the precision used.
    """
    while True:
        a, b = lhs(precision), rhs(precision)
        verdict = leq_certified(a, b)
        if verdict is not None or precision >= max_precision:
            return verdict, a, b, precision
        precision = min(2 * precision, max_precision)
