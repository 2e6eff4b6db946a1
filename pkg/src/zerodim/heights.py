"""Heights of rational points and of finite rational-point varieties."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

from .logval import DEFAULT_PRECISION, LogVal, log2_interval, lognorm2
from .poly import as_scalar


def primitive_vector(point: Sequence) -> tuple[int, ...]:
    """``(c, c1, ..., cn)`` with ``c >= 1`` the least common denominator of ``point``."""
    coords = [Fraction(v) for v in point]
    c = reduce(lcm, (q.denominator for q in coords), 1)
    vec = (c, *(int(q * c) for q in coords))
    assert reduce(gcd, vec, 0) == 1
    return vec


@dataclass(frozen=True)
class PointVariety:
    """A finite set of distinct points of Q^n."""

    n: int
    points: tuple
    primitive_vectors: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pts = tuple(tuple(as_scalar(v) for v in p) for p in self.points)
        if not pts:
            raise ValueError("a point variety needs at least one point")
        for p in pts:
            if len(p) != self.n:
                raise ValueError(f"point {p} does not have {self.n} coordinates")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "primitive_vectors", tuple(primitive_vector(p) for p in pts))

    @classmethod
    def from_points(cls, points) -> "PointVariety":
        pts = [tuple(p) for p in points]
        if not pts:
            raise ValueError("a point variety needs at least one point")
        return cls(len(pts[0]), tuple(pts))

    @property
    def D(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def union(self, other: "PointVariety") -> "PointVariety":
        return PointVariety(self.n, self.points + other.points)


def variety_height(V: PointVariety, precision: int = DEFAULT_PRECISION) -> LogVal:
    """Sum over the points of ``log2 ||(c, c1, ..., cn)||_2``."""
    # each summand is computed a few bits finer so the sum keeps the target width
    extra = max(V.D - 1, 0).bit_length()
    total = LogVal.exact(0)
    for vec in V.primitive_vectors:
        total = total + lognorm2(vec, precision + extra)
    return total


def rootin_lhs(V: PointVariety, precision: int = DEFAULT_PRECISION) -> LogVal:
    """Sum over the points of ``log2 ||(1, zeta)||_2``."""
    extra = max(V.D - 1, 0).bit_length()
    total = LogVal.exact(0)
    for p in V.points:
        total = total + lognorm2((1, *p), precision + extra)
    return total


def chow_height_bracket(h_chow: LogVal, D: int, n: int, precision: int = DEFAULT_PRECISION):
    """Certified bracket for h(V) from the height of its Chow form.

    Returns ``(h_chow - 3 log2(n+1) D, h_chow + 3 log2(n+1) D)`` as LogVals.
    """
    if D < 1:
        raise ValueError("degree must be at least 1")
    slack = log2_interval(n + 1, precision).scale(3 * D)
    h_chow = LogVal.coerce(h_chow)
    return h_chow - slack, h_chow + slack
