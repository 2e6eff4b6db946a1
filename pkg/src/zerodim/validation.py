"""Input validation helpers shared by the estimator, the harness and the CLI."""
from __future__ import annotations

from numbers import Integral
from typing import Sequence

from .heights import PointVariety
from .poly import MPoly, as_scalar


def check_points(X, n_features=None) -> PointVariety:
    """Coerce a 2-d collection of exact numbers into a :class:`PointVariety`.

    Rows are points. Entries may be ints, Fractions or ``"a/b"`` strings;
    floats are rejected because they are not exact.
    """
    if isinstance(X, PointVariety):
        pv = X
    else:
        if hasattr(X, "tolist"):
            X = X.tolist()
        rows = [list(r) if not isinstance(r, (str, bytes)) else None for r in X]
        if not rows:
            raise ValueError("at least one point is required")
        if any(r is None for r in rows):
            raise ValueError("points must be sequences of coordinates")
        width = len(rows[0])
        if width == 0:
            raise ValueError("points need at least one coordinate")
        if any(len(r) != width for r in rows):
            raise ValueError("all points must have the same number of coordinates")
        try:
            pts = tuple(tuple(as_scalar(v) for v in r) for r in rows)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"invalid coordinate: {exc}") from exc
        pv = PointVariety(width, pts)
    if n_features is not None and pv.n != n_features:
        raise ValueError(f"expected {n_features} coordinates per point, got {pv.n}")
    return pv


def check_system(polys: Sequence[MPoly], integer: bool = True, nvars=None) -> list[MPoly]:
    """A nonempty list of nonzero polynomials sharing one ring."""
    polys = list(polys)
    if not polys:
        raise ValueError("empty system")
    for k, f in enumerate(polys, 1):
        if not isinstance(f, MPoly):
            raise TypeError(f"polynomial {k} is not an MPoly")
    n = polys[0].nvars if nvars is None else nvars
    out = []
    for k, f in enumerate(polys, 1):
        if f.nvars < n:
            f = f.extend(n)
        if f.nvars != n:
            raise ValueError(f"polynomial {k} has {f.nvars} variables, expected {n}")
        if not f:
            raise ValueError(f"polynomial {k} is zero")
        if integer and not f.is_integer():
            raise ValueError(f"polynomial {k} has non-integer coefficients")
        out.append(f)
    return out


def check_precision(precision) -> int:
    if isinstance(precision, bool) or not isinstance(precision, Integral):
        raise TypeError("precision must be an integer number of bits")
    precision = int(precision)
    if precision < 1:
        raise ValueError("precision must be at least 1 bit")
    return precision
