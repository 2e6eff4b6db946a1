"""Exact arithmetic toolkit for zero-dimensional polynomial systems over Q."""
from .bounds import SystemProfile, bound_report
from .estimator import ShapeLemma
from .heights import PointVariety, variety_height
from .identities import nss_search, perron_search, solve_triangular, verify_identity
from .logval import LogVal, log2_interval
from .parsing import ParseError, parse_points, parse_poly, parse_system
from .poly import MPoly
from .variety import build_rur, chow_form, find_separating_form, monomial_basis, remainder

__version__ = "0.1.0"

__all__ = [
    "LogVal",
    "MPoly",
    "ParseError",
    "PointVariety",
    "ShapeLemma",
    "SystemProfile",
    "bound_report",
    "build_rur",
    "chow_form",
    "find_separating_form",
    "log2_interval",
    "monomial_basis",
    "nss_search",
    "parse_points",
    "parse_poly",
    "parse_system",
    "perron_search",
    "remainder",
    "solve_triangular",
    "variety_height",
    "verify_identity",
]
