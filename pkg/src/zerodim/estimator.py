"""scikit-learn style front end to the variety engine.

``fit`` takes the points of a finite variety; ``transform`` maps
polynomials to the coefficients of their remainders on the monomial basis.
"""
from __future__ import annotations

from fractions import Fraction

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .heights import variety_height
from .poly import MPoly
from .validation import check_points, check_precision, check_system
from .variety import (
    NotSeparatingError,
    build_rur,
    chow_form,
    find_separating_form,
    ideal_presentation,
    is_separating,
    monomial_basis,
    remainder,
    umap,
)


class ShapeLemma(BaseEstimator, TransformerMixin):
    """Rational univariate representation of a finite set of rational points.

    Parameters
    ----------
    separating_form : sequence of int, optional
        Integer vector ``u`` of the linear form ``u . x``. By default the
        first separating vector of the standard grid is used.
    precision : int
        Bits of precision for the height brackets stored after fitting.
    """

    def __init__(self, separating_form=None, precision=64):
        self.separating_form = separating_form
        self.precision = precision

    def fit(self, X, y=None):
        """Build the Chow form, RUR, monomial basis and presentation of ``X``."""
        precision = check_precision(self.precision)
        V = check_points(X)
        if self.separating_form is None:
            u = find_separating_form(V)
        else:
            u = tuple(int(v) for v in self.separating_form)
            if len(u) != V.n:
                raise ValueError(f"separating_form must have {V.n} entries")
            if not is_separating(V, u):
                raise NotSeparatingError("omega_0 not squarefree")
        self.variety_ = V
        self.chow_form_ = chow_form(V)
        self.separating_form_ = u
        self.rur_ = build_rur(V, u, self.chow_form_)
        self.basis_ = monomial_basis(V)
        self.presentation_ = ideal_presentation(V, self.rur_)
        self.height_ = variety_height(V, precision)
        self.n_features_in_ = V.n
        return self

    def _polys(self, polys):
        if isinstance(polys, MPoly):
            polys = [polys]
        return check_system(polys, integer=False, nvars=self.n_features_in_)

    def remainders(self, polys):
        """Full :class:`~zerodim.variety.Remainder` records for each polynomial."""
        check_is_fitted(self)
        return [remainder(self.variety_, self.rur_, self.basis_, p) for p in self._polys(polys)]

    def transform(self, polys):
        """Remainder coefficients on ``basis_`` as lists of Fractions, one row per polynomial."""
        return [[Fraction(c) for c in r.coefficients] for r in self.remainders(polys)]

    def umap(self, polys):
        """Coefficients of ``omega_0' * phi(p) mod omega_0`` for each polynomial."""
        check_is_fitted(self)
        return [umap(self.rur_, p) for p in self._polys(polys)]

    def fit_transform(self, X, y=None, polys=None):
        """Fit on ``X`` and reduce ``polys`` (defaults to the coordinate functions)."""
        self.fit(X)
        if polys is None:
            n = self.n_features_in_
            polys = [MPoly.var(n, i) for i in range(n)]
        return self.transform(polys)
