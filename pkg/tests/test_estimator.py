from fractions import Fraction

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from zerodim.estimator import ShapeLemma
from zerodim.poly import MPoly, poly_eval
from zerodim.validation import check_points, check_precision, check_system
from zerodim.variety import NotSeparatingError

X = [[0, 1], [2, 3], [Fraction(1, 2), 5]]


def test_params_and_clone():
    est = ShapeLemma(separating_form=(1, 2), precision=80)
    assert est.get_params() == {"separating_form": (1, 2), "precision": 80}
    c = clone(est)
    assert c.get_params() == est.get_params() and c is not est
    est.set_params(precision=32)
    assert est.precision == 32


def test_fit_sets_attributes():
    est = ShapeLemma().fit(X)
    assert est.n_features_in_ == 2
    assert len(est.basis_.exponents) == 3
    assert est.rur_.D == 3
    for g in est.presentation_:
        for z in est.variety_.points:
            assert poly_eval(g, z) == 0


def test_transform_before_fit():
    with pytest.raises(NotFittedError):
        ShapeLemma().transform([MPoly.var(2, 0)])


def test_fit_transform_reproduces_coordinates():
    est = ShapeLemma()
    rows = est.fit_transform(X)
    B = est.basis_.exponents
    for i, row in enumerate(rows):
        rem = MPoly(2, dict(zip(B, row)))
        for z in est.variety_.points:
            assert poly_eval(rem, z) == z[i]


def test_transform_matches_remainders():
    est = ShapeLemma().fit(X)
    p = MPoly.var(2, 0) ** 3 - 7 * MPoly.var(2, 1)
    [row] = est.transform(p)
    assert row == est.remainders([p])[0].coefficients
    assert all(isinstance(c, Fraction) for c in row)


def test_numpy_object_input():
    arr = np.array([[1, 2], [3, 4]], dtype=object)
    assert ShapeLemma().fit(arr).n_features_in_ == 2


def test_bad_separating_form():
    with pytest.raises(NotSeparatingError):
        ShapeLemma(separating_form=(1, 1)).fit([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        ShapeLemma(separating_form=(1,)).fit(X)


def test_validation_helpers():
    with pytest.raises(ValueError):
        check_points([[0.5, 1]])
    with pytest.raises(ValueError):
        check_points([[1, 2], [3]])
    with pytest.raises(ValueError):
        check_points([])
    assert check_points([["1/2"]]).points == ((Fraction(1, 2),),)
    with pytest.raises(ValueError):
        check_points([[1, 2]], n_features=3)
    with pytest.raises(ValueError):
        check_system([MPoly(1, {})])
    with pytest.raises(ValueError):
        check_system([MPoly.var(1, 0).scale(Fraction(1, 2))])
    with pytest.raises(TypeError):
        check_system(["x1"])
    with pytest.raises(TypeError):
        check_precision(True)
    with pytest.raises(ValueError):
        check_precision(0)
