"""scikit-learn compatible wrappers.

``ExactLinearRegression`` is the OLS engine behind the regression module
with the usual ``fit``/``predict`` surface; ``WeekdayTransformer`` maps
``(year, month, day)`` rows to weekday numbers inside a pipeline.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import core, oracles
from ._validation import check_date_array, check_exact_xy
from .exceptions import DegenerateFitError
from .regression import DataPoint, LinearModel, ols_fit


class ExactLinearRegression(RegressorMixin, BaseEstimator):
    """Single-feature least squares in exact rational arithmetic.

    Parameters
    ----------
    fit_intercept : bool, default=True
        When False the line is forced through the origin.

    Attributes
    ----------
    coef_ : Fraction
    intercept_ : Fraction
    """

    def __init__(self, fit_intercept=True):
        self.fit_intercept = fit_intercept

    def fit(self, X, y):
        xs, ys = check_exact_xy(X, y)
        if self.fit_intercept:
            model = ols_fit(DataPoint(a, b) for a, b in zip(xs, ys))
        else:
            sxx = sum(Fraction(a) * a for a in xs)
            if sxx == 0:
                raise DegenerateFitError("all x values are zero")
            model = LinearModel(sum(Fraction(a) * b for a, b in zip(xs, ys)) / sxx, Fraction(0))
        self.coef_ = model.slope
        self.intercept_ = model.intercept
        self.n_features_in_ = 1
        return self

    @property
    def model_(self) -> LinearModel:
        check_is_fitted(self)
        return LinearModel(self.coef_, self.intercept_)

    def predict(self, X):
        check_is_fitted(self)
        xs, _ = check_exact_xy(X, None)
        out = np.empty(len(xs), dtype=object)
        out[:] = [self.coef_ * x + self.intercept_ for x in xs]
        return out

    def score(self, X, y, sample_weight=None):
        """Exact coefficient of determination, as a Fraction."""
        if sample_weight is not None:
            raise NotImplementedError("sample weights are not supported")
        _, ys = check_exact_xy(X, y)
        pred = self.predict(X)
        mean = Fraction(sum(ys), len(ys))
        ss_res = sum((a - b) ** 2 for a, b in zip(ys, pred))
        ss_tot = sum((a - mean) ** 2 for a in ys)
        if ss_tot == 0:
            return Fraction(1) if ss_res == 0 else Fraction(0)
        return 1 - Fraction(ss_res) / ss_tot


_METHODS = {
    "formula": core.weekday_kernel,
    "simplified": core.simplified_weekday_kernel,
    "zeller": oracles.zeller_kernel,
}


class WeekdayTransformer(TransformerMixin, BaseEstimator):
    """Stateless transformer from ``(year, month, day)`` rows to weekdays 0..6.

    Parameters
    ----------
    method : {"formula", "simplified", "zeller"}, default="formula"
    """

    def __init__(self, method="formula"):
        self.method = method

    def fit(self, X, y=None):
        if self.method not in _METHODS:
            raise ValueError(f"method must be one of {sorted(_METHODS)}, got {self.method!r}")
        check_date_array(X)
        self.n_features_in_ = 3
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        kernel = _METHODS[self.method]
        return np.array([kernel(*d) for d in check_date_array(X)], dtype=np.int64)
