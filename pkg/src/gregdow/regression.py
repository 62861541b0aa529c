"""Exact simple linear regression and the datasets behind the formula.

All coefficients are :class:`fractions.Fraction`; nothing is ever rounded
except where a function explicitly says so.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Sequence, Union

from .core import MIN_LEAP_YEAR, _MONTH_LENGTHS, _check_year, _leap
from .exceptions import DegenerateFitError

Rational = Fraction
Number = Union[int, Fraction]


class DataPoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class LinearModel:
    slope: Fraction
    intercept: Fraction

    def predict(self, x: Number) -> Fraction:
        return self.slope * x + self.intercept

    def __str__(self) -> str:
        return f"slope {self.slope}, intercept {self.intercept}"


def _moments(points: Sequence[DataPoint]):
    n = len(points)
    if n < 2:
        raise DegenerateFitError(f"need at least 2 points, got {n}")
    mean_x = Fraction(sum(p.x for p in points), n)
    mean_y = Fraction(sum(p.y for p in points), n)
    sxx = sum((p.x - mean_x) ** 2 for p in points)
    syy = sum((p.y - mean_y) ** 2 for p in points)
    sxy = sum((p.x - mean_x) * (p.y - mean_y) for p in points)
    return mean_x, mean_y, Fraction(sxx), Fraction(syy), Fraction(sxy)


def ols_fit(points: Iterable[DataPoint]) -> LinearModel:
    """Ordinary least squares line ``y = slope * x + intercept``, exactly."""
    points = [DataPoint(*p) for p in points]
    mean_x, mean_y, sxx, _, sxy = _moments(points)
    if sxx == 0:
        raise DegenerateFitError("all x values are equal")
    slope = sxy / sxx
    return LinearModel(slope=slope, intercept=mean_y - slope * mean_x)


def pearson_r_squared(points: Iterable[DataPoint]) -> Fraction:
    points = [DataPoint(*p) for p in points]
    _, _, sxx, syy, sxy = _moments(points)
    if sxx == 0 or syy == 0:
        raise DegenerateFitError("correlation undefined for zero variance")
    return sxy * sxy / (sxx * syy)


def _exact_sqrt(q: Fraction):
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def pearson_r(points: Iterable[DataPoint]) -> Union[Fraction, float]:
    """Pearson correlation.

    Returned as an exact ``Fraction`` whenever ``r**2`` is the square of a
    rational (so a perfect positive line gives exactly ``Fraction(1)``);
    otherwise as the nearest float.
    """
    points = [DataPoint(*p) for p in points]
    _, _, _, _, sxy = _moments(points)
    r2 = pearson_r_squared(points)
    root = _exact_sqrt(r2)
    if root is None:
        root = math.sqrt(r2)
    return root if sxy >= 0 else -root


def round_half_up(x: Number) -> int:
    return math.floor(Fraction(x) + Fraction(1, 2))


def leap_year_dataset(start_year: int, end_year: int) -> List[DataPoint]:
    """Back-dated Gregorian leap years in ``[start_year, end_year]``.

    Each point is ``(year, index)`` where 1200 has index 0 and every later
    leap year increments the index by one.
    """
    _check_year(start_year, MIN_LEAP_YEAR)
    _check_year(end_year, MIN_LEAP_YEAR)
    if start_year > end_year:
        raise ValueError(f"start_year {start_year} after end_year {end_year}")
    index = sum(_leap(y) for y in range(MIN_LEAP_YEAR, start_year)) - 1
    points = []
    for year in range(start_year, end_year + 1):
        if _leap(year):
            index += 1
            points.append(DataPoint(year, index))
    return points


def day_of_year_dataset(leap: bool = False) -> List[DataPoint]:
    """``(month, ordinal of the 1st)`` for all twelve months."""
    points = []
    ordinal = 1
    for month, length in enumerate(_MONTH_LENGTHS, start=1):
        points.append(DataPoint(month, ordinal))
        ordinal += length + (month == 2 and bool(leap))
    return points


@dataclass(frozen=True)
class ErrorTableRow:
    month: int
    observed: int
    predicted: Fraction
    error: Fraction
    predicted_rounded: int
    rounded_error: int


def error_table(model: LinearModel, points: Iterable[DataPoint]) -> List[ErrorTableRow]:
    rows = []
    for x, observed in points:
        predicted = model.predict(x)
        rounded = round_half_up(predicted)
        rows.append(
            ErrorTableRow(
                month=x,
                observed=observed,
                predicted=predicted,
                error=observed - predicted,
                predicted_rounded=rounded,
                rounded_error=observed - rounded,
            )
        )
    return rows


def windowed_intercept_scan(window_start: int, window_end: int) -> Fraction:
    """Intercept of the OLS line through the leap years of an inclusive window."""
    return ols_fit(leap_year_dataset(window_start, window_end)).intercept


def initial_day_of_year_model() -> LinearModel:
    return ols_fit(day_of_year_dataset())


def revised_day_of_year_model() -> LinearModel:
    return ols_fit(p for p in day_of_year_dataset() if p.x >= 3)


# inclusive x-ranges of the plotted data
FIGURE_WINDOWS = {
    1: (1200, 1300),
    2: (1568, 1632),
    3: (1668, 1732),
    4: (1582, 2150),
    5: (1, 12),
}


def figure_points(figure: int) -> List[DataPoint]:
    if figure not in FIGURE_WINDOWS:
        raise ValueError(f"unknown figure {figure!r}; expected one of 1..5")
    if figure == 5:
        return day_of_year_dataset()
    return leap_year_dataset(*FIGURE_WINDOWS[figure])


__all__ = [
    "DataPoint",
    "ErrorTableRow",
    "FIGURE_WINDOWS",
    "LinearModel",
    "Rational",
    "day_of_year_dataset",
    "error_table",
    "figure_points",
    "initial_day_of_year_model",
    "leap_year_dataset",
    "ols_fit",
    "pearson_r",
    "pearson_r_squared",
    "revised_day_of_year_model",
    "round_half_up",
    "windowed_intercept_scan",
]
