from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_leap
from gregdow import DataPoint, DegenerateFitError, DateRangeError, LinearModel
from gregdow.regression import (
    day_of_year_dataset,
    error_table,
    figure_points,
    initial_day_of_year_model,
    leap_year_dataset,
    ols_fit,
    pearson_r,
    pearson_r_squared,
    revised_day_of_year_model,
    round_half_up,
    windowed_intercept_scan,
)

NON_LEAP_FIRSTS = [1, 32, 60, 91, 121, 152, 182, 213, 244, 274, 305, 335]


def normal_equations(points):
    """Solve the 2x2 normal equations by Cramer's rule, independently of ols_fit."""
    n = len(points)
    sx = sum(F(x) for x, _ in points)
    sy = sum(F(y) for _, y in points)
    sxx = sum(F(x) * x for x, _ in points)
    sxy = sum(F(x) * y for x, y in points)
    det = n * sxx - sx * sx
    return (n * sxy - sx * sy) / det, (sxx * sy - sx * sxy) / det


def test_identity_line():
    assert ols_fit([(0, 0), (1, 1), (2, 2)]) == LinearModel(F(1), F(0))


def test_leap_model_1200_1300():
    assert ols_fit(leap_year_dataset(1200, 1300)) == LinearModel(F(1, 4), F(-300))


def test_initial_day_of_year_model():
    model = initial_day_of_year_model()
    assert model.slope == F(4350, 143)
    # -665/22, not -655/22: only this value reproduces the initial error
    # table (month 1 predicts 0.2), and the normal equations agree
    assert model.intercept == F(-665, 22)
    assert (model.slope, model.intercept) == normal_equations(day_of_year_dataset())


def test_revised_day_of_year_model():
    model = revised_day_of_year_model()
    assert model == LinearModel(F(1009, 33), F(-1739, 55))
    assert (model.slope, model.intercept) == normal_equations(day_of_year_dataset()[2:])


def test_ols_agrees_with_numpy_lstsq():
    pts = day_of_year_dataset()
    x = np.array([p.x for p in pts], float)
    y = np.array([p.y for p in pts], float)
    slope, intercept = np.linalg.lstsq(np.c_[x, np.ones_like(x)], y, rcond=None)[0]
    model = initial_day_of_year_model()
    assert float(model.slope) == pytest.approx(slope, rel=1e-12)
    assert float(model.intercept) == pytest.approx(intercept, rel=1e-12)


@pytest.mark.parametrize("points", [[], [(1, 2)], [(3, 1), (3, 5), (3, 7)]])
def test_degenerate_fit(points):
    with pytest.raises(DegenerateFitError):
        ols_fit(points)


@given(
    st.fractions(max_denominator=50),
    st.fractions(max_denominator=50),
    st.lists(st.integers(-1000, 1000), min_size=2, unique=True),
)
def test_collinear_points_recovered_exactly(slope, intercept, xs):
    fitted = ols_fit([(x, slope * x + intercept) for x in xs])
    assert fitted == LinearModel(slope, intercept)


def test_pearson():
    assert pearson_r(leap_year_dataset(1200, 1300)) == 1
    assert isinstance(pearson_r(leap_year_dataset(1200, 1300)), F)
    assert pearson_r([(0, 0), (1, 2), (2, 4)]) == 1
    assert pearson_r([(0, 0), (1, -2), (2, -4)]) == -1
    assert pearson_r_squared([(0, 0), (1, 1), (2, 0)]) == 0
    assert pearson_r([(0, 0), (1, 1), (2, 0)]) == 0


def test_pearson_irrational_falls_back_to_float():
    pts = [(0, 0), (1, 1), (2, 3)]
    r = pearson_r(pts)
    assert isinstance(r, float)
    assert r == pytest.approx(np.corrcoef([0, 1, 2], [0, 1, 3])[0, 1])


def test_pearson_degenerate():
    with pytest.raises(DegenerateFitError):
        pearson_r([(0, 1), (1, 1), (2, 1)])


def test_leap_year_dataset():
    assert leap_year_dataset(1200, 1204) == [DataPoint(1200, 0), DataPoint(1204, 1)]
    assert leap_year_dataset(1296, 1304) == [DataPoint(1296, 24), DataPoint(1304, 25)]
    assert leap_year_dataset(1576, 1582)[-1] == DataPoint(1580, 92)
    with pytest.raises(DateRangeError):
        leap_year_dataset(1199, 1300)
    with pytest.raises(ValueError):
        leap_year_dataset(1300, 1200)


def test_leap_index_is_cumulative_count():
    running = -1
    expected = []
    for year in range(1200, 2401):
        if brute_leap(year):
            running += 1
            expected.append((year, running))
    assert leap_year_dataset(1200, 2400) == expected


def test_day_of_year_dataset():
    assert [p.y for p in day_of_year_dataset()] == NON_LEAP_FIRSTS
    assert [p.x for p in day_of_year_dataset()] == list(range(1, 13))
    assert day_of_year_dataset(leap=True)[2] == DataPoint(3, 61)
    assert day_of_year_dataset(leap=True)[1] == DataPoint(2, 32)


@pytest.mark.parametrize(
    "x, expected", [(F(59, 2), 30), (F(-1, 2), 0), (F(601, 10), 60), (F(1, 2), 1), (F(-3, 2), -1), (7, 7)]
)
def test_round_half_up(x, expected):
    assert round_half_up(x) == expected


def test_error_table_rows():
    initial = error_table(initial_day_of_year_model(), day_of_year_dataset())
    assert (initial[0].predicted_rounded, initial[0].rounded_error) == (0, 1)
    revised = error_table(revised_day_of_year_model(), day_of_year_dataset())
    assert (revised[1].predicted_rounded, revised[1].rounded_error) == (30, 2)
    assert revised[2].predicted == F(3306, 55)
    for row in initial + revised:
        assert row.error == row.observed - row.predicted
        assert row.rounded_error == row.observed - row.predicted_rounded
        assert row.predicted_rounded == round_half_up(row.predicted)


def test_revised_residuals_match_correction_term():
    model = revised_day_of_year_model()
    for leap in (False, True):
        for m, first in day_of_year_dataset(leap):
            residual = first - round_half_up(model.predict(m) + leap)
            assert residual == ((2 - leap) if m <= 2 else 0)


@pytest.mark.parametrize("window, intercept", [((1668, 1696), -303), ((1704, 1732), -304), ((1200, 1296), -300)])
def test_windowed_intercepts(window, intercept):
    assert windowed_intercept_scan(*window) == intercept
    assert ols_fit(leap_year_dataset(*window)).slope == F(1, 4)


def test_window_across_1700_is_not_a_perfect_line():
    assert pearson_r_squared(leap_year_dataset(1668, 1732)) < 1


def test_window_with_one_leap_year_is_degenerate():
    with pytest.raises(DegenerateFitError):
        windowed_intercept_scan(1697, 1705)


def test_figure_points():
    years = {p.x for p in figure_points(4)}
    assert min(years) == 1584 and max(years) == 2148
    assert not years & {1700, 1800, 1900, 2100}
    assert {1600, 2000} <= years
    assert figure_points(1)[-1] == DataPoint(1296, 24)
    assert len(figure_points(5)) == 12
    with pytest.raises(ValueError):
        figure_points(6)
