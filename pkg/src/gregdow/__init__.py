"""Gregorian day of the week from truncated linear regression models."""
from .core import (
    EPOCH,
    MAX_DATE,
    Date,
    EpochConstants,
    FormulaTerms,
    Weekday,
    correction_term,
    day_of_week,
    day_of_week_simplified,
    day_of_year,
    formula_terms,
    is_leap_year,
    leap_years_since_epoch,
    month_length,
)
from .exceptions import DateError, DateParseError, DateRangeError, DegenerateFitError
from .oracles import OracleId, days_since_epoch, iterative_day_of_week, zeller_day_of_week
from .regression import (
    DataPoint,
    ErrorTableRow,
    LinearModel,
    day_of_year_dataset,
    error_table,
    leap_year_dataset,
    ols_fit,
    pearson_r,
    pearson_r_squared,
    round_half_up,
    windowed_intercept_scan,
)
from .verify import DateRange, Mismatch, VerificationReport, next_day, verify_range
from ._validation import parse_iso_date

__version__ = "0.1.0"
