"""Regression-derived Gregorian day-of-week formula.

Every term is evaluated with integer arithmetic only.  Rational floor
arguments are brought over a common denominator so that Python's floored
``//`` gives the mathematical floor, including for negative arguments.

Weekdays are numbered Monday=0 .. Sunday=6; months January=1 .. December=12.
"""
from __future__ import annotations

import enum
from collections import namedtuple
from dataclasses import dataclass

from .exceptions import DateError, DateRangeError

MIN_YEAR = 1582
MAX_YEAR = 9999
# back-dated leap years are needed by the regression datasets
MIN_LEAP_YEAR = 1200

_MONTH_LENGTHS = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)


class Weekday(enum.IntEnum):
    MONDAY = 0
    TUESDAY = 1
    WEDNESDAY = 2
    THURSDAY = 3
    FRIDAY = 4
    SATURDAY = 5
    SUNDAY = 6

    @property
    def label(self) -> str:
        return f"{self.name.capitalize()} ({self.value})"


class Date(namedtuple("_Date", "year month day")):
    """A validated Gregorian date in ``[1582-10-15, 9999-12-31]``.

    Instances are plain tuples, so they order and hash like ``(y, m, d)``.
    """

    __slots__ = ()

    def __new__(cls, year: int, month: int, day: int) -> "Date":
        for name, value in (("year", year), ("month", month), ("day", day)):
            if isinstance(value, bool) or not isinstance(value, int):
                raise DateError(f"{name} must be an integer, got {value!r}")
        if not 1 <= month <= 12:
            raise DateError(f"month {month} not in 1..12")
        if not MIN_YEAR <= year <= MAX_YEAR:
            raise DateRangeError(f"year {year} outside {MIN_YEAR}..{MAX_YEAR}")
        length = _MONTH_LENGTHS[month - 1] + (month == 2 and _leap(year))
        if not 1 <= day <= length:
            raise DateError(f"day {day} not in 1..{length} for {year:04d}-{month:02d}")
        if (year, month, day) < (1582, 10, 15):
            raise DateRangeError(
                f"{year:04d}-{month:02d}-{day:02d} precedes the Gregorian epoch 1582-10-15"
            )
        return super().__new__(cls, year, month, day)

    def isoformat(self) -> str:
        return f"{self.year:04d}-{self.month:02d}-{self.day:02d}"

    def __str__(self) -> str:
        return self.isoformat()

    def __repr__(self) -> str:
        return f"Date({self.year}, {self.month}, {self.day})"


@dataclass(frozen=True)
class EpochConstants:
    weekday: Weekday
    year: int
    date: Date


EPOCH = EpochConstants(weekday=Weekday.FRIDAY, year=1582, date=Date(1582, 10, 15))
MAX_DATE = Date(9999, 12, 31)


# Unchecked kernels.  The public functions below validate and delegate here;
# the verification sweep calls these directly on raw integers.

def _leap(y):
    return 1 if y % 4 == 0 and (y % 100 != 0 or y % 400 == 0) else 0


def _leap_count(y, leap):
    return y // 4 - y // 100 + y // 400 - 383 - leap


def _first_of_month(m, leap):
    # floor(1009m/33 - 3423/110 + leap) over denominator 330
    return (10090 * m - 10269 + 330 * leap) // 330


def _correction(m):
    # floor(6/5 - m/10) == floor((12 - m) / 10)
    return (12 - m) // 10


def _doy(m, d, leap):
    return _first_of_month(m, leap) + (2 - leap) * _correction(m) + d - 1


def running_sum_kernel(y, m, d):
    leap = _leap(y)
    return 4 + 365 * (y - 1582) - 1 + _leap_count(y, leap) + _doy(m, d, leap)


def weekday_kernel(y, m, d):
    return running_sum_kernel(y, m, d) % 7


def simplified_sum_kernel(y, m, d):
    leap = _leap(y)
    return (
        365 * y - 577811
        + y // 4 - y // 100 + y // 400 - leap
        + (10090 * m - 10269 + 330 * leap) // 330
        + (2 - leap) * ((12 - m) // 10)
        + d
    )


def simplified_weekday_kernel(y, m, d):
    return simplified_sum_kernel(y, m, d) % 7


def _check_year(y: int, lo: int) -> None:
    if isinstance(y, bool) or not isinstance(y, int):
        raise DateError(f"year must be an integer, got {y!r}")
    if not lo <= y <= MAX_YEAR:
        raise DateRangeError(f"year {y} outside {lo}..{MAX_YEAR}")


def _check_month(m: int) -> None:
    if isinstance(m, bool) or not isinstance(m, int) or not 1 <= m <= 12:
        raise DateError(f"month must be an integer in 1..12, got {m!r}")


def as_date(value) -> Date:
    """Coerce a ``Date``, ``(y, m, d)`` sequence or ``datetime.date``."""
    if isinstance(value, Date):
        return value
    if hasattr(value, "year") and hasattr(value, "month") and hasattr(value, "day"):
        return Date(value.year, value.month, value.day)
    try:
        y, m, d = value
    except (TypeError, ValueError):
        raise DateError(f"cannot interpret {value!r} as a date") from None
    return Date(y, m, d)


def is_leap_year(y: int) -> int:
    """Return 1 for a Gregorian leap year, else 0 (back-dated to 1200)."""
    _check_year(y, MIN_LEAP_YEAR)
    return _leap(y)


def month_length(y: int, m: int) -> int:
    _check_year(y, MIN_LEAP_YEAR)
    _check_month(m)
    return _MONTH_LENGTHS[m - 1] + (m == 2 and _leap(y))


def leap_years_since_epoch(y: int) -> int:
    """Leap years strictly after 1582 and strictly before ``y``.

    A leap ``y`` itself is excluded; its extra day is picked up by the
    day-of-year term instead.
    """
    _check_year(y, MIN_YEAR)
    return _leap_count(y, _leap(y))


def correction_term(m: int) -> int:
    """1 for January and February, 0 for every other month."""
    _check_month(m)
    return _correction(m)


def day_of_year(date) -> int:
    date = as_date(date)
    return _doy(date.month, date.day, _leap(date.year))


def day_of_week(date) -> Weekday:
    date = as_date(date)
    return Weekday(weekday_kernel(*date))


def day_of_week_simplified(date) -> Weekday:
    date = as_date(date)
    return Weekday(simplified_weekday_kernel(*date))


@dataclass(frozen=True)
class FormulaTerms:
    """Intermediate quantities of one evaluation of the weekday formula."""

    date: Date
    leap: int
    leap_count: int
    day_of_year: int
    year_offset: int
    running_sum: int
    weekday: Weekday


def formula_terms(date) -> FormulaTerms:
    date = as_date(date)
    y, m, d = date
    leap = _leap(y)
    count = _leap_count(y, leap)
    doy = _doy(m, d, leap)
    offset = EPOCH.weekday + 365 * (y - EPOCH.year) - 1
    total = offset + count + doy
    return FormulaTerms(
        date=date,
        leap=leap,
        leap_count=count,
        day_of_year=doy,
        year_offset=offset,
        running_sum=total,
        weekday=Weekday(total % 7),
    )
