"""Independent weekday references used to check the formula.

Neither oracle shares arithmetic with the formula: Zeller's congruence is a
different closed form, and the counting oracle walks the month-length table.
"""
from __future__ import annotations

import enum

from .core import EPOCH, Weekday, as_date, month_length


class OracleId(str, enum.Enum):
    ZELLER = "zeller"
    ITERATIVE = "iterative"


def zeller_kernel(y, m, d):
    if m < 3:
        m += 12
        y -= 1
    k, j = y % 100, y // 100
    h = (d + 13 * (m + 1) // 5 + k + k // 4 + j // 4 + 5 * j) % 7
    # Zeller numbers Saturday as 0
    return (h + 5) % 7


def zeller_day_of_week(date) -> Weekday:
    """Gregorian Zeller's congruence, remapped to Monday=0."""
    return Weekday(zeller_kernel(*as_date(date)))


def _count_by_month(y, m, d):
    cy, cm, cd = EPOCH.date
    count = 0
    while (cy, cm) != (y, m):
        count += month_length(cy, cm) - cd + 1
        cd = 1
        if cm == 12:
            cy, cm = cy + 1, 1
        else:
            cm += 1
    return count + d - cd


def _count_by_day(y, m, d):
    cy, cm, cd = EPOCH.date
    count = 0
    while (cy, cm, cd) != (y, m, d):
        count += 1
        if cd < month_length(cy, cm):
            cd += 1
        elif cm < 12:
            cm, cd = cm + 1, 1
        else:
            cy, cm, cd = cy + 1, 1, 1
    return count


def days_since_epoch(date, *, by_day: bool = False) -> int:
    """Days elapsed from 1582-10-15 to ``date`` by explicit accumulation.

    Whole months are summed by default; ``by_day=True`` steps one day at a
    time instead (slow, a few seconds near 9999, kept for auditing).
    """
    date = as_date(date)
    if by_day:
        return _count_by_day(*date)
    return _count_by_month(*date)


def iterative_day_of_week(date, *, by_day: bool = False) -> Weekday:
    return Weekday((EPOCH.weekday + days_since_epoch(date, by_day=by_day)) % 7)


ORACLES = {
    OracleId.ZELLER: zeller_day_of_week,
    OracleId.ITERATIVE: iterative_day_of_week,
}
