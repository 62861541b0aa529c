"""Exhaustive differential verification of the weekday formula.

Both the full and the simplified formula are compared against each selected
oracle for every date of a range.  The range is cut into contiguous blocks
of years; blocks are independent and may run in worker processes, and their
results are merged in date order so the report never depends on how the
work was split.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from . import core, oracles
from .core import EPOCH, MAX_DATE, Date, Weekday, as_date, month_length
from .exceptions import DateError, DateRangeError
from .oracles import OracleId

DEFAULT_MAX_MISMATCHES = 100
FORMULAS = ("full", "simplified")


def next_day(date) -> Date:
    date = as_date(date)
    y, m, d = date
    if d < month_length(y, m):
        return Date(y, m, d + 1)
    if m < 12:
        return Date(y, m + 1, 1)
    if y >= MAX_DATE.year:
        raise DateRangeError(f"{date} has no successor inside the supported range")
    return Date(y + 1, 1, 1)


@dataclass(frozen=True)
class DateRange:
    start: Date
    end: Date

    def __post_init__(self):
        object.__setattr__(self, "start", as_date(self.start))
        object.__setattr__(self, "end", as_date(self.end))
        if self.start > self.end:
            raise DateError(f"range start {self.start} is after end {self.end}")

    @classmethod
    def full(cls) -> "DateRange":
        return cls(EPOCH.date, MAX_DATE)

    def __iter__(self) -> Iterator[Date]:
        date = self.start
        yield date
        while date != self.end:
            date = next_day(date)
            yield date


@dataclass(frozen=True, order=True)
class Mismatch:
    date: Date
    formula: str
    oracle: OracleId
    formula_weekday: Weekday
    oracle_weekday: Weekday


@dataclass
class VerificationReport:
    range: DateRange
    oracles: Tuple[OracleId, ...]
    dates_checked: int = 0
    mismatch_count: int = 0
    mismatches: List[Mismatch] = field(default_factory=list)
    # dates on which both formula variants matched the oracle
    agreement: Dict[OracleId, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.mismatch_count == 0

    def summary_lines(self) -> List[str]:
        lines = [
            f"range: {self.range.start} .. {self.range.end}",
            f"oracles: {', '.join(o.value for o in self.oracles)}",
            f"dates checked: {self.dates_checked}",
        ]
        for oracle in self.oracles:
            lines.append(f"agreement with {oracle.value}: {self.agreement.get(oracle, 0)}")
        lines.append(f"{self.mismatch_count} mismatches")
        for mm in self.mismatches:
            lines.append(
                f"  {mm.date} {mm.formula}={int(mm.formula_weekday)} "
                f"{mm.oracle.value}={int(mm.oracle_weekday)}"
            )
        if self.mismatch_count > len(self.mismatches):
            lines.append(f"  ... {self.mismatch_count - len(self.mismatches)} more")
        lines.append(f"elapsed: {self.elapsed:.2f}s")
        return lines


def _check_block(start: Tuple[int, int, int], end: Tuple[int, int, int],
                 oracle_ids: Tuple[OracleId, ...], cap: int):
    """Sweep one contiguous block; returns (count, mismatch count, sample, agreement)."""
    full = core.weekday_kernel
    simplified = core.simplified_weekday_kernel
    zeller = oracles.zeller_kernel
    use_zeller = OracleId.ZELLER in oracle_ids
    use_iter = OracleId.ITERATIVE in oracle_ids
    # the counting oracle is seeded once and then advanced one day per step
    elapsed_days = oracles.days_since_epoch(Date(*start)) if use_iter else 0
    epoch_weekday = int(EPOCH.weekday)

    checked = 0
    n_bad = 0
    sample: List[Mismatch] = []
    agree = {o: 0 for o in oracle_ids}
    y, m, d = start
    ey, em, ed = end
    while True:
        last_month = (y, m) == (ey, em)
        stop_day = ed if last_month else month_length(y, m)
        for day in range(d, stop_day + 1):
            w_full = full(y, m, day)
            w_simp = simplified(y, m, day)
            expected = []
            if use_zeller:
                expected.append((OracleId.ZELLER, zeller(y, m, day)))
            if use_iter:
                expected.append((OracleId.ITERATIVE, (epoch_weekday + elapsed_days) % 7))
                elapsed_days += 1
            for oracle, w in expected:
                if w_full == w and w_simp == w:
                    agree[oracle] += 1
                    continue
                for name, got in (("full", w_full), ("simplified", w_simp)):
                    if got != w:
                        n_bad += 1
                        if len(sample) < cap:
                            sample.append(Mismatch(Date(y, m, day), name, oracle,
                                                   Weekday(got), Weekday(w)))
            checked += 1
        if last_month:
            break
        d = 1
        if m == 12:
            y, m = y + 1, 1
        else:
            m += 1
    return checked, n_bad, sample, agree


def _blocks(date_range: DateRange, years_per_block: int):
    start, end = date_range.start, date_range.end
    y = start.year
    block_start = tuple(start)
    while True:
        stop_year = y + years_per_block - 1
        if stop_year >= end.year:
            yield block_start, tuple(end)
            return
        yield block_start, (stop_year, 12, 31)
        y = stop_year + 1
        block_start = (y, 1, 1)


def _normalize_oracles(selected) -> Tuple[OracleId, ...]:
    if selected is None or selected == "all":
        return tuple(OracleId)
    if isinstance(selected, (str, OracleId)):
        selected = [selected]
    chosen = {OracleId(s) for s in selected}
    if not chosen:
        raise ValueError("at least one oracle is required")
    return tuple(o for o in OracleId if o in chosen)


def verify_range(
    date_range: Optional[DateRange] = None,
    oracles_selected: Iterable = None,
    *,
    max_mismatches: int = DEFAULT_MAX_MISMATCHES,
    years_per_block: int = 500,
    workers: int = 1,
) -> VerificationReport:
    """Compare both formula variants with the selected oracles over a range.

    ``date_range`` defaults to the whole supported calendar and
    ``oracles_selected`` to every oracle.  At most ``max_mismatches`` samples
    are kept (earliest dates first); ``mismatch_count`` counts all of them.
    ``workers > 1`` sweeps the year blocks in a process pool.
    """
    if date_range is None:
        date_range = DateRange.full()
    if not isinstance(date_range, DateRange):
        date_range = DateRange(*date_range)
    if max_mismatches < 0:
        raise ValueError("max_mismatches must be non-negative")
    if years_per_block < 1:
        raise ValueError("years_per_block must be positive")
    oracle_ids = _normalize_oracles(oracles_selected)

    t0 = time.perf_counter()
    blocks = list(_blocks(date_range, years_per_block))
    args = [(s, e, oracle_ids, max_mismatches) for s, e in blocks]
    if workers > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_block, *zip(*args)))
    else:
        results = [_check_block(*a) for a in args]

    report = VerificationReport(range=date_range, oracles=oracle_ids,
                                agreement={o: 0 for o in oracle_ids})
    merged: List[Mismatch] = []
    for checked, n_bad, sample, agree in results:
        report.dates_checked += checked
        report.mismatch_count += n_bad
        merged.extend(sample)
        for oracle, count in agree.items():
            report.agreement[oracle] += count
    report.mismatches = sorted(merged)[:max_mismatches]
    report.elapsed = time.perf_counter() - t0
    return report
