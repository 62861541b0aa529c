"""CSV renderings of the regression datasets and error tables.

Plain comma-separated text with a header row.  Exact values are written
as ``num/den``; decimal columns are a display rounding (half up) only.
"""
from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import Iterable, List, TextIO

from .regression import (
    DataPoint,
    ErrorTableRow,
    LinearModel,
    day_of_year_dataset,
    error_table,
    figure_points,
    initial_day_of_year_model,
    leap_year_dataset,
    revised_day_of_year_model,
    round_half_up,
)

LEAP_HEADER = ["year", "leap_index"]
DOY_HEADER = ["month", "day_of_year"]
ERROR_TABLE_HEADER = [
    "month", "observed", "predicted_exact", "predicted_decimal",
    "error_decimal", "predicted_rounded", "rounded_error",
]
FIGURE5_HEADER = ["month", "day_of_year", "predicted_exact", "predicted_decimal"]

DATASETS = ("leap-years", "day-of-year", "error-table-initial", "error-table-revised", "figure")


def format_decimal(value, places: int = 1) -> str:
    scale = 10 ** places
    scaled = round_half_up(Fraction(value) * scale)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), scale)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


def format_exact(value) -> str:
    return str(Fraction(value))


def _write(header: List[str], rows: Iterable[Iterable], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def write_points(points: Iterable[DataPoint], header: List[str], out: TextIO) -> None:
    _write(header, ([p.x, p.y] for p in points), out)


def write_error_table(rows: Iterable[ErrorTableRow], out: TextIO, places: int = 1) -> None:
    _write(
        ERROR_TABLE_HEADER,
        (
            [
                r.month, r.observed, format_exact(r.predicted),
                format_decimal(r.predicted, places), format_decimal(r.error, places),
                r.predicted_rounded, r.rounded_error,
            ]
            for r in rows
        ),
        out,
    )


def read_error_table(src: TextIO) -> List[ErrorTableRow]:
    """Parse an error-table CSV back into rows, recomputing the exact error."""
    reader = csv.DictReader(src)
    if reader.fieldnames != ERROR_TABLE_HEADER:
        raise ValueError(f"unexpected header {reader.fieldnames!r}")
    rows = []
    for rec in reader:
        observed = int(rec["observed"])
        predicted = Fraction(rec["predicted_exact"])
        rows.append(
            ErrorTableRow(
                month=int(rec["month"]),
                observed=observed,
                predicted=predicted,
                error=observed - predicted,
                predicted_rounded=int(rec["predicted_rounded"]),
                rounded_error=int(rec["rounded_error"]),
            )
        )
    return rows


def write_figure(figure: int, out: TextIO, places: int = 1) -> None:
    points = figure_points(figure)
    if figure != 5:
        write_points(points, LEAP_HEADER, out)
        return
    model: LinearModel = initial_day_of_year_model()
    _write(
        FIGURE5_HEADER,
        (
            [p.x, p.y, format_exact(model.predict(p.x)), format_decimal(model.predict(p.x), places)]
            for p in points
        ),
        out,
    )


def write_dataset(name: str, out: TextIO, *, figure: int = None, leap: bool = False,
                  places: int = 1) -> None:
    if name == "leap-years":
        write_points(leap_year_dataset(1200, 9999), LEAP_HEADER, out)
    elif name == "day-of-year":
        write_points(day_of_year_dataset(leap), DOY_HEADER, out)
    elif name == "error-table-initial":
        write_error_table(error_table(initial_day_of_year_model(), day_of_year_dataset()), out, places)
    elif name == "error-table-revised":
        write_error_table(error_table(revised_day_of_year_model(), day_of_year_dataset()), out, places)
    elif name == "figure":
        if figure is None:
            raise ValueError("the figure dataset needs a figure number 1..5")
        write_figure(figure, out, places)
    else:
        raise ValueError(f"unknown dataset {name!r}; expected one of {', '.join(DATASETS)}")


def render_dataset(name: str, **kwargs) -> str:
    buf = io.StringIO()
    write_dataset(name, buf, **kwargs)
    return buf.getvalue()
