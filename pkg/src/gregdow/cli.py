"""Command line front end: ``gregdow dow|explain|verify|fit|gen-data``.

Exit status is 0 on success, 1 when verification finds a mismatch and 2 on
any usage or input error.
"""
from __future__ import annotations

import sys

import click

from . import csvdata
from ._validation import parse_iso_date
from .core import EPOCH, MAX_DATE, MAX_YEAR, MIN_LEAP_YEAR, day_of_week, formula_terms
from .exceptions import DateError, DegenerateFitError
from .regression import (
    initial_day_of_year_model,
    leap_year_dataset,
    ols_fit,
    revised_day_of_year_model,
)
from .verify import DEFAULT_MAX_MISMATCHES, DateRange, verify_range


class IsoDate(click.ParamType):
    name = "YYYY-MM-DD"

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return parse_iso_date(value)
        except DateError as exc:
            self.fail(str(exc), param, ctx)


ISO_DATE = IsoDate()


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(package_name="gregdow")
def cli():
    """Gregorian day of the week via truncated linear regression."""


@cli.command()
@click.argument("date", type=ISO_DATE)
def dow(date):
    """Print the weekday of DATE as ``Name (number)``, Monday=0."""
    click.echo(day_of_week(date).label)


@cli.command()
@click.argument("date", type=ISO_DATE)
def explain(date):
    """Show every intermediate term of the formula for DATE."""
    t = formula_terms(date)
    y, m, d = date
    click.echo(f"date: {date}")
    click.echo(f"year = {y}, month = {m}, day = {d}")
    click.echo(f"leap year: {t.leap}")
    click.echo(f"leap years since epoch: {t.leap_count}")
    click.echo(f"day of year: {t.day_of_year}")
    click.echo(
        f"sum: {int(EPOCH.weekday)} + 365*({y} - {EPOCH.year}) - 1 + {t.leap_count} + {t.day_of_year}"
        f" = {t.running_sum}"
    )
    click.echo(f"{t.running_sum} mod 7 = {int(t.weekday)}")
    click.echo(f"weekday: {t.weekday.label}")


@cli.command()
@click.option("--from", "start", type=ISO_DATE, default=str(EPOCH.date), show_default=True)
@click.option("--to", "end", type=ISO_DATE, default=str(MAX_DATE), show_default=True)
@click.option("--oracle", type=click.Choice(["zeller", "iterative", "all"]), default="all",
              show_default=True)
@click.option("--max-mismatches", type=click.IntRange(min=0), default=DEFAULT_MAX_MISMATCHES,
              show_default=True, help="Number of mismatches listed in the report.")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
def verify(start, end, oracle, max_mismatches, workers):
    """Check the formula against the oracles for every date in a range."""
    try:
        date_range = DateRange(start, end)
    except DateError as exc:
        raise click.BadParameter(str(exc), param_hint="'--from'/'--to'")
    report = verify_range(date_range, oracle, max_mismatches=max_mismatches, workers=workers)
    for line in report.summary_lines():
        click.echo(line)
    sys.exit(0 if report.ok else 1)


FIT_DATASETS = ("leap1200", "doy", "doy-revised")


@cli.command()
@click.option("--dataset", type=click.Choice(FIT_DATASETS), required=True)
@click.option("--from", "start", type=click.IntRange(MIN_LEAP_YEAR, MAX_YEAR), default=None,
              help="First year of the window (leap1200 only).")
@click.option("--to", "end", type=click.IntRange(MIN_LEAP_YEAR, MAX_YEAR), default=None,
              help="Last year of the window (leap1200 only).")
def fit(dataset, start, end):
    """Fit an exact least-squares line and print its coefficients."""
    if dataset == "leap1200":
        start = 1200 if start is None else start
        end = 1300 if end is None else end
        if start > end:
            raise click.BadParameter(f"window {start}..{end} is empty", param_hint="'--from'/'--to'")
        try:
            model = ols_fit(leap_year_dataset(start, end))
        except DegenerateFitError as exc:
            raise click.BadParameter(str(exc), param_hint="'--from'/'--to'")
    else:
        if start is not None or end is not None:
            raise click.BadParameter("a year window only applies to leap1200",
                                     param_hint="'--from'/'--to'")
        model = initial_day_of_year_model() if dataset == "doy" else revised_day_of_year_model()
    click.echo(str(model))
    click.echo(
        f"decimal: slope {csvdata.format_decimal(model.slope, 6)}, "
        f"intercept {csvdata.format_decimal(model.intercept, 6)}"
    )


@cli.command("gen-data")
@click.option("--dataset", type=click.Choice(csvdata.DATASETS), required=True)
@click.option("--figure", type=click.IntRange(1, 5), default=None)
@click.option("--leap", is_flag=True, help="Use a leap year for the day-of-year dataset.")
@click.option("--decimals", type=click.IntRange(0, 12), default=1, show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False, allow_dash=True), required=True,
              help="Output CSV path, or - for stdout.")
def gen_data(dataset, figure, leap, decimals, out_path):
    """Write a dataset, error table or figure's plot data as CSV."""
    if dataset == "figure" and figure is None:
        raise click.BadParameter("--figure is required for the figure dataset", param_hint="'--figure'")
    text = csvdata.render_dataset(dataset, figure=figure, leap=leap, places=decimals)
    if out_path == "-":
        click.echo(text, nl=False)
        return
    try:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        click.echo(f"Error: cannot write {out_path}: {exc.strerror or exc}", err=True)
        sys.exit(2)


def main(argv=None):
    cli.main(args=argv, prog_name="gregdow")


if __name__ == "__main__":
    main()
