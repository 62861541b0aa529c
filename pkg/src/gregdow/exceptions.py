"""Exception hierarchy shared by the calendar, regression and CLI layers."""


class DateError(ValueError):
    """Input that does not describe a valid supported date."""


class DateRangeError(DateError):
    """A year or date outside the supported envelope."""


class DateParseError(DateError):
    """Text that is not a strict ``YYYY-MM-DD`` date."""


class DegenerateFitError(ValueError):
    """Least squares is undefined for the given points."""
