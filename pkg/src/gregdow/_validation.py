"""Input validation helpers shared by the estimators and the CLI."""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Integral, Rational

import numpy as np

from .core import Date
from .exceptions import DateError, DateParseError

_ISO_DATE = re.compile(r"([0-9]{4})-([0-9]{2})-([0-9]{2})")


def parse_iso_date(text: str) -> Date:
    """Parse strict ``YYYY-MM-DD`` (zero padded, hyphenated) into a Date."""
    match = _ISO_DATE.fullmatch(text) if isinstance(text, str) else None
    if match is None:
        raise DateParseError(f"expected YYYY-MM-DD, got {text!r}")
    return Date(*(int(part) for part in match.groups()))


def _exact(value, what):
    if isinstance(value, (bool, np.bool_)):
        raise ValueError(f"{what} must be numeric, got {value!r}")
    if isinstance(value, Integral):
        return int(value)
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, (float, np.floating)) and float(value).is_integer():
        return int(value)
    raise ValueError(f"{what} must be an integer or exact rational, got {value!r}")


def check_exact_xy(X, y):
    """Validate regression inputs without going through floating point.

    ``X`` is 1-D or a single column; ``y`` is 1-D of equal length.  Integral
    floats are accepted, anything else inexact is rejected.
    Returns two lists of ``int``/``Fraction``.
    """
    X = np.asarray(X, dtype=object)
    if X.ndim == 2:
        if X.shape[1] != 1:
            raise ValueError(f"X must have exactly one feature, got shape {X.shape}")
        X = X[:, 0]
    elif X.ndim != 1:
        raise ValueError(f"X must be 1-D or 2-D, got {X.ndim}-D")
    xs = [_exact(v, "X") for v in X]
    if y is None:
        return xs, None
    y = np.asarray(y, dtype=object)
    if y.ndim != 1 or len(y) != len(xs):
        raise ValueError(f"y must be 1-D with {len(xs)} entries, got shape {y.shape}")
    return xs, [_exact(v, "y") for v in y]


def check_date_array(X):
    """Turn an ``(n, 3)`` array of ``year, month, day`` rows into Dates."""
    X = np.asarray(X, dtype=object)
    if X.ndim != 2 or X.shape[1] != 3:
        raise DateError(f"expected shape (n, 3), got {X.shape}")
    return [Date(*(_exact(v, "date field") for v in row)) for row in X]
