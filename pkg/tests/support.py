"""Shared helpers for the test suite."""

import math


def assert_quoted(value: float, quoted: float, digits: int, truncated: bool = False):
    """Check a value against a quoted decimal at its quoted precision.

    Rounded quotes must agree within 5e-4; quotes printed with a trailing
    ellipsis are truncations, so the value must lie in
    [quoted, quoted + 10**-digits).
    """
    if truncated:
        assert quoted <= value < quoted + 10.0 ** (-digits), (
            f"{value} does not truncate to the quoted {quoted}")
    else:
        assert abs(value - quoted) <= 5e-4, (
            f"{value} does not match the quoted {quoted} within 5e-4")


def log_ratio(r: float) -> float:
    s = math.sqrt(r)
    return math.log((1.0 + s) / (1.0 - s))
