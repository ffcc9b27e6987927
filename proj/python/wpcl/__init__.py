"""Weighted configuration logic over product valuation monoids.

Thin wrapper around the compiled core. Formulas, configurations and values
travel as text in the tool's concrete syntax, so rationals stay exact:

    >>> import wpcl
    >>> wpcl.evaluate("w(2) (#) w(4)", "{{p},{q}}", ["p", "q"])
    '6'
"""

from wpcl._core import (
    InputError,
    MissingHypothesis,
    ResourceLimit,
    equivalent,
    evaluate,
    monoids,
    normalize,
    reprint,
    table,
)

__all__ = [
    "InputError",
    "MissingHypothesis",
    "ResourceLimit",
    "equivalent",
    "evaluate",
    "monoids",
    "normalize",
    "reprint",
    "table",
]
