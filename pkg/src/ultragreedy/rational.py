"""Exact rational scalars.

All weights, distances and perimeters in this package are
:class:`fractions.Fraction` values; no floating point is used anywhere.
``Fraction`` already guarantees lowest terms and a positive denominator,
so this module only adds the strict string parsing and canonical
formatting used by the file formats and CLI reports.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import InputError

Rat = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(value, where: str = "value") -> Fraction:
    """Parse ``value`` into an exact Fraction.

    Accepts strings like ``"5"``, ``"-3/4"`` and exact JSON integers.
    Floats (and float-looking strings such as ``"0.5"``) are rejected:
    they have no principled exact meaning here.
    """
    if isinstance(value, bool):
        raise InputError(f"{where}: expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise InputError(f"{where}: float literal {value!r} not accepted; write an exact rational string like \"1/2\"")
    if isinstance(value, str):
        s = value.strip()
        if _RATIONAL_RE.match(s):
            return Fraction(s)
        raise InputError(f"{where}: {value!r} is not an exact rational string (expected \"p\" or \"p/q\")")
    raise InputError(f"{where}: cannot read a rational from {type(value).__name__}")


def format_rational(x: Fraction) -> str:
    """Canonical string form: ``"p/q"`` in lowest terms, or ``"p"`` for integers."""
    return str(Fraction(x))
