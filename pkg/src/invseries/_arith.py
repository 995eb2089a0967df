"""Small exact-arithmetic helpers: generalized binomials and rational I/O."""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

from .errors import ConsistencyError, UsageError

RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def binom(x: RationalLike, j: int) -> Fraction:
    """Generalized binomial x(x-1)...(x-j+1)/j!; zero for negative j."""
    if j < 0:
        return Fraction(0)
    if isinstance(x, int) and x >= 0:
        return Fraction(math.comb(x, j))
    num = Fraction(1)
    for i in range(j):
        num *= x - i
    return num / math.factorial(j)


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse "p", "p/q" (or an int/Fraction) into a Fraction.

    Decimal and exponent notation are rejected so that no float ever
    leaks into a computation.
    """
    if isinstance(text, bool):
        raise UsageError(f"not a rational: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise UsageError(f"not a rational: {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise UsageError(f"not an exact rational 'p' or 'p/q': {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise UsageError(f"zero denominator: {text!r}")
    return Fraction(int(m.group(1)), den)


def format_rational(q: RationalLike) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_integer(q: RationalLike, what: str = "value") -> int:
    """Return q as an int, raising ConsistencyError if it is not integral."""
    q = Fraction(q)
    if q.denominator != 1:
        raise ConsistencyError(f"{what} is not an integer: {format_rational(q)}")
    return q.numerator
