"""Exact rational helpers on top of :class:`fractions.Fraction`.

``Fraction`` already keeps numerator/denominator coprime with a positive
denominator, so it is used directly as the rational type.  This module only
adds parsing, rendering and sign utilities shared by the rest of the package.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = ["Rational", "to_rational", "parse_rational", "format_rational", "sign", "cmp"]


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or exact string to a Fraction.

    Floats are rejected: a float literal almost never denotes the rational the
    caller had in mind.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(token: str) -> Fraction:
    """Parse ``"p/q"``, ``"-7"`` or a finite decimal such as ``"0.25"``."""
    text = token.strip()
    if not text:
        raise ValueError("empty rational literal")
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {token!r}") from exc
    return value


def format_rational(value) -> str:
    """Render as ``p/q``, omitting ``/1``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def sign(value) -> int:
    return (value > 0) - (value < 0)


def cmp(a, b) -> int:
    return sign(Fraction(a) - Fraction(b))
