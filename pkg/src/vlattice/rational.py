"""Exact rationals.

The scalar field is :class:`fractions.Fraction`; it already keeps
numerator/denominator reduced with a positive denominator. This module only
adds the ``"p/q"`` string format used in JSON reports.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: a float that slipped in would make equality tests meaningless.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text or any(c in text for c in ".eE_ "):
        raise ValueError(f"malformed rational {text!r}")
    return Fraction(text)


def format_rational(q) -> str:
    """``-3/7`` style; the denominator is dropped when it is 1."""
    return str(Fraction(q))
