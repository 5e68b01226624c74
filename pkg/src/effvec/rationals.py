"""Exact rational scalars: parsing, formatting, and integer roots.

All numeric work in this package runs on ``fractions.Fraction``.  Floats are
accepted at the boundary and converted to the exact dyadic rational they
denote, so no rounding ever happens after input.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "rationalize",
    "parse_rational",
    "format_rational",
    "nth_root_exact",
    "nth_root_floor",
]


def rationalize(value: int | float | str | Fraction) -> Fraction:
    """Convert a scalar to an exact Fraction.

    Strings go through :func:`parse_rational`.  Floats become the exact
    dyadic rational they store (no decimal reinterpretation).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite value {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def parse_rational(text: str) -> Fraction:
    """Parse a rational literal: 'p/q', an integer, or a decimal string."""
    token = text.strip()
    if not token:
        raise ValueError("empty rational literal")
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational literal {token!r}") from exc


def format_rational(value: Fraction) -> str:
    """Format as 'p/q', or plain 'p' for integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def nth_root_floor(x: int, n: int) -> int:
    """floor(x ** (1/n)) for non-negative integer x, by Newton iteration."""
    if n <= 0:
        raise ValueError("root order must be positive")
    if x < 0:
        raise ValueError("negative radicand")
    if x < 2 or n == 1:
        return x
    if n == 2:
        return math.isqrt(x)
    guess = 1 << ((x.bit_length() + n - 1) // n)
    while True:
        better = ((n - 1) * guess + x // guess ** (n - 1)) // n
        if better >= guess:
            break
        guess = better
    while guess**n > x:
        guess -= 1
    return guess


def nth_root_exact(value: Fraction, n: int) -> Fraction | None:
    """The exact rational n-th root of ``value``, or None when irrational."""
    if value < 0:
        raise ValueError("negative radicand")
    p = nth_root_floor(value.numerator, n)
    q = nth_root_floor(value.denominator, n)
    if p**n == value.numerator and q**n == value.denominator:
        return Fraction(p, q)
    return None
