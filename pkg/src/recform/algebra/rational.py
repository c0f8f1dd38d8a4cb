"""Exact rational scalars.

`fractions.Fraction` already provides the canonical form this package relies
on everywhere: reduced numerator/denominator, positive denominator, zero as
0/1, and arbitrary precision.  The helpers below pin the one-true text format
("p/q", or "p" for integers) used by every file format and report.
"""

from __future__ import annotations

from fractions import Fraction

Rat = Fraction


def parse_rat(text: str | int | Fraction) -> Fraction:
    """Parse "p/q" or "p" (also accepts ints and Fractions unchanged)."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rat(value: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(value))
