"""Exact rationals: canonical construction, strict parsing, formatting.

The package computes over arbitrary-precision rationals only.  The number
type is ``fractions.Fraction``, which already maintains the canonical form
we rely on everywhere: positive denominator, gcd-reduced, zero stored as
0/1.  This module adds the small amount of policy Fraction does not have:
a constructor that rejects zero denominators with a useful message, and a
strict parser for the on-disk text form (lowest terms, no "/1", no "0/q",
no leading zeros, no whitespace).
"""

from __future__ import annotations

import numbers
import re
from fractions import Fraction

__all__ = ["rat", "parse_fraction", "format_fraction", "as_rational"]

# Canonical text form: "p" or "p/q" with q >= 2, p nonzero when q is
# present, no sign on q, no "-0", no leading zeros.  gcd is checked after
# the match.
_CANONICAL = re.compile(r"\A(0|-?[1-9][0-9]*)(?:/([1-9][0-9]*))?\Z")


def rat(num: int, den: int = 1) -> Fraction:
    """Build ``num/den`` in canonical form.

    A zero denominator is rejected here rather than deep inside Fraction so
    the caller sees which construction failed.
    """
    if den == 0:
        raise ZeroDivisionError(f"rat({num}, 0): denominator must be nonzero")
    return Fraction(num, den)


def as_rational(value) -> Fraction:
    """Coerce an exact value (int or Fraction) to Fraction.

    Floats are refused on purpose: Fraction(0.1) is an exact binary
    artifact, never what an exact-arithmetic caller meant.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Rational):  # int, bool, other Rationals
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_fraction(text: str) -> Fraction:
    """Parse the canonical text form, rejecting anything non-canonical.

    Accepts "3", "-3", "1/2", "-7/3".  Rejects "2/4" (not reduced), "3/1"
    (denominator 1 must be omitted), "0/5", "-0", "+3", "03", "1/-2", and
    any whitespace.  This is the file-format parser; it round-trips exactly
    with :func:`format_fraction`.
    """
    if not isinstance(text, str):
        raise ValueError(f"fraction must be a string, got {type(text).__name__}")
    m = _CANONICAL.match(text)
    if m is None:
        raise ValueError(f"not a canonical fraction: {text!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return Fraction(num)
    den = int(m.group(2))
    if den == 1:
        raise ValueError(f"not a canonical fraction (denominator 1): {text!r}")
    if num == 0:
        raise ValueError(f"not a canonical fraction (zero numerator): {text!r}")
    q = Fraction(num, den)
    if q.numerator != num or q.denominator != den:
        raise ValueError(f"not a canonical fraction (not in lowest terms): {text!r}")
    return q


def format_fraction(q: Fraction) -> str:
    """Canonical text form: "p/q" in lowest terms, "p" for integers."""
    return str(as_rational(q))
