"""Exact scalar helpers on top of :class:`fractions.Fraction`."""

from fractions import Fraction
from math import gcd, lcm
import numbers


def rational(value):
    """Coerce *value* to a Fraction without ever going through binary floats.

    Accepts ints, Fractions and strings such as ``"3/2"``, ``"-4"`` or
    ``"1.25"``. Floats are rejected outright.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact rational: {value!r}") from exc
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"refusing inexact value {value!r} ({type(value).__name__})")


def fmt(value):
    """Reduced fraction string: ``"3/2"``, ``"-4"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_lcm(values):
    """Least positive common multiple of nonzero rationals.

    lcm(p1/q1, p2/q2, ...) = lcm(p1, p2, ...) / gcd(q1, q2, ...) on reduced
    magnitudes.
    """
    num = 1
    den = 0
    for v in values:
        v = abs(Fraction(v))
        if v == 0:
            raise ValueError("lcm of zero is undefined")
        num = lcm(num, v.numerator)
        den = gcd(den, v.denominator)
    if den == 0:
        raise ValueError("lcm of an empty collection")
    return Fraction(num, den)


def common_denominator(values):
    den = 1
    for v in values:
        den = lcm(den, Fraction(v).denominator)
    return den
