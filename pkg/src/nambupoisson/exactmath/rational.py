"""Exact rational scalars.

``fractions.Fraction`` already keeps numerator/denominator in lowest terms with
a positive denominator, so it is used directly as the scalar type.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from ..errors import DomainError, InputError

Rational = Fraction
RationalLike = Union[int, Fraction, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: every number in this package is exact.
    """
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {value!r}") from exc
    raise InputError(f"not a rational: {value!r}")


def rat_arith(op: str, a: Fraction, b: Fraction) -> Fraction:
    """Apply ``op`` in {add, sub, mul, div} to two rationals."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DomainError(f"division by zero: {a} / {b}", a, b)
        return a / b
    raise InputError(f"unknown rational operation {op!r}")


def format_rational(q: Fraction) -> str:
    """Render as ``p`` or ``p/q``; the result parses back under the expression grammar."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
