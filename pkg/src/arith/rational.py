"""Exact rationals for the characteristic-zero side."""

from fractions import Fraction
from typing import Tuple, Union

BigRational = Fraction

RationalLike = Union[Fraction, int]


def rational_arith(a: RationalLike, b: RationalLike, kind: str) -> Fraction:
    """Exact rational arithmetic by name: add, sub, mul, div, neg, inv."""
    a = Fraction(a)
    if kind == "neg":
        return -a
    if kind == "inv":
        if a == 0:
            raise ZeroDivisionError("Zero has no inverse in Q")
        return 1 / a
    b = Fraction(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        if b == 0:
            raise ZeroDivisionError("Rational division by zero")
        return a / b
    raise ValueError(f"Unknown rational operation '{kind}'")


def rational_parts(value: RationalLike) -> Tuple[str, str]:
    """Decimal numerator and denominator strings (sign on the numerator)."""
    value = Fraction(value)
    return str(value.numerator), str(value.denominator)


def rational_to_latex(value: RationalLike) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"
