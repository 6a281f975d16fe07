"""

Module dealing specifically with exact rational literals.

Input files carry rationals as strings ("-3/2", "1/2", "7") or plain integers, never as
floats. Typographic minus signs (U+2212) are accepted, since the notation is often
pasted from typeset text.

"""
from fractions import Fraction
from typing import Sequence, Tuple

MINUS_SIGNS = ("−", "–", "﹣", "－")


def parse_rational(value) -> Fraction:
    """ Parse an exact rational from an int, Fraction or string literal.

    Examples:
        >>> parse_rational("-3/2")
        Fraction(-3, 2)
        >>> parse_rational("−3/2")
        Fraction(-3, 2)
        >>> parse_rational(4)
        Fraction(4, 1)
    """
    if isinstance(value, bool):
        raise TypeError(f"Boolean {value!r} is not a rational number.")
    if isinstance(value, float):
        raise TypeError(f"Floating point value {value!r} is not accepted; write it as a string like '1/2'.")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        for sign in MINUS_SIGNS:
            text = text.replace(sign, "-")
        if not text or any(ch in text for ch in ".eE") or text.count("/") > 1:
            raise ValueError(f"Not a rational literal: {value!r}")
        try:
            return Fraction(text.replace(" ", ""))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"Not a rational literal: {value!r}") from None
    raise TypeError(f"Cannot interpret {value!r} as a rational number.")


def parse_integer(value) -> int:
    q = parse_rational(value)
    if q.denominator != 1:
        raise ValueError(f"Expected an integer, got {value!r}.")
    return q.numerator


def rational_vector(values: Sequence) -> Tuple[Fraction, ...]:
    return tuple(parse_rational(v) for v in values)


def integer_vector(values: Sequence) -> Tuple[int, ...]:
    return tuple(parse_integer(v) for v in values)


def format_rational(q) -> str:
    """ Format a rational the way it is parsed: "3/2", "-1", "0". """
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_vector(values: Sequence) -> list:
    return [format_rational(v) for v in values]
