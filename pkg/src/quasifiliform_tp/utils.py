from fractions import Fraction
from typing import Mapping
import re

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def format_rational(value: Fraction | int) -> str:
    """Formats an exact rational as ``"p/q"``, or ``"p"`` when the denominator is 1.

    :param value: Rational to format
    :type value: Fraction | int
    :return: Canonical text form
    :rtype: str
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parses ``"p"`` or ``"p/q"`` into an exact rational.

    :raises ValueError: Raised if the text is not of that form or q is zero
    """
    match = _RATIONAL.match(str(text))
    if match is None:
        raise ValueError(f"Not a rational of the form p or p/q: {text!r}")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ValueError(f"Zero denominator in {text!r}")
    return Fraction(int(numerator), int(denominator or 1))


def basis_label(index: int) -> str:
    return f"e{index}"


def format_vector(vector: Mapping[int, Fraction]) -> str:
    """Formats a sparse vector with 1-based keys, e.g. ``e3 - 1/2*e5``."""
    if not vector:
        return "0"
    parts = []
    for k in sorted(vector):
        c = vector[k]
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        term = basis_label(k) if magnitude == 1 else f"{format_rational(magnitude)}*{basis_label(k)}"
        parts.append((sign, term))
    first_sign, first_term = parts[0]
    text = ("-" if first_sign == "-" else "") + first_term
    for sign, term in parts[1:]:
        text += f" {sign} {term}"
    return text


def parse_n_grid(text: str) -> list[int]:
    """Parses a comma-separated list of dimensions such as ``"5,7,9"``.

    An empty string yields an empty grid. Duplicates are removed and the result
    is sorted.

    :raises ValueError: Raised on entries that are not positive integers
    """
    grid = set()
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if not item.isdigit() or int(item) < 1:
            raise ValueError(f"Invalid dimension in grid: {item!r}")
        grid.add(int(item))
    return sorted(grid)
