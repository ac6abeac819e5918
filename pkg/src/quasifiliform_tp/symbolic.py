"""Coefficient expressions in the greek-letter parameters of the closed-form tables.

Parameters are written ``alpha_5``, ``beta_1``, ``gamma_3`` in table text and
become sympy symbols qualified by a namespace, so the same local name in two
tables never denotes the same symbol.
"""

from fractions import Fraction
import re

import sympy
from sympy.parsing.sympy_parser import parse_expr, standard_transformations

PARAMETER = re.compile(r"\b(alpha|beta|gamma)_(\d+)\b")
_LETTER_ORDER = {"alpha": 0, "beta": 1, "gamma": 2}


def parameter_symbol(namespace: str, name: str) -> sympy.Symbol:
    return sympy.Symbol(f"{namespace}.{name}")


def local_name(symbol: sympy.Symbol) -> str:
    """Strips the namespace from a parameter symbol."""
    return symbol.name.rsplit(".", 1)[-1]


def parameter_sort_key(name: str) -> tuple[int, int]:
    """Orders ``alpha_*`` before ``beta_*`` before ``gamma_*``, then by index."""
    match = PARAMETER.fullmatch(name)
    if match is None:
        raise ValueError(f"Not a parameter name: {name!r}")
    return _LETTER_ORDER[match.group(1)], int(match.group(2))


def parse_expression(text: str | int | Fraction, namespace: str) -> sympy.Expr:
    """Parses a coefficient such as ``"1/2*(beta_1 - alpha_4)"``.

    Integer literals stay exact, so ``1/2`` is the rational one half.

    :param text: Coefficient text, or an exact number
    :type text: str | int | Fraction
    :param namespace: Qualifier for the parameter symbols
    :type namespace: str
    :return: The expression in namespaced symbols
    :rtype: sympy.Expr
    """
    if isinstance(text, (int, Fraction)):
        value = Fraction(text)
        return sympy.Rational(value.numerator, value.denominator)
    names = {m.group(0) for m in PARAMETER.finditer(text)}
    local_dict = {name: parameter_symbol(namespace, name) for name in names}
    return parse_expr(text, local_dict=local_dict, transformations=standard_transformations)


def to_fraction(value: sympy.Basic | int) -> Fraction:
    """Converts an evaluated sympy number (or a plain int) to an exact fraction.

    :raises ValueError: Raised if the value is not a finite rational
    """
    value = sympy.sympify(value)
    if not value.is_Rational:
        raise ValueError(f"Expression did not evaluate to a rational: {value}")
    return Fraction(int(value.p), int(value.q))


def rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)
