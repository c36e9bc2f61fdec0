"""Scalar layer: exact rationals versus 64-bit floats.

Every quantity in the package is either exact (``int``/``fractions.Fraction``)
or approximate (``float``).  A single computation never mixes the two
modes; the helpers below classify, parse, take guarded square roots and
format scalars so the rest of the code can stay mode-agnostic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import ExactModeError

Scalar = Union[int, Fraction, float]


def is_exact(*values: Scalar) -> bool:
    """True when none of the scalars is a float."""
    return not any(isinstance(v, float) for v in values)


def zero_like(value: Scalar) -> Scalar:
    return 0.0 if isinstance(value, float) else 0


def one_like(value: Scalar) -> Scalar:
    return 1.0 if isinstance(value, float) else 1


def div(a: Scalar, b: Scalar) -> Scalar:
    """Division that keeps exact scalars exact (int/int would give float)."""
    if isinstance(a, float) or isinstance(b, float):
        return a / b
    return Fraction(a) / Fraction(b)


def parse_scalar(text: str, exact: bool = True) -> Scalar:
    """Parse "p/q", integer or decimal notation in the requested mode."""
    value = Fraction(text.strip())
    return Fraction(value) if exact else float(value)


def scalar_to_json(value: Scalar):
    """JSON form: floats and small integers as numbers, ratios as "p/q"."""
    if isinstance(value, float):
        return value
    frac = Fraction(value)
    if frac.denominator == 1:
        return int(frac)
    return f"{frac.numerator}/{frac.denominator}"


def scalar_repr(value: Scalar) -> str:
    """Compact text form used by the CLI (quadruples, points)."""
    if isinstance(value, float):
        return fmt12(value)
    frac = Fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


def fmt12(value: Scalar) -> str:
    """Shortest representation within 12 significant digits; no "-0"."""
    text = "%.12g" % float(value)
    if text == "-0":
        text = "0"
    return text


def sqrt_exact(value: Fraction) -> Fraction | None:
    """Rational square root, or None when the value is not a perfect square."""
    if value < 0:
        return None
    frac = Fraction(value)
    num_root = math.isqrt(frac.numerator)
    den_root = math.isqrt(frac.denominator)
    if num_root * num_root != frac.numerator or den_root * den_root != frac.denominator:
        return None
    return Fraction(num_root, den_root)


def scalar_sqrt(value: Scalar, context: str) -> Scalar:
    """Square root preserving the numeric mode.

    Exact scalars must be perfect rational squares; otherwise the caller
    is told to switch to float mode.
    """
    if isinstance(value, float):
        return math.sqrt(value)
    root = sqrt_exact(Fraction(value))
    if root is None:
        raise ExactModeError(
            f"{context}: {value} has no exact rational square root; use float mode"
        )
    return root
