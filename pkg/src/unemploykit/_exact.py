from decimal import Decimal
from fractions import Fraction
from numbers import Rational


def to_fraction(x) -> Fraction:
    """Exact rational from an int, Fraction, Decimal, str or float.

    Floats go through their shortest repr so that ``0.1`` becomes ``1/10``
    rather than the binary approximation.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not quantities")
    if isinstance(x, (int, Rational, Decimal, str)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(repr(x))
    raise TypeError(f"cannot convert {type(x).__name__} to an exact quantity")


def to_decimal(x) -> Decimal:
    if isinstance(x, Decimal):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not amounts")
    if isinstance(x, (int, str)):
        return Decimal(x)
    if isinstance(x, float):
        return Decimal(repr(x))
    if isinstance(x, Fraction):
        return Decimal(x.numerator) / Decimal(x.denominator)
    raise TypeError(f"cannot convert {type(x).__name__} to a money amount")


def fmt_number(x) -> str:
    """Deterministic text for CSV cells (no thousands separators, '.' decimal)."""
    if isinstance(x, bool) or x is None:
        return "" if x is None else str(x).lower()
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return repr(float(x))
    if isinstance(x, Decimal):
        if x == x.to_integral_value():
            return str(x.quantize(Decimal(1)))
        return format(x.normalize(), "f")
    if isinstance(x, float):
        if x.is_integer() and abs(x) < 1e15:
            return str(int(x))
        return repr(x)
    return str(x)
