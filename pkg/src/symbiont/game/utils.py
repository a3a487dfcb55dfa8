"""Provides functions for reading and writing exact utility values.

All money-like values in Symbiont are utils: exact rationals held as
`Fraction`. Text versions are either decimals (`"5.5"`) when the value has
a terminating decimal expansion, or fractions (`"1/3"`) when it doesn't.
"""

##############################################################################
# Python imports.
import re
from fractions import Fraction
from typing import Final, Pattern, TypeAlias

##############################################################################
Util: TypeAlias = Fraction
"""The type of a transferable utility value."""

##############################################################################
MAX_DECIMAL_PLACES: Final[int] = 12
"""The most decimal places a value will be written with before it becomes a fraction."""

_DECIMAL: Final[Pattern[str]] = re.compile(r"[+-]?\d+(\.\d+)?")
"""Regular expression for a decimal number."""

_FRACTION: Final[Pattern[str]] = re.compile(r"[+-]?\d+/\d+")
"""Regular expression for a fraction."""


##############################################################################
def parse_decimal(text: str) -> Util:
    """Parse an exact decimal number.

    Args:
        text: The text to parse.

    Returns:
        The exact value of the decimal.

    Raises:
        ValueError: If the text isn't a decimal number.

    Only an optional sign, digits and an optional fractional part are
    accepted; there is no exponent form and no surrounding space.
    """
    if not _DECIMAL.fullmatch(text):
        raise ValueError(f"{text!r} is not a decimal number")
    return Fraction(text)


##############################################################################
def parse_util(text: str) -> Util:
    """Parse a utility value written as a decimal or a fraction.

    Args:
        text: The text to parse.

    Returns:
        The exact value.

    Raises:
        ValueError: If the text is neither a decimal nor a fraction, or is a
            fraction with a zero denominator.
    """
    if _FRACTION.fullmatch(text):
        numerator, denominator = text.split("/")
        if int(denominator) == 0:
            raise ValueError(f"{text!r} has a zero denominator")
        return Fraction(int(numerator), int(denominator))
    return parse_decimal(text)


##############################################################################
def _decimal_places(value: Util) -> int | None:
    """Work out how many places are needed to write a value as a decimal.

    Args:
        value: The value to check.

    Returns:
        The number of places, or `None` if the value has no terminating
        decimal expansion.
    """
    denominator = value.denominator
    twos = fives = 0
    while denominator % 2 == 0:
        denominator //= 2
        twos += 1
    while denominator % 5 == 0:
        denominator //= 5
        fives += 1
    return max(twos, fives) if denominator == 1 else None


##############################################################################
def is_decimal(value: Util) -> bool:
    """Can a value be written exactly as a decimal?

    Args:
        value: The value to check.

    Returns:
        `True` if the value has a terminating decimal expansion.
    """
    return _decimal_places(value) is not None


##############################################################################
def util_text(value: Util, max_places: int | None = MAX_DECIMAL_PLACES) -> str:
    """Convert a utility value into exact text.

    Args:
        value: The value to convert.
        max_places: The most decimal places to use before falling back to a
            fraction; `None` for no limit.

    Returns:
        The value as a decimal string if it can be written in at most
        `max_places` places, otherwise as a `p/q` fraction string.
    """
    places = _decimal_places(value)
    if places is None or (max_places is not None and places > max_places):
        return f"{value.numerator}/{value.denominator}"
    if places == 0:
        return str(value.numerator)
    scaled = abs(value.numerator) * 10**places // value.denominator
    whole, fraction = divmod(scaled, 10**places)
    return f"{'-' if value < 0 else ''}{whole}.{fraction:0{places}d}"


### utils.py ends here
