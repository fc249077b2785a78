"""
Index bounds for 3-fold canonical singularities by minimal discrepancy.

The minimal discrepancy is 0, 1/r for a positive integer r, or 2, and the
index is at most 6, r! and 1 respectively.
"""

import re
from fractions import Fraction
from math import factorial

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from utils.config import AppConfig
from utils.errors import InvalidArgumentError

CREPANT_CENTRE_BOUND = 6
SMOOTH_BOUND = 1

NOT_A_DISCREPANCY = (
    "not a 3-fold canonical minimal discrepancy value: values are 0, 1/r, or 2"
)

# integers and p/q only; decimals and exponents are rejected
_LITERAL = re.compile(r"[+-]?\d+(/\d+)?")


def parse_discrepancy(text: str) -> Fraction:
    literal = text.strip()
    if not _LITERAL.fullmatch(literal):
        raise InvalidArgumentError(f"{text!r} is {NOT_A_DISCREPANCY}")
    try:
        return Fraction(literal)
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidArgumentError(f"{text!r} is {NOT_A_DISCREPANCY}") from e


def md_bound(a: Fraction) -> int:
    if a == 0:
        return CREPANT_CENTRE_BOUND
    if a == 2:
        return SMOOTH_BOUND
    if a > 0 and a.numerator == 1:
        if a.denominator > AppConfig.MAX_MD_DENOMINATOR:
            raise InvalidArgumentError(
                f"r = {a.denominator} exceeds the supported maximum {AppConfig.MAX_MD_DENOMINATOR}"
            )
        # arbitrary precision
        return factorial(a.denominator)
    raise InvalidArgumentError(f"{a} is {NOT_A_DISCREPANCY}")
