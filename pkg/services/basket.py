"""
Basket verification - the delta-difference equation, the constant-term
solver and the basket JSON interchange format.

Both sides of the delta-difference equation are periodic with period dividing
L = lcm(r_Q): delta_P has period L by construction and every B_Q term has
period r_Q in i. Checking i in [0, L) is therefore a complete check.
"""

import logging
from fractions import Fraction
from math import lcm
from typing import Any, Dict, List, Optional

from sympy import mod_inverse

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from data.models import (
    Basket, BasketEntry, CyclicQuotient, DeltaProfile, DeltaVerdict, GammaResult, Rational,
)
from services.rr_core import a_value, b_value, residue
from utils.errors import BasketFormatError, InvalidArgumentError

logger = logging.getLogger(__name__)

DOCUMENT_KEYS = {"entries"}
ENTRY_KEYS = {"r", "b", "v"}


def lcm_index(basket: Basket) -> int:
    """Index r_P as the lcm of the entry indices; 1 for the empty basket"""
    if not basket:
        return 1
    return lcm(*(entry.r for entry in basket))


def f_min(entry: BasketEntry) -> int:
    """Smallest f >= 1 with f*b = v modulo r"""
    inverse = int(mod_inverse(entry.b, entry.r))
    return residue(entry.v * inverse, entry.r)


def delta_diff_rhs(basket: Basket, i: int) -> Rational:
    total = Fraction(0)
    for entry in basket:
        shifted = i * entry.b
        total += b_value(entry.r, shifted) - b_value(entry.r, shifted - entry.v)
    return total


def verify_delta(basket: Basket) -> DeltaVerdict:
    """Check delta(i+1) - delta(i) against the basket sum over one full period.

    Returns the smallest failing i as witness.
    """
    period = lcm_index(basket)
    delta = DeltaProfile(period)
    for i in range(period):
        lhs = Fraction(delta.difference(i))
        rhs = delta_diff_rhs(basket, i)
        if lhs != rhs:
            logger.debug(f"Basket {basket} fails at i={i}: {lhs} != {rhs}")
            return DeltaVerdict.failed_at(i, lhs, rhs)
    return DeltaVerdict.ok()


def _a_difference_sum(basket: Basket, f_values: List[int], i: int) -> Rational:
    return sum(
        (a_value(entry.quotient, i) - a_value(entry.quotient, i - f)
         for entry, f in zip(basket, f_values)),
        Fraction(0),
    )


def solve_gamma(basket: Basket) -> GammaResult:
    """Solve delta(i) = gamma + sum(A(i) - A(i - f)) for the constant gamma.

    gamma is fixed at i = 0 and then checked over one period.
    """
    f_values = [f_min(entry) for entry in basket]
    delta = DeltaProfile(lcm_index(basket))
    gamma = delta(0) - _a_difference_sum(basket, f_values, 0)

    for i in range(delta.r_P):
        lhs = Fraction(delta(i))
        rhs = gamma + _a_difference_sum(basket, f_values, i)
        if lhs != rhs:
            logger.debug(f"No constant term for {basket}: fails at i={i}")
            return GammaResult(None, i, lhs, rhs)
    return GammaResult(gamma)


def recovered_delta(basket: Basket, i: int) -> Rational:
    """delta(i) rebuilt from delta(0) = 1 by summing the basket side, i >= 0"""
    if i < 0:
        raise InvalidArgumentError(f"i must be non-negative, got {i}")
    return 1 + sum((delta_diff_rhs(basket, k) for k in range(i)), Fraction(0))


def index_from_profile(basket: Basket) -> Optional[int]:
    """First i >= 1 where the rebuilt delta returns to 1, within one period"""
    value = Fraction(1)
    for i in range(1, lcm_index(basket) + 1):
        value += delta_diff_rhs(basket, i - 1)
        if value == 1:
            return i
    return None


def normalize_entry(r: int, b: int, v: int) -> Optional[BasketEntry]:
    """Bring user input into the v <= r/2 normalisation.

    v = 0 lies outside I and is dropped; v > r/2 is replaced by (r-b, r-v).
    """
    if r < 2:
        raise InvalidArgumentError(f"index r must be at least 2, got {r}")
    CyclicQuotient(r, b)  # raises on a non-unit b
    if not 0 <= v < r:
        raise InvalidArgumentError(f"v must lie in [0, {r}), got {v}")
    if v == 0:
        logger.warning(f"Dropping entry (r={r}, b={b}, v=0): it carries no twist")
        return None
    if 2 * v > r:
        logger.warning(f"Normalising (r={r}, b={b}, v={v}) to (r={r}, b={r - b}, v={r - v})")
        b, v = r - b, r - v
    return BasketEntry(r, b, v)


def parse_basket_document(document: Any) -> Basket:
    if not isinstance(document, dict):
        raise BasketFormatError("basket document must be a JSON object")
    unknown = set(document) - DOCUMENT_KEYS
    if unknown:
        raise BasketFormatError(f"unknown keys in basket document: {sorted(unknown)}")
    raw_entries = document.get("entries")
    if not isinstance(raw_entries, list):
        raise BasketFormatError("'entries' must be an array")

    entries = []
    for position, raw in enumerate(raw_entries):
        if not isinstance(raw, dict):
            raise BasketFormatError(f"entry {position} must be an object")
        keys = set(raw)
        if keys != ENTRY_KEYS:
            raise BasketFormatError(
                f"entry {position} must have exactly the keys r, b, v; got {sorted(keys)}"
            )
        values = [raw[key] for key in ("r", "b", "v")]
        # bool is an int subclass but never a valid index
        if any(not isinstance(value, int) or isinstance(value, bool) for value in values):
            raise BasketFormatError(f"entry {position} values must be integers")
        try:
            entry = normalize_entry(*values)
        except InvalidArgumentError as e:
            raise BasketFormatError(f"entry {position}: {e}") from e
        if entry is not None:
            entries.append(entry)
    return Basket(tuple(entries))


def basket_to_document(basket: Basket) -> Dict[str, List[Dict[str, int]]]:
    return {"entries": [{"r": e.r, "b": e.b, "v": e.v} for e in basket]}
