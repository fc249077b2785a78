"""
Local Riemann-Roch contributions of terminal cyclic quotient singularities.

All values are exact fractions. Residues use floor division, so negative
arguments such as i*b - v reduce into [0, r) like any other integer.
"""

from fractions import Fraction
from typing import Iterable

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from data.models import CyclicQuotient, Rational
from utils.errors import InvalidArgumentError


def residue(i: int, r: int) -> int:
    """Residue of i modulo r, in [0, r) for every integer i"""
    if r < 1:
        raise InvalidArgumentError(f"modulus must be at least 1, got {r}")
    return i - (i // r) * r


def b_value(r: int, i: int) -> Rational:
    """B(i) = i'(r - i') / 2r where i' is the residue of i modulo r"""
    if r < 2:
        raise InvalidArgumentError(f"index r must be at least 2, got {r}")
    k = residue(i, r)
    return Fraction(k * (r - k), 2 * r)


def telescoping_constant(r: int) -> Rational:
    return Fraction(r * r - 1, 12 * r)


def a_value(q: CyclicQuotient, i: int) -> Rational:
    """Contribution A(i) of the quotient q at D ~ iK.

    Depends on i only through its residue k; for k = 1 the sum is empty.
    """
    k = residue(i, q.r)
    head = -k * telescoping_constant(q.r)
    return head + sum((b_value(q.r, j * q.b) for j in range(1, k)), Fraction(0))


def c_contribution(q: CyclicQuotient, i_p: int) -> Rational:
    return a_value(q, i_p)


def basket_c_contribution(qs: Iterable[CyclicQuotient], i_p: int) -> Rational:
    return sum((c_contribution(q, i_p) for q in qs), Fraction(0))


def contribution_step(q: CyclicQuotient, i: int) -> Rational:
    """A(i+1) - A(i) in closed form"""
    return -telescoping_constant(q.r) + b_value(q.r, i * q.b)


def period_sum(q: CyclicQuotient) -> Rational:
    # (r^2 - 1)/12 whenever b is a unit modulo r
    return sum((b_value(q.r, j * q.b) for j in range(q.r)), Fraction(0))
