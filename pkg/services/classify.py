"""
Classification of fictitious-singularity baskets.

Table 1 stage: every J = {(r, v)} with sum B(r, v) = 1. Since r >= 2v gives
v/4 <= B(r, v) < v/2, the v's sum to 3 or 4, so there are finitely many
v-multisets, and for each one the r's solve sum v^2/r = sum v - 2.

Table 2 stage: every choice of units b over a Table 1 type, kept when the
delta-difference equation holds over a full period.

An independent brute-force oracle re-derives Table 2 from scratch.
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from fractions import Fraction
from itertools import product
from math import ceil, floor, gcd, lcm
from typing import Dict, List, Optional, Set, Tuple

from sympy.utilities.iterables import partitions

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from data.models import (
    Basket, BasketEntry, ClassificationRow, DeltaVerdict, JTildeType, JType, Rational, Stage, Verdict,
)
from data.reference_tables import table1_label, table2_label
from services.basket import delta_diff_rhs, lcm_index, verify_delta
from services.rr_core import b_value
from utils.config import AppConfig
from utils.errors import InvalidArgumentError

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def estimate_bounds(v: int) -> Tuple[Rational, Rational]:
    """Interval [v/4, v/2) holding B(r, v) for every r >= 2v"""
    return Fraction(v, 4), Fraction(v, 2)


def _v_sum_range() -> Tuple[int, int]:
    # sum v/4 <= sum B = 1 < sum v/2
    lower, upper = estimate_bounds(1)
    return floor(1 / upper) + 1, floor(1 / lower)


def candidate_v_multisets() -> List[Tuple[int, ...]]:
    low, high = _v_sum_range()
    candidates = []
    for total in range(low, high + 1):
        for partition in partitions(total):
            candidates.append(tuple(sorted(
                part for part, count in partition.items() for _ in range(count)
            )))
    candidates.sort(key=lambda vs: (sum(vs), len(vs), vs))
    logger.debug(f"Candidate v-multisets: {candidates}")
    return candidates


def solve_r(vs: Tuple[int, ...]) -> List[JType]:
    """All r-assignments with r >= 2v solving sum v^2/r = sum v - 2.

    Terms t = v^2/r are placed in non-increasing order, so the term placed
    with k terms still open is at least target/k. This bounds r above by
    k*v^2/target and below by 2v, v^2/target and the previous term, so every
    node has finitely many children. Any solution sorted by decreasing term
    is a path of this search, hence the search is complete; the set of
    canonical pair tuples removes the orderings of equal terms.
    """
    if not vs:
        raise InvalidArgumentError("solve_r needs a non-empty v-multiset")
    target = Fraction(sum(vs) - 2)
    if target <= 0:
        return []

    remaining: Dict[int, int] = {}
    for v in vs:
        remaining[v] = remaining.get(v, 0) + 1
    solutions: Set[Tuple[Pair, ...]] = set()
    chosen: List[Pair] = []

    def descend(target: Fraction, ceiling: Optional[Fraction], open_terms: int):
        if open_terms == 0:
            if target == 0:
                solutions.add(tuple(sorted(chosen)))
            return
        if target <= 0:
            return
        for v in sorted(remaining):
            if remaining[v] == 0:
                continue
            square = v * v
            low = max(2 * v, ceil(square / target))
            if ceiling is not None:
                low = max(low, ceil(square / ceiling))
            high = floor(open_terms * square / target)
            for r in range(low, high + 1):
                term = Fraction(square, r)
                if open_terms == 1 and term != target:
                    continue
                remaining[v] -= 1
                chosen.append((r, v))
                descend(target - term, term, open_terms - 1)
                chosen.pop()
                remaining[v] += 1

    descend(target, None, len(vs))
    logger.debug(f"solve_r{tuple(vs)}: {len(solutions)} solutions")
    return [JType(pairs) for pairs in sorted(solutions)]


def _index_of_pairs(pairs: Tuple[Pair, ...]) -> int:
    return lcm(*(r for r, _ in pairs)) if pairs else 1


def _table1_row(j_type: JType) -> ClassificationRow:
    label = table1_label(j_type.pairs) or AppConfig.UNEXPECTED_LABEL
    if label == AppConfig.UNEXPECTED_LABEL:
        logger.error(f"J type {j_type.pairs} is missing from the reference table")
    return ClassificationRow(
        label=label,
        stage=Stage.J,
        data=j_type.pairs,
        r_P=_index_of_pairs(j_type.pairs),
        verdict=Verdict.B0_SATISFIED,
    )


def enumerate_table1() -> List[ClassificationRow]:
    j_types = {JType(())}
    for vs in candidate_v_multisets():
        j_types.update(solve_r(vs))
    rows = sorted((_table1_row(j) for j in j_types), key=ClassificationRow.sort_key)
    logger.info(f"Table 1 stage: {len(rows)} types")
    return rows


def units(r: int) -> List[int]:
    return [b for b in range(1, r) if gcd(b, r) == 1]


def b_assignments(pairs: Tuple[Pair, ...]) -> List[Basket]:
    """Every canonical basket over these (r, v) pairs; permutations of equal
    pairs collapse to one basket"""
    choices = [[BasketEntry(r, b, v) for b in units(r)] for r, v in pairs]
    baskets = {Basket(tuple(combo)) for combo in product(*choices)}
    return sorted(baskets, key=lambda basket: basket.triples)


def _surviving_baskets(row: ClassificationRow) -> List[Basket]:
    candidates = b_assignments(row.data)
    survivors = [basket for basket in candidates if verify_delta(basket)]
    logger.debug(f"Type {row.label}: {len(survivors)} of {len(candidates)} assignments survive")
    return survivors


def _table2_row(basket: Basket, parent: ClassificationRow) -> ClassificationRow:
    label = table2_label(basket.triples) or AppConfig.UNEXPECTED_LABEL
    if label == AppConfig.UNEXPECTED_LABEL:
        logger.error(f"Basket {basket} survives but is missing from the reference table")
    elif label != parent.label:
        logger.warning(f"Basket {basket} labelled {label} but refines type {parent.label}")
    return ClassificationRow(
        label=label,
        stage=Stage.JTILDE,
        data=basket.triples,
        r_P=lcm_index(basket),
        verdict=Verdict.CONSISTENT,
        basket=basket,
    )


def refine_to_table2(
    table1: Optional[List[ClassificationRow]] = None,
    max_workers: Optional[int] = None,
) -> List[ClassificationRow]:
    """Keep the b-assignments of each Table 1 type that pass verify_delta.

    Types are checked concurrently; output order does not depend on
    completion order.
    """
    table1 = table1 if table1 is not None else enumerate_table1()
    max_workers = max_workers or AppConfig.get_max_workers()
    rows: List[ClassificationRow] = []

    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        future_to_row = {executor.submit(_surviving_baskets, row): row for row in table1}
        for future in as_completed(future_to_row):
            parent = future_to_row[future]
            rows.extend(_table2_row(basket, parent) for basket in future.result())

    rows.sort(key=ClassificationRow.sort_key)
    logger.info(f"Table 2 stage: {len(rows)} types")
    return rows


def elimination_report(label: str) -> List[Tuple[Basket, DeltaVerdict]]:
    """Every b-assignment of a Table 1 type with its verdict"""
    for row in enumerate_table1():
        if row.label == label:
            return [(basket, verify_delta(basket)) for basket in b_assignments(row.data)]
    raise InvalidArgumentError(f"no Table 1 type labelled {label!r}")


def type3_rhs_at_one() -> List[Tuple[Tuple[int, int], Rational]]:
    """Basket side at i = 1 for {(2,1,1),(3,1,b2),(6,1,b3)}"""
    values = []
    for b2, b3 in product(units(3), units(6)):
        basket = Basket.of((2, 1, 1), (3, b2, 1), (6, b3, 1))
        values.append(((b2, b3), delta_diff_rhs(basket, 1)))
    return values


def max_index(rows: List[ClassificationRow]) -> int:
    if not rows:
        raise InvalidArgumentError("max_index needs at least one row")
    return max(row.r_P for row in rows)


def oracle_enumerate(r_max: int = AppConfig.DEFAULT_ORACLE_R_MAX,
                     max_size: int = AppConfig.MAX_BASKET_SIZE) -> List[JTildeType]:
    """Brute-force every basket of at most max_size entries with r <= r_max.

    A non-empty basket has L >= 2, and at i = 0 the delta-difference equation
    reads sum B(r, v) = 1, so (r, v)-shapes whose B-values overshoot 1 are cut
    before any b is tried. Everything left is filtered by verify_delta.
    """
    if r_max < 2:
        raise InvalidArgumentError(f"r_max must be at least 2, got {r_max}")

    weighted = sorted(
        (b_value(r, v), r, v) for r in range(2, r_max + 1) for v in range(1, r // 2 + 1)
    )
    shapes: List[Tuple[Pair, ...]] = []
    chosen: List[Pair] = []

    def extend(start: int, total: Fraction):
        if total == 1:
            shapes.append(tuple(chosen))
            return
        if len(chosen) == max_size:
            return
        for index in range(start, len(weighted)):
            weight, r, v = weighted[index]
            if total + weight > 1:
                break
            chosen.append((r, v))
            extend(index, total + weight)
            chosen.pop()

    extend(0, Fraction(0))

    baskets = {Basket(())}
    for shape in shapes:
        choices = [
            [(r, b, v) for b in range(1, r) if gcd(b, r) == 1]
            for r, v in shape
        ]
        baskets.update(Basket.of(*combo) for combo in product(*choices))
    logger.info(f"Oracle r_max={r_max}: {len(shapes)} shapes, {len(baskets)} baskets to verify")

    survivors = sorted((b for b in baskets if verify_delta(b)), key=lambda b: b.triples)
    return [
        JTildeType(basket, table2_label(basket.triples) or AppConfig.UNEXPECTED_LABEL)
        for basket in survivors
    ]
