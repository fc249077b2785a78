#!/usr/bin/env python3
"""
Tests for basket verification, the constant-term solver and the basket
JSON format
"""

import sys
import os
import logging
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

# Add the project root to Python path
project_root = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, project_root)

from data.models import Basket, BasketEntry, DeltaProfile
from data.reference_tables import TABLE_2
from services.basket import (
    basket_to_document, delta_diff_rhs, f_min, index_from_profile, lcm_index,
    normalize_entry, parse_basket_document, recovered_delta, solve_gamma, verify_delta,
)
from services.classify import oracle_enumerate
from services.rr_core import a_value, b_value, residue
from utils.errors import BasketFormatError, InvalidArgumentError


def table2_basket(label: str) -> Basket:
    """Table 2 rows are listed as (r, v, b)"""
    triples, _ = TABLE_2[label]
    return Basket.of(*((r, b, v) for r, v, b in triples))


def entries(max_r: int = 10):
    return st.integers(min_value=2, max_value=max_r).flatmap(
        lambda r: st.tuples(
            st.sampled_from([b for b in range(1, r) if gcd(b, r) == 1]),
            st.integers(min_value=1, max_value=r // 2),
        ).map(lambda bv: BasketEntry(r, bv[0], bv[1]))
    )


baskets = st.lists(entries(), max_size=4).map(lambda es: Basket(tuple(es)))

CONSISTENT_POOL = [found.basket for found in oracle_enumerate(10)]


@st.composite
def consistent_baskets(draw):
    """A consistent basket, shuffled and fed through the document parser with
    some entries written in their reflected (r-b, r-v) form"""
    basket = draw(st.sampled_from(CONSISTENT_POOL))
    raw = []
    for entry in draw(st.permutations(list(basket.entries))):
        r, b, v = entry.r, entry.b, entry.v
        if 2 * v < r and draw(st.booleans()):
            b, v = r - b, r - v
        raw.append({"r": r, "b": b, "v": v})
    return parse_basket_document({"entries": raw})


mixed_baskets = st.one_of(baskets, consistent_baskets())


class TestBasketModel:
    def test_canonical_order_gives_multiset_equality(self):
        first = Basket.of((6, 5, 1), (2, 1, 1), (3, 2, 1))
        second = Basket.of((3, 2, 1), (6, 5, 1), (2, 1, 1))
        assert first == second
        assert first.triples == ((2, 1, 1), (3, 1, 2), (6, 1, 5))

    @pytest.mark.parametrize("r,b,v", [(4, 1, 3), (4, 2, 1), (5, 1, 0), (2, 1, 2)])
    def test_entry_rejects_invalid(self, r, b, v):
        with pytest.raises(InvalidArgumentError):
            BasketEntry(r, b, v)

    def test_delta_profile(self):
        delta = DeltaProfile(3)
        assert [delta(i) for i in range(-3, 4)] == [1, 0, 0, 1, 0, 0, 1]
        assert delta.difference(0) == -1
        assert delta.difference(2) == 1


class TestLcmIndex:
    def test_known_values(self):
        assert lcm_index(Basket()) == 1
        assert lcm_index(Basket.of((2, 1, 1), (3, 1, 1), (6, 1, 1))) == 6
        assert lcm_index(Basket.of((2, 1, 1), (8, 1, 2))) == 8


class TestFMin:
    def test_known_values(self):
        assert f_min(BasketEntry(2, 1, 1)) == 1
        assert f_min(BasketEntry(3, 2, 1)) == 2
        assert f_min(BasketEntry(6, 5, 1)) == 5

    @settings(max_examples=200)
    @given(entry=entries(max_r=30))
    def test_is_smallest_positive_solution(self, entry):
        f = f_min(entry)
        assert 1 <= f < entry.r
        assert residue(f * entry.b, entry.r) == entry.v
        assert all(residue(g * entry.b, entry.r) != entry.v for g in range(1, f))


class TestDeltaDiffRhs:
    def test_empty(self):
        assert delta_diff_rhs(Basket(), 7) == 0

    @pytest.mark.parametrize("b2,b3,expected", [
        (1, 1, Fraction(1)),
        (1, 5, Fraction(1, 3)),
        (2, 1, Fraction(2, 3)),
        (2, 5, Fraction(0)),
    ])
    def test_type3_assignments_at_one(self, b2, b3, expected):
        basket = Basket.of((2, 1, 1), (3, b2, 1), (6, b3, 1))
        assert delta_diff_rhs(basket, 1) == expected

    @settings(max_examples=200)
    @given(basket=baskets)
    def test_full_period_sum_vanishes(self, basket):
        period = lcm_index(basket)
        assert sum(delta_diff_rhs(basket, i) for i in range(period)) == 0


class TestVerifyDelta:
    def test_empty_is_consistent(self):
        assert verify_delta(Basket()).consistent

    def test_type3_tabulated_assignment_is_consistent(self):
        assert verify_delta(Basket.of((2, 1, 1), (3, 2, 1), (6, 5, 1))).consistent

    def test_type3_trivial_assignment_fails_at_one(self):
        verdict = verify_delta(Basket.of((2, 1, 1), (3, 1, 1), (6, 1, 1)))
        assert not verdict
        assert (verdict.witness, verdict.lhs, verdict.rhs) == (1, 0, 1)

    def test_type6_shape_fails_at_two(self):
        verdict = verify_delta(Basket.of((4, 1, 2), (4, 3, 2)))
        assert (verdict.witness, verdict.lhs, verdict.rhs) == (2, 0, 1)

    @pytest.mark.parametrize("label", sorted(TABLE_2))
    def test_table2_rows_are_consistent(self, label):
        assert verify_delta(table2_basket(label)).consistent

    @settings(max_examples=200)
    @given(data=st.data(), basket=baskets)
    def test_permutation_invariance(self, data, basket):
        shuffled = data.draw(st.permutations(list(basket.entries)))
        assert verify_delta(Basket(tuple(shuffled))) == verify_delta(basket)
        assert solve_gamma(Basket(tuple(shuffled))) == solve_gamma(basket)

    @settings(max_examples=200)
    @given(basket=mixed_baskets)
    def test_consistency_implies_b0(self, basket):
        if basket and verify_delta(basket):
            assert sum(b_value(e.r, e.v) for e in basket) == 1

    @settings(max_examples=200)
    @given(basket=mixed_baskets)
    def test_consistency_implies_gamma(self, basket):
        if verify_delta(basket):
            assert solve_gamma(basket).consistent

    @settings(max_examples=200)
    @given(basket=consistent_baskets())
    def test_consistent_pool_survives_shuffle_and_reflection(self, basket):
        assert basket in CONSISTENT_POOL
        assert verify_delta(basket).consistent
        if basket:
            assert sum(b_value(e.r, e.v) for e in basket) == 1

    @settings(max_examples=200)
    @given(basket=consistent_baskets())
    def test_gamma_satisfies_constant_term_equation(self, basket):
        result = solve_gamma(basket)
        assert result.consistent
        assert result.gamma == Fraction(1, lcm_index(basket))
        delta = DeltaProfile(lcm_index(basket))
        fs = [f_min(e) for e in basket]
        for i in range(-delta.r_P, 2 * delta.r_P):
            side = sum(
                (a_value(e.quotient, i) - a_value(e.quotient, i - f) for e, f in zip(basket, fs)),
                Fraction(0),
            )
            assert delta(i) == result.gamma + side

    def test_consistent_pool_is_table2(self):
        assert sorted(b.triples for b in CONSISTENT_POOL) == sorted(
            triples for triples, _ in TABLE_2.values()
        )


class TestSolveGamma:
    def test_empty(self):
        assert solve_gamma(Basket()).gamma == 1

    @pytest.mark.parametrize("label,expected", [
        ("1", Fraction(1, 2)),
        ("3", Fraction(1, 6)),
        ("4", Fraction(1, 4)),
        ("5", Fraction(1, 3)),
        ("10", Fraction(1, 5)),
        ("13", Fraction(1)),
    ])
    def test_table2_regressions(self, label, expected):
        assert solve_gamma(table2_basket(label)).gamma == expected

    def test_inconsistent_basket_has_witness(self):
        result = solve_gamma(Basket.of((3, 1, 1), (3, 1, 1), (3, 1, 1)))
        assert not result.consistent
        assert result.witness is not None


class TestIndexFromProfile:
    @pytest.mark.parametrize("label", sorted(TABLE_2))
    def test_matches_lcm_for_table2(self, label):
        basket = table2_basket(label)
        assert index_from_profile(basket) == lcm_index(basket)
        assert all(
            recovered_delta(basket, i) == DeltaProfile(lcm_index(basket))(i)
            for i in range(2 * lcm_index(basket))
        )


class TestNormalization:
    def test_large_v_is_reflected(self, caplog):
        with caplog.at_level(logging.WARNING):
            entry = normalize_entry(5, 1, 3)
        assert entry == BasketEntry(5, 4, 2)
        assert "Normalising" in caplog.text

    def test_zero_v_is_dropped(self, caplog):
        with caplog.at_level(logging.WARNING):
            assert normalize_entry(4, 1, 0) is None
        assert "Dropping" in caplog.text

    def test_reflection_preserves_verdict(self):
        reflected = parse_basket_document({"entries": [
            {"r": 5, "b": 1, "v": 4}, {"r": 5, "b": 2, "v": 3},
        ]})
        assert reflected == table2_basket("10")


class TestBasketDocument:
    def test_parse(self):
        basket = parse_basket_document({"entries": [
            {"r": 2, "b": 1, "v": 1}, {"r": 4, "b": 3, "v": 1}, {"r": 4, "b": 3, "v": 1},
        ]})
        assert basket == table2_basket("4")
        assert parse_basket_document(basket_to_document(basket)) == basket

    @pytest.mark.parametrize("document", [
        [],
        {"entries": [], "extra": 1},
        {"entries": {}},
        {"entries": [{"r": 2, "b": 1}]},
        {"entries": [{"r": 2, "b": 1, "v": 1, "w": 0}]},
        {"entries": [{"r": 2, "b": 1, "v": "1"}]},
        {"entries": [{"r": 2, "b": True, "v": 1}]},
        {"entries": [{"r": 4, "b": 2, "v": 1}]},
        {"entries": [{"r": 4, "b": 1, "v": 7}]},
    ])
    def test_rejects_malformed(self, document):
        with pytest.raises(BasketFormatError):
            parse_basket_document(document)
