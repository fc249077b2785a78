"""
Published classification tables of fictitious-singularity baskets.

TABLE_1 lists every J = {(r, v)} admitted by the i = 0 slice of the
delta-difference equation. TABLE_2 lists every J~ = {(r, v, b)} for which the
equation holds at every i. Both are kept in canonical sorted order so that
enumerated results can be matched by plain equality.
"""

from typing import Dict, Optional, Tuple

# label -> ((r, v) pairs, r_P)
TABLE_1: Dict[str, Tuple[Tuple[Tuple[int, int], ...], int]] = {
    "1": (((2, 1), (2, 1), (2, 1), (2, 1)), 2),
    "2": (((2, 1), (2, 1), (4, 2)), 4),
    "3": (((2, 1), (3, 1), (6, 1)), 6),
    "4": (((2, 1), (4, 1), (4, 1)), 4),
    "5": (((3, 1), (3, 1), (3, 1)), 3),
    "6": (((4, 2), (4, 2)), 4),
    "7": (((2, 1), (6, 3)), 6),
    "8": (((2, 1), (8, 2)), 8),
    "9": (((3, 1), (6, 2)), 6),
    "10": (((5, 1), (5, 2)), 5),
    "11": (((8, 4),), 8),
    "12": (((9, 3),), 9),
    "13": ((), 1),
}

# label -> ((r, v, b) triples, r_P)
TABLE_2: Dict[str, Tuple[Tuple[Tuple[int, int, int], ...], int]] = {
    "1": (((2, 1, 1), (2, 1, 1), (2, 1, 1), (2, 1, 1)), 2),
    "3": (((2, 1, 1), (3, 1, 2), (6, 1, 5)), 6),
    "4": (((2, 1, 1), (4, 1, 3), (4, 1, 3)), 4),
    "5": (((3, 1, 2), (3, 1, 2), (3, 1, 2)), 3),
    "10": (((5, 1, 4), (5, 2, 3)), 5),
    "13": ((), 1),
}

_TABLE_1_BY_DATA = {data: label for label, (data, _) in TABLE_1.items()}
_TABLE_2_BY_DATA = {data: label for label, (data, _) in TABLE_2.items()}


def table1_label(pairs: Tuple[Tuple[int, int], ...]) -> Optional[str]:
    """Label of the Table 1 type with exactly these canonical pairs"""
    return _TABLE_1_BY_DATA.get(tuple(pairs))


def table2_label(triples: Tuple[Tuple[int, int, int], ...]) -> Optional[str]:
    """Label of the Table 2 type with exactly these canonical triples"""
    return _TABLE_2_BY_DATA.get(tuple(triples))


def expected_max_index(table: Dict[str, Tuple[tuple, int]]) -> int:
    return max(r_p for _, r_p in table.values())
