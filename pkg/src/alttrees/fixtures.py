"""Worked examples used by ``alttrees verify`` as golden data."""

from __future__ import annotations

from typing import NamedTuple


class Golden(NamedTuple):
    word: str
    inv: int
    occ_31_2: int
    tree: str
    leaf: int


# construction chain of the image of 748591623, smallest case first
CHAIN = [
    Golden("1", 0, 0, "0", 1),
    Golden("213", 1, 0, "0 1 1", 2),
    Golden("312", 2, 1, "0 1 2", 3),
    Golden("21534", 3, 1, "0 1 1 3 4", 2),
    Golden("31524", 4, 2, "0 1 2 1 4", 3),
    Golden("41523", 5, 3, "0 1 1 2 3", 4),
    Golden("51423", 6, 4, "0 1 1 3 2", 5),
    Golden("5471623", 13, 4, "0 1 1 2 4 3 4", 5),
    Golden("6471523", 14, 5, "0 1 1 2 3 4 4", 6),
    Golden("548691723", 21, 5, "0 1 1 2 4 4 3 6 6", 5),
    Golden("648591723", 22, 6, "0 1 1 2 4 5 3 4 5", 6),
    Golden("748591623", 23, 7, "0 1 1 2 4 3 5 4 5", 7),
]

# words visited by the recursion on 748591623, in order
CHAIN_ORDER = [
    "748591623", "648591723", "548691723", "6471523", "5471623", "51423",
    "41523", "31524", "21534", "312", "213", "1",
]

# all of A_4; inv is the true inversion count
A4 = [
    Golden("2143", 2, 0, "0 1 1 3", 2),
    Golden("3142", 3, 1, "0 1 2 1", 3),
    Golden("3241", 4, 0, "0 1 2 2", 3),
    Golden("4132", 4, 2, "0 1 1 2", 4),
    Golden("4231", 5, 1, "0 1 2 3", 4),
]

# the published table prints these inv values instead
A4_PRINTED_INV = {"3241": 3, "4231": 4}

EULER = [1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521]
