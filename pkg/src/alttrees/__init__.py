"""Bijection between alternating permutations and 0-1-2 increasing trees
that sends the first letter of the permutation to the end of the tree's main
chain."""

from .bijection import Case, CaseTrace, classify_forward, classify_inverse, phi, phi_inverse
from .perm import (
    enumerate_alternating, enumerate_alternating_with_first, inv, is_alternating,
    occ_31_2, parse_perm, format_perm,
)
from .poly import BivariatePoly, a_poly_direct, count_tables
from .tree import (
    IncreasingTree, chain_leaf, enumerate_trees, enumerate_trees_with_leaf,
    main_chain, parse_tree, serialize_tree, to_dot,
)

__version__ = "0.1.0"
