"""
Alternating (down-up) permutations in one-line notation.

Permutations are plain tuples of ints; the helpers here validate, enumerate,
relabel and compute the two statistics used by the generating polynomials.

>>> enumerate_alternating(4)
[(2, 1, 4, 3), (3, 1, 4, 2), (3, 2, 4, 1), (4, 1, 3, 2), (4, 2, 3, 1)]
>>> inv((3, 2, 4, 1)), occ_31_2((3, 1, 4, 2))
(4, 1)
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

__all__ = [
    "Permutation", "PermutationError", "NotAlternatingError",
    "check_permutation", "check_alternating", "is_alternating",
    "enumerate_alternating", "enumerate_alternating_with_first", "iter_alternating",
    "inv", "occ_31_2", "standardize", "delete_and_standardize", "unstandardize",
    "swap_values", "parse_perm", "format_perm",
]

# a permutation of [n] in one-line notation
Permutation = tuple[int, ...]


class PermutationError(ValueError):
    """The word is not a permutation of [n]."""


class NotAlternatingError(ValueError):
    """The word is a permutation but not down-up alternating."""


def check_permutation(word: Iterable[int]) -> Permutation:
    word = tuple(word)
    n = len(word)
    if n == 0:
        raise PermutationError("empty word")
    if sorted(word) != list(range(1, n + 1)):
        raise PermutationError(f"not a permutation of [1..{n}]: {format_perm(word)}")
    return word


def _alternates(word: Sequence[int]) -> bool:
    return all((word[i] > word[i + 1]) == (i % 2 == 0) for i in range(len(word) - 1))


def is_alternating(word: Iterable[int]) -> bool:
    """True iff ``w1 > w2 < w3 > ...`` holds throughout. Raises on non-permutations."""
    return _alternates(check_permutation(word))


def check_alternating(word: Iterable[int]) -> Permutation:
    word = check_permutation(word)
    if not _alternates(word):
        raise NotAlternatingError(f"not alternating: {format_perm(word)}")
    return word


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")


def iter_alternating(n: int, first: int | None = None) -> Iterator[Permutation]:
    """Yield the alternating permutations of [n] in lexicographic order.

    Prefix backtracking: a letter is only placed if it keeps the down-up shape,
    so the work is proportional to the output size times n.
    """
    _check_n(n)
    used = [False] * (n + 1)
    word: list[int] = []

    def extend() -> Iterator[Permutation]:
        i = len(word)
        if i == n:
            yield tuple(word)
            return
        if i == 0:
            candidates: Iterable[int] = [first] if first is not None else range(1, n + 1)
        elif i % 2 == 1:  # descent into position i
            candidates = range(1, word[-1])
        else:
            candidates = range(word[-1] + 1, n + 1)
        for v in candidates:
            if not used[v]:
                used[v] = True
                word.append(v)
                yield from extend()
                word.pop()
                used[v] = False

    # depth is n, so recursion is fine for anything enumerable
    yield from extend()


def enumerate_alternating(n: int) -> list[Permutation]:
    return list(iter_alternating(n))


def enumerate_alternating_with_first(n: int, k: int) -> list[Permutation]:
    _check_n(n)
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range [1, {n}]")
    return list(iter_alternating(n, first=k))


def inv(word: Sequence[int]) -> int:
    """Number of inversions: pairs i < j with w_i > w_j."""
    word = check_permutation(word)
    n = len(word)
    return sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])


def occ_31_2(word: Sequence[int]) -> int:
    """Occurrences of the vincular pattern 31-2.

    For every descent ``w_i > w_{i+1}``, count the later letters ``w_j``
    (``j > i+1``) lying strictly between ``w_{i+1}`` and ``w_i``.
    """
    word = check_permutation(word)
    total = 0
    for i in range(len(word) - 1):
        hi, lo = word[i], word[i + 1]
        if hi > lo:
            total += sum(1 for v in word[i + 2:] if lo < v < hi)
    return total


def standardize(word: Sequence[int]) -> Permutation:
    """Order-preserving relabeling of distinct integers onto [len(word)]."""
    ranks = {v: r for r, v in enumerate(sorted(word), start=1)}
    if len(ranks) != len(word):
        raise PermutationError("repeated letters cannot be standardized")
    return tuple(ranks[v] for v in word)


def delete_and_standardize(word: Sequence[int], drop: Iterable[int]) -> Permutation:
    """Remove the values in ``drop`` and standardize what is left.

    >>> delete_and_standardize((2, 1, 5, 3, 4), {1, 2})
    (3, 1, 2)
    """
    word = check_permutation(word)
    drop = set(drop)
    if not drop <= set(word):
        raise PermutationError(f"values {sorted(drop - set(word))} do not occur")
    return standardize([v for v in word if v not in drop])


def unstandardize(word: Sequence[int], labels: Iterable[int]) -> tuple[int, ...]:
    """Send the i-th smallest letter of ``word`` to the i-th smallest label."""
    word = check_permutation(word)
    labels = sorted(set(labels))
    if len(labels) != len(word):
        raise ValueError(f"need {len(word)} distinct labels, got {len(labels)}")
    return tuple(labels[v - 1] for v in word)


def swap_values(word: Sequence[int], a: int, b: int) -> tuple[int, ...]:
    """Exchange the letters ``a`` and ``b`` in place."""
    word = tuple(word)
    if a not in word or b not in word:
        raise PermutationError(f"{a} and {b} must both occur in the word")
    swap = {a: b, b: a}
    return tuple(swap.get(v, v) for v in word)


def parse_perm(text: str) -> Permutation:
    """Parse ``"7 4 8 5 9 1 6 2 3"``, or the compact ``"748591623"`` when every value is < 10."""
    text = text.strip()
    if not text:
        raise PermutationError("empty input")
    tokens = text.split()
    if len(tokens) == 1 and len(tokens[0]) > 1:
        if not tokens[0].isdigit() or "0" in tokens[0]:
            raise PermutationError(f"cannot parse permutation {text!r}")
        tokens = list(tokens[0])
    try:
        word = [int(t) for t in tokens]
    except ValueError:
        raise PermutationError(f"cannot parse permutation {text!r}") from None
    return check_permutation(word)


def format_perm(word: Sequence[int]) -> str:
    return " ".join(map(str, word))

