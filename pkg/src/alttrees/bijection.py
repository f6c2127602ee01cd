"""
The refined bijection between alternating permutations starting with k and
0-1-2 increasing trees whose main chain ends at k, plus its inverse.

Both directions are naturally recursive (one level either drops two letters
or lowers the first letter by one), and the nesting can reach O(n^2) levels.
They run here as a loop instead: the descent records what each level did,
then the levels are replayed in reverse on a mutable tree (forward) or word
(inverse).

Sub-problems are never relabeled.  A level works on its own subset of the
original labels, and "k - 1" always means the predecessor of k in that
subset, found by bisection in a sorted label list.
"""

from __future__ import annotations

import enum
import math
from array import array
from bisect import bisect_left, insort
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .perm import Permutation, check_alternating, standardize
from .tree import IncreasingTree

__all__ = [
    "Case", "CaseStep", "CaseTrace", "ABSENT",
    "phi", "phi_inverse", "classify_forward", "classify_inverse",
]

# stands in for a missing child or sibling; larger than every label
ABSENT = math.inf


class Case(enum.Enum):
    BASE = "BASE"
    A_CASE = "A"
    B1_CASE = "B1"
    B2_CASE = "B2"
    INV_A1 = "A1"
    INV_A2 = "A2"
    INV_B = "B"

    @property
    def dual(self) -> Case:
        return _DUAL[self]


_DUAL = {
    Case.BASE: Case.BASE,
    Case.A_CASE: Case.INV_A1, Case.INV_A1: Case.A_CASE,
    Case.B1_CASE: Case.INV_A2, Case.INV_A2: Case.B1_CASE,
    Case.B2_CASE: Case.INV_B, Case.INV_B: Case.B2_CASE,
}
_CODES = list(Case)


@dataclass(frozen=True)
class CaseStep:
    case: Case
    n: int
    k: int
    # standardized permutation and tree of this level, when recorded
    word: Permutation | None = None
    tree: IncreasingTree | None = None

    def __str__(self) -> str:
        return f"({self.case.value}, {self.n}, {self.k})"


class CaseTrace:
    """Levels of one run, outermost first; the last one is always BASE.

    Stored as flat arrays since a run on n letters can have ~n^2/10 levels.
    """

    def __init__(self, codes: array, ns: array, ks: array,
                 words: list | None = None, trees: list | None = None):
        self._codes, self._ns, self._ks = codes, ns, ks
        self._words, self._trees = words, trees

    def __len__(self) -> int:
        return len(self._codes)

    def __getitem__(self, i: int) -> CaseStep:
        return CaseStep(
            _CODES[self._codes[i]], self._ns[i], self._ks[i],
            self._words[i] if self._words else None,
            self._trees[i] if self._trees else None,
        )

    def __iter__(self) -> Iterator[CaseStep]:
        return (self[i] for i in range(len(self)))

    @property
    def steps(self) -> list[CaseStep]:
        return list(self)

    def cases(self) -> list[Case]:
        return [_CODES[c] for c in self._codes]

    def levels(self) -> list[tuple[int, int]]:
        return list(zip(self._ns, self._ks))

    def __repr__(self) -> str:
        return f"CaseTrace([{', '.join(map(str, self))}])"


class _WorkTree:
    """Mutable tree whose vertices are node ids carrying swappable labels.

    Exchanging two labels is then O(1); the child order is never stored and
    the smaller child is found by comparing labels.
    """

    def __init__(self, parent: dict[int, int], labels: Sequence[int]):
        # node id = initial label
        self.label = {v: v for v in labels}
        self.node = dict(self.label)
        self.par: dict[int, int | None] = {v: parent.get(v) for v in labels}
        self.kids: dict[int, list[int]] = {v: [] for v in labels}
        for v in labels[1:]:
            self.kids[parent[v]].append(v)
        self.root = labels[0]
        self._next = max(labels) + 1

    def new_node(self, lab: int) -> int:
        v = self._next
        self._next += 1
        self.label[v] = lab
        self.node[lab] = v
        self.kids[v] = []
        return v

    def drop_node(self, v: int) -> None:
        del self.node[self.label[v]], self.label[v], self.par[v], self.kids[v]

    def attach(self, parent: int | None, kids: list[int]) -> None:
        assert len(kids) <= 2
        self.kids[parent] = kids
        for c in kids:
            self.par[c] = parent

    def replace_child(self, j: int | None, old: int, new: int) -> None:
        if j is None:
            self.root = new
        else:
            kids = self.kids[j]
            kids[kids.index(old)] = new
        self.par[new] = j

    def min_child(self, v: int) -> int | None:
        kids = self.kids[v]
        if not kids:
            return None
        if len(kids) == 1:
            return kids[0]
        a, b = kids
        return a if self.label[a] < self.label[b] else b

    def other_child(self, v: int | None, c: int) -> int | None:
        if v is None:
            return None
        kids = self.kids[v]
        if kids[0] != c:
            return kids[0]
        return kids[1] if len(kids) == 2 else None

    def chain_leaf(self) -> int:
        v = self.root
        while (c := self.min_child(v)) is not None:
            v = c
        return v

    def swap_labels(self, x: int, y: int) -> None:
        a, b = self.node[x], self.node[y]
        self.node[x], self.node[y] = b, a
        self.label[a], self.label[b] = y, x

    def label_or_absent(self, v: int | None) -> float:
        return ABSENT if v is None else self.label[v]

    def to_tree(self, standardize_labels: bool = False) -> IncreasingTree:
        # full validation on purpose: this is the integrity check of every run
        lab = self.label
        parent = {lab[v]: lab[p] for v, p in self.par.items() if p is not None}
        tree = IncreasingTree(parent, lab.values())
        return tree.standardized() if standardize_labels else tree


def _base_tree(labels: Sequence[int]) -> _WorkTree:
    return _WorkTree({labels[1]: labels[0]} if len(labels) == 2 else {}, labels)


_A, _B1, _B2 = _CODES.index(Case.A_CASE), _CODES.index(Case.B1_CASE), _CODES.index(Case.B2_CASE)
_IA1, _IA2, _IB = _CODES.index(Case.INV_A1), _CODES.index(Case.INV_A2), _CODES.index(Case.INV_B)
_BASE = _CODES.index(Case.BASE)


def phi(word: Sequence[int], record: bool = False) -> tuple[IncreasingTree, CaseTrace]:
    """Map an alternating permutation to its increasing tree.

    The main chain of the tree ends at ``word[0]``.  With ``record=True`` every
    trace step also carries the standardized word and tree of its level, each
    tree fully validated; that costs O(n log n) per level.
    """
    word = list(check_alternating(word))
    n = len(word)
    labels = list(range(1, n + 1))
    pos = {v: i for i, v in enumerate(word)}
    head = 0
    codes, ns, ks = array("b"), array("i"), array("i")
    removed = []  # (x, y) of every case-(a) level, outermost first
    words = [] if record else None
    while len(labels) > 2:
        y = word[head]
        r = bisect_left(labels, y)
        x = labels[r - 1]
        ns.append(len(labels))
        ks.append(r + 1)
        if record:
            words.append(standardize(word[head:]))
        if word[head + 1] == x:
            codes.append(_A)
            removed.append((x, y))
            del labels[r - 1:r + 1]
            head += 2
        else:
            codes.append(_B2)  # may become B1 on the way back
            px = pos[x]
            word[head], word[px] = x, y
            pos[x], pos[y] = head, px
    codes.append(_BASE)
    ns.append(len(labels))
    ks.append(len(labels))
    if record:
        words.append(standardize(word[head:]))

    work = _base_tree(labels)
    trees = [work.to_tree(True)] if record else None
    for level in range(len(codes) - 2, -1, -1):
        if codes[level] == _A:
            x, y = removed.pop()
            m = work.root
            while work.label[m] <= y:
                m = work.min_child(m)
            j = work.par[m]
            nx, ny = work.new_node(x), work.new_node(y)
            work.replace_child(j, m, nx)
            work.attach(nx, [ny, m])
            insort(labels, x)
            insort(labels, y)
        else:
            k = ks[level]
            x, y = labels[k - 2], labels[k - 1]
            nx, ny = work.node[x], work.node[y]
            j = work.par[nx]
            if j == work.par[ny]:
                codes[level] = _B1
                assert j is not None and not work.kids[nx]
                sub = sorted(work.kids[ny], key=work.label.__getitem__)
                work.attach(j, [nx] + sub[:1])
                work.attach(nx, [ny] + sub[1:])
                work.kids[ny] = []
            else:
                work.swap_labels(x, y)
        if record:
            trees.append(work.to_tree(True))

    if record:
        trees.reverse()
    return work.to_tree(), CaseTrace(codes, ns, ks, words, trees)


def phi_inverse(tree: IncreasingTree, record: bool = False) -> tuple[Permutation, CaseTrace]:
    """Recover the alternating permutation whose image is ``tree``."""
    if not tree.is_canonical():
        raise ValueError("phi_inverse expects a tree labeled by 1..n")
    n = tree.n
    labels = list(range(1, n + 1))
    work = _WorkTree(tree.parent_map(), labels)
    leaf = work.node[tree.chain_leaf()]
    codes, ns, ks = array("b"), array("i"), array("i")
    removed = []
    trees = [] if record else None
    while len(labels) > 2:
        y = work.label[leaf]
        r = bisect_left(labels, y)
        x = labels[r - 1]
        ns.append(len(labels))
        ks.append(r + 1)
        if record:
            trees.append(work.to_tree(True))
        nx, ny = work.node[x], leaf
        if work.par[ny] == nx:
            j = work.par[nx]
            m = work.other_child(nx, ny)
            s = work.other_child(j, nx)
            if work.label_or_absent(m) < work.label_or_absent(s):
                codes.append(_IA1)
                work.replace_child(j, nx, m)
                work.drop_node(nx)
                work.drop_node(ny)
                removed.append((x, y))
                del labels[r - 1:r + 1]
                leaf = work.chain_leaf()
            else:
                codes.append(_IA2)
                assert j is not None, "x can only be the root when n <= 2"
                work.attach(j, [nx, ny])
                work.attach(ny, [c for c in (s, m) if c is not None])
                work.kids[nx] = []
                leaf = nx
        else:
            codes.append(_IB)
            work.swap_labels(x, y)
            leaf = work.node[x]
    codes.append(_BASE)
    ns.append(len(labels))
    ks.append(len(labels))
    if record:
        trees.append(work.to_tree(True))

    # built back to front, so prepending two letters is an append
    rev = labels[:] if len(labels) == 1 else [labels[0], labels[1]]
    pos = {v: i for i, v in enumerate(rev)}
    words = [standardize(rev[::-1])] if record else None
    for level in range(len(codes) - 2, -1, -1):
        if codes[level] == _IA1:
            x, y = removed.pop()
            pos[x], pos[y] = len(rev), len(rev) + 1
            rev += [x, y]
            insort(labels, x)
            insort(labels, y)
        else:
            k = ks[level]
            x, y = labels[k - 2], labels[k - 1]
            px, py = pos[x], pos[y]
            rev[px], rev[py] = y, x
            pos[x], pos[y] = py, px
        if record:
            words.append(check_alternating(standardize(rev[::-1])))

    if record:
        words.reverse()
    return check_alternating(rev[::-1]), CaseTrace(codes, ns, ks, words, trees)


def classify_forward(word: Sequence[int]) -> Case:
    """Case taken by the outermost level of ``phi``.

    Telling (b1) from (b2) needs the tree of the next level, so this runs the
    whole map.
    """
    return phi(word)[1][0].case


def classify_inverse(tree: IncreasingTree) -> Case:
    """Case taken by the outermost level of ``phi_inverse``."""
    if tree.n <= 2:
        return Case.BASE
    y = tree.chain_leaf()
    x = tree.labels[bisect_left(tree.labels, y) - 1]
    if tree.parent(y) != x:
        return Case.INV_B
    j = tree.parent(x)
    m = next((c for c in tree.children(x) if c != y), ABSENT)
    s = ABSENT if j is None else next((c for c in tree.children(j) if c != x), ABSENT)
    return Case.INV_A1 if m < s else Case.INV_A2
