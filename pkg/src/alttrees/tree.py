"""
0-1-2 increasing trees: rooted, labels increase away from the root, and every
vertex has at most two children.

The canonical object is labeled by [n] and stored as a parent array, which is
also the text format (``"0 1 1 3 4"``: vertex v's parent at position v, 0 for
the root).  Trees over other increasing label sets appear while the bijection
works on sub-problems, so the type accepts any finite set of positive labels
and roots the tree at the smallest one.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping

__all__ = [
    "IncreasingTree", "TreeError", "TreeParseError", "LabelError",
    "IncreasingError", "DegreeError", "StructureError",
    "validate", "main_chain", "chain_leaf", "relabel",
    "iter_trees", "enumerate_trees", "enumerate_trees_with_leaf", "count_trees_by_leaf",
    "parse_tree", "serialize_tree", "to_dot",
]


class TreeError(ValueError):
    code = "tree"


class TreeParseError(TreeError):
    code = "parse"


class LabelError(TreeError):
    code = "labels"


class IncreasingError(TreeError):
    code = "increasing"


class DegreeError(TreeError):
    code = "degree"


class StructureError(TreeError):
    code = "structure"


class IncreasingTree:
    """An immutable 0-1-2 increasing tree.

    ``parent`` maps every non-root vertex to its parent.  ``labels`` defaults
    to ``{1, ..., len(parent) + 1}``; the root is always the smallest label.
    """

    __slots__ = ("_labels", "_parent", "_children", "_key")

    def __init__(self, parent: Mapping[int, int], labels: Iterable[int] | None = None):
        parent = dict(parent)
        if labels is None:
            labels = range(1, len(parent) + 2)
        labels = tuple(sorted(set(labels)))
        _check(parent, labels)
        self._init(parent, labels)

    def _init(self, parent: dict[int, int], labels: tuple[int, ...]) -> None:
        children: dict[int, list[int]] = {v: [] for v in labels}
        for v in labels[1:]:
            children[parent[v]].append(v)
        self._labels = labels
        self._parent = parent
        self._children = {v: tuple(c) for v, c in children.items()}
        self._key = (labels, tuple(parent[v] for v in labels[1:]))

    @classmethod
    def _trusted(cls, parent: dict[int, int], labels: tuple[int, ...]) -> IncreasingTree:
        # skips validation; labels must be sorted and parent well formed
        tree = cls.__new__(cls)
        tree._init(parent, labels)
        return tree

    @classmethod
    def from_parent_array(cls, parents: Iterable[int]) -> IncreasingTree:
        """Build from a 1-based parent array with 0 marking the root."""
        parents = list(parents)
        if not parents:
            raise TreeParseError("empty parent array")
        roots = [v for v, p in enumerate(parents, start=1) if p == 0]
        if len(roots) != 1:
            raise StructureError(f"expected exactly one root, found {len(roots)}")
        if roots[0] != 1:
            raise LabelError(f"the root must be vertex 1, got {roots[0]}")
        return cls({v: p for v, p in enumerate(parents, start=1) if p != 0})

    @property
    def labels(self) -> tuple[int, ...]:
        return self._labels

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def root(self) -> int:
        return self._labels[0]

    def parent(self, v: int) -> int | None:
        if v not in self._children:
            raise KeyError(v)
        return self._parent.get(v)

    def children(self, v: int) -> tuple[int, ...]:
        return self._children[v]

    def parent_map(self) -> dict[int, int]:
        return dict(self._parent)

    def is_canonical(self) -> bool:
        return self._labels[-1] == len(self._labels)

    def main_chain(self) -> tuple[int, ...]:
        path = [self.root]
        while self._children[path[-1]]:
            path.append(self._children[path[-1]][0])
        return tuple(path)

    def chain_leaf(self) -> int:
        return self.main_chain()[-1]

    def relabel(self, labels: Iterable[int]) -> IncreasingTree:
        """Order-preserving relabeling onto ``labels``; the shape is unchanged."""
        new = tuple(sorted(set(labels)))
        if len(new) != self.n:
            raise ValueError(f"need {self.n} distinct labels, got {len(new)}")
        to = dict(zip(self._labels, new))
        parent = {to[v]: to[p] for v, p in self._parent.items()}
        assert all(p < v for v, p in parent.items())
        return IncreasingTree._trusted(parent, new)

    def standardized(self) -> IncreasingTree:
        return self.relabel(range(1, self.n + 1))

    def parent_array(self) -> tuple[int, ...]:
        if not self.is_canonical():
            raise ValueError("parent arrays need labels 1..n; standardize first")
        return (0,) + self._key[1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IncreasingTree):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        if self.is_canonical():
            return f"IncreasingTree({serialize_tree(self)!r})"
        return f"IncreasingTree({self._parent!r}, labels={self._labels!r})"


def _check(parent: dict[int, int], labels: tuple[int, ...]) -> None:
    if not labels:
        raise LabelError("a tree needs at least one vertex")
    if labels[0] < 1:
        raise LabelError("labels must be positive integers")
    root = labels[0]
    if root in parent:
        raise LabelError(f"root {root} cannot have a parent")
    if set(parent) != set(labels[1:]):
        missing = sorted(set(labels[1:]) - set(parent))
        extra = sorted(set(parent) - set(labels))
        raise LabelError(f"vertex set mismatch: missing parents for {missing}, unknown vertices {extra}")
    if not set(parent.values()) <= set(labels):
        raise StructureError(f"parents {sorted(set(parent.values()) - set(labels))} are not vertices")
    # every vertex must reach the root without revisiting anything
    reaches_root = {root}
    for v in labels:
        path = []
        seen = set()
        while v not in reaches_root:
            if v in seen:
                raise StructureError(f"cycle through vertex {v}")
            seen.add(v)
            path.append(v)
            v = parent[v]
        reaches_root.update(path)
    for v, p in parent.items():
        if p >= v:
            raise IncreasingError(f"parent {p} of vertex {v} is not smaller")
    degree: dict[int, int] = {}
    for p in parent.values():
        degree[p] = degree.get(p, 0) + 1
        if degree[p] > 2:
            raise DegreeError(f"vertex {p} has more than two children")


def validate(parent: Mapping[int, int], labels: Iterable[int] | None = None) -> IncreasingTree:
    """Check a raw parent map and return the tree, raising a specific ``TreeError`` otherwise."""
    return IncreasingTree(parent, labels)


def main_chain(tree: IncreasingTree) -> tuple[int, ...]:
    return tree.main_chain()


def chain_leaf(tree: IncreasingTree) -> int:
    return tree.chain_leaf()


def relabel(tree: IncreasingTree, labels: Iterable[int]) -> IncreasingTree:
    return tree.relabel(labels)


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")


def iter_trees(n: int) -> Iterator[IncreasingTree]:
    """All trees on [n], lexicographic in the parent array.

    Vertex v (in increasing order) is hung below every vertex that still has a
    free slot, so each tree is produced exactly once.
    """
    _check_n(n)
    labels = tuple(range(1, n + 1))
    degree = [0] * (n + 1)
    parent: dict[int, int] = {}

    def grow(v: int) -> Iterator[IncreasingTree]:
        if v > n:
            yield IncreasingTree._trusted(dict(parent), labels)
            return
        for u in range(1, v):
            if degree[u] < 2:
                degree[u] += 1
                parent[v] = u
                yield from grow(v + 1)
                degree[u] -= 1
        parent.pop(v, None)

    yield from grow(2)


def enumerate_trees(n: int) -> list[IncreasingTree]:
    return list(iter_trees(n))


def enumerate_trees_with_leaf(n: int, k: int) -> list[IncreasingTree]:
    _check_n(n)
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range [1, {n}]")
    return [t for t in iter_trees(n) if t.chain_leaf() == k]


def count_trees_by_leaf(n: int) -> list[int]:
    """``result[k]`` = number of trees on [n] whose main chain ends at k (index 0 unused).

    Same insertion scheme as ``iter_trees`` without materializing trees: hanging
    the new largest vertex below the current chain leaf extends the chain,
    anywhere else leaves it alone.
    """
    _check_n(n)
    counts = [0] * (n + 1)
    degree = [0] * (n + 1)

    def grow(v: int, leaf: int) -> None:
        if v > n:
            counts[leaf] += 1
            return
        for u in range(1, v):
            if degree[u] < 2:
                degree[u] += 1
                grow(v + 1, v if u == leaf else leaf)
                degree[u] -= 1

    grow(2, 1)
    return counts


def parse_tree(text: str) -> IncreasingTree:
    tokens = text.split()
    if not tokens:
        raise TreeParseError("empty input")
    try:
        parents = [int(t) for t in tokens]
    except ValueError:
        raise TreeParseError(f"cannot parse parent array {text.strip()!r}") from None
    if any(p < 0 or p > len(parents) for p in parents):
        raise LabelError(f"parent entries must lie in 0..{len(parents)}")
    return IncreasingTree.from_parent_array(parents)


def serialize_tree(tree: IncreasingTree) -> str:
    return " ".join(map(str, tree.parent_array()))


def to_dot(tree: IncreasingTree, name: str = "") -> str:
    """Graphviz digraph; main-chain edges are drawn bold."""
    chain = tree.main_chain()
    chain_edges = set(zip(chain, chain[1:]))
    head = f"digraph {name} {{" if name else "digraph {"
    lines = [head]
    lines += [f"  {v};" for v in tree.labels]
    for v in tree.labels:
        for w in tree.children(v):
            style = " [style=bold]" if (v, w) in chain_edges else ""
            lines.append(f"  {v} -> {w}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
