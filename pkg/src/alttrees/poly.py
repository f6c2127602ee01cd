"""
Generating polynomials in (q, p) and the count triangles a[n,k] = |A(n,k)|,
t[n,k] = |T(n,k)|, with checks of the recurrences they satisfy.

q tracks inversions and p tracks occurrences of the vincular pattern 31-2.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field

from .perm import inv, iter_alternating, occ_31_2
from .tree import count_trees_by_leaf

__all__ = [
    "BivariatePoly", "CountTable", "CheckResult", "ENUM_CAP",
    "poly_add", "poly_mul_monomial", "a_poly_direct", "a_poly_table",
    "a_poly_recurrence_check", "count_alternating_by_first",
    "enumerated_counts", "recurrence_counts", "count_tables",
    "count_recurrence_check", "kpp_identity_check",
    "format_triangle", "format_count_lines", "format_poly_lines", "row_sums",
]

# largest n for which tables are filled by brute-force enumeration by default
ENUM_CAP = 12


class BivariatePoly:
    """Sparse polynomial: ``{(q_exp, p_exp): coefficient}`` with no zero terms."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self._terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def monomial(cls, qexp: int, pexp: int, coeff: int = 1) -> BivariatePoly:
        return cls({(qexp, pexp): coeff})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def __add__(self, other: BivariatePoly) -> BivariatePoly:
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return BivariatePoly(terms)

    def shift(self, qexp: int, pexp: int) -> BivariatePoly:
        """Multiply by the monomial q^qexp p^pexp."""
        if qexp < 0 or pexp < 0:
            raise ValueError("exponents must be nonnegative")
        return BivariatePoly({(i + qexp, j + pexp): c for (i, j), c in self._terms.items()})

    def __call__(self, q: int, p: int) -> int:
        return sum(c * q**i * p**j for (i, j), c in self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def items(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._terms.items())

    def first_difference(self, other: BivariatePoly) -> tuple[tuple[int, int], int, int] | None:
        """Smallest exponent pair where the coefficients differ, with both coefficients."""
        for e in sorted(set(self._terms) | set(other._terms)):
            a, b = self._terms.get(e, 0), other._terms.get(e, 0)
            if a != b:
                return e, a, b
        return None

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self._terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0])):
            mono = "".join(
                s for s in (_power("q", i), _power("p", j)) if s
            )
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"BivariatePoly({self._terms!r})"


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def poly_add(f: BivariatePoly, g: BivariatePoly) -> BivariatePoly:
    return f + g


def poly_mul_monomial(f: BivariatePoly, qexp: int, pexp: int) -> BivariatePoly:
    return f.shift(qexp, pexp)


def _check_cell(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")


def a_poly_direct(n: int, k: int) -> BivariatePoly:
    """Sum of q^inv p^(31-2) over the alternating permutations of [n] starting with k."""
    _check_cell(n, k)
    terms: dict[tuple[int, int], int] = {}
    for w in iter_alternating(n, first=k):
        e = (inv(w), occ_31_2(w))
        terms[e] = terms.get(e, 0) + 1
    return BivariatePoly(terms)


def a_poly_table(n_max: int) -> dict[tuple[int, int], BivariatePoly]:
    """All a[n,k](q,p) for n <= n_max, in one pass per n."""
    table: dict[tuple[int, int], BivariatePoly] = {}
    for n in range(1, n_max + 1):
        rows: dict[int, dict[tuple[int, int], int]] = {k: {} for k in range(1, n + 1)}
        for w in iter_alternating(n):
            e = (inv(w), occ_31_2(w))
            rows[w[0]][e] = rows[w[0]].get(e, 0) + 1
        for k, terms in rows.items():
            table[n, k] = BivariatePoly(terms)
    return table


@dataclass
class CheckResult:
    """Per-cell outcome of an identity check over a triangle."""

    name: str
    cells: list[tuple[int, int]] = field(default_factory=list)
    failures: list[tuple[tuple[int, int], str]] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return len(self.cells) - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, cell: tuple[int, int], good: bool, detail: str) -> None:
        self.cells.append(cell)
        if not good:
            self.failures.append((cell, detail))


def _zero_poly(table, n, k):
    return table.get((n, k), BivariatePoly())


def a_poly_recurrence_check(
    n_max: int, table: Mapping[tuple[int, int], BivariatePoly] | None = None, n_min: int = 3
) -> CheckResult:
    """Check a[n,k] = q p a[n,k-1] + q^(2k-3) * sum_{i=k+1..n} a[n-2,i-2] cell by cell.

    Starts at n = 3: at (2, 2) the right side vanishes while a[2,2] = q.
    Pass ``n_min=2`` to see that boundary cell fail.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if table is None:
        table = a_poly_table(n_max)
    result = CheckResult("qp-recurrence")
    for n in range(max(n_min, 2), n_max + 1):
        for k in range(2, n + 1):
            tail = BivariatePoly()
            for i in range(k + 1, n + 1):
                tail = tail + _zero_poly(table, n - 2, i - 2)
            rhs = _zero_poly(table, n, k - 1).shift(1, 1) + tail.shift(2 * k - 3, 0)
            lhs = table[n, k]
            diff = lhs.first_difference(rhs)
            detail = ""
            if diff is not None:
                (i, j), a, b = diff
                detail = f"n={n} k={k}: coefficient of q^{i} p^{j} is {a} but recurrence gives {b}"
            result.record((n, k), diff is None, detail)
    return result


# (n, k) -> count; cells outside 1 <= k <= n are simply missing and read as 0
CountTable = dict[tuple[int, int], int]


def count_alternating_by_first(n: int) -> list[int]:
    """``result[k]`` = |A(n,k)| by backtracking over all alternating words (index 0 unused)."""
    counts = [0] * (n + 1)
    used = [False] * (n + 2)

    def grow(i: int, last: int) -> int:
        if i == n:
            return 1
        total = 0
        span = range(1, last) if i % 2 == 1 else range(last + 1, n + 1)
        for v in span:
            if not used[v]:
                used[v] = True
                total += grow(i + 1, v)
                used[v] = False
        return total

    for k in range(1, n + 1):
        used[k] = True
        counts[k] = grow(1, k)
        used[k] = False
    return counts


def enumerated_counts(n_max: int) -> tuple[CountTable, CountTable]:
    """(a, t) tables for n <= n_max by exhaustive enumeration of both families."""
    a: CountTable = {}
    t: CountTable = {}
    for n in range(1, n_max + 1):
        ca, ct = count_alternating_by_first(n), count_trees_by_leaf(n)
        for k in range(1, n + 1):
            a[n, k] = ca[k]
            t[n, k] = ct[k]
    return a, t


def _tail_sum(table: CountTable, n: int, k: int) -> int:
    return sum(table.get((n - 2, i - 2), 0) for i in range(k + 1, n + 1))


def recurrence_counts(n_max: int) -> CountTable:
    """Fill x[n,k] = x[n,k-1] + sum_{i=k+1..n} x[n-2,i-2] from x[1,1] = x[2,2] = 1, x[n,1] = 0."""
    table: CountTable = {}
    for n in range(1, n_max + 1):
        if n <= 2:
            table.update({(n, k): int(k == n) for k in range(1, n + 1)})
            continue
        table[n, 1] = 0
        for k in range(2, n + 1):
            table[n, k] = table[n, k - 1] + _tail_sum(table, n, k)
    return table


def count_tables(n_max: int, enum_cap: int = ENUM_CAP) -> tuple[CountTable, CountTable]:
    """(a, t) tables up to n_max.

    Rows n <= enum_cap come from enumeration, later rows from the recurrence.
    The two methods must agree on the enumerated rows.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    a, t = enumerated_counts(min(n_max, enum_cap))
    rec = recurrence_counts(n_max)
    for cell, value in a.items():
        assert rec[cell] == value == t[cell], f"tables disagree at {cell}"
    for cell, value in rec.items():
        a.setdefault(cell, value)
        t.setdefault(cell, value)
    return a, t


def count_recurrence_check(table: CountTable, n_max: int, name: str = "count-recurrence") -> CheckResult:
    """Check x[n,k] = x[n,k-1] + sum_{i=k+1..n} x[n-2,i-2] for 3 <= n <= n_max, 2 <= k <= n."""
    result = CheckResult(name)
    for n in range(3, n_max + 1):
        for k in range(2, n + 1):
            lhs = table[n, k]
            rhs = table.get((n, k - 1), 0) + _tail_sum(table, n, k)
            result.record((n, k), lhs == rhs, f"n={n} k={k}: {lhs} != {rhs}")
    return result


def kpp_identity_check(t: CountTable, n_max: int) -> CheckResult:
    """Check t[n,k] = t[n,k-1] + t[n-1,n-k+1] for 2 <= k <= n <= n_max."""
    result = CheckResult("kpp-identity")
    for n in range(2, n_max + 1):
        for k in range(2, n + 1):
            lhs = t[n, k]
            rhs = t.get((n, k - 1), 0) + t.get((n - 1, n - k + 1), 0)
            result.record((n, k), lhs == rhs, f"n={n} k={k}: {lhs} != {rhs}")
    return result


def format_triangle(table: CountTable, n_max: int) -> str:
    """Aligned rows ``"n: x[n,1] ... x[n,n]"``."""
    width = max(len(str(table.get((n, k), 0))) for n in range(1, n_max + 1) for k in range(1, n + 1))
    label = len(str(n_max))
    lines = []
    for n in range(1, n_max + 1):
        row = " ".join(str(table.get((n, k), 0)).rjust(width) for k in range(1, n + 1))
        lines.append(f"{str(n).rjust(label)}: {row}")
    return "\n".join(lines) + "\n"


def format_count_lines(table: CountTable) -> str:
    return "".join(f"{n} {k} {v}\n" for (n, k), v in sorted(table.items()))


def _poly_lines(table: Mapping[tuple[int, int], BivariatePoly]) -> Iterator[tuple[int, ...]]:
    for (n, k), f in table.items():
        for (i, j), c in f.items():
            yield n, k, i, j, c


def format_poly_lines(table: Mapping[tuple[int, int], BivariatePoly]) -> str:
    """Lines ``"n k i j coeff"`` for every term c q^i p^j of a[n,k], sorted."""
    return "".join(" ".join(map(str, row)) + "\n" for row in sorted(_poly_lines(table)))


def row_sums(table: CountTable, ns: Iterable[int]) -> list[int]:
    return [sum(table.get((n, k), 0) for k in range(1, n + 1)) for n in ns]
