"""Brute-force reference implementations, deliberately naive and independent
of the package code paths they check."""

from itertools import permutations, product


def brute_alternating(n):
    """Filter all n! words."""
    out = []
    for w in permutations(range(1, n + 1)):
        if all((w[i] > w[i + 1]) if i % 2 == 0 else (w[i] < w[i + 1]) for i in range(n - 1)):
            out.append(w)
    return out


def brute_inv(w):
    return len([(i, j) for i, j in product(range(len(w)), repeat=2) if i < j and w[i] > w[j]])


def brute_occ_31_2(w):
    # triples of positions (a, a+1, c) with c > a+1 and w[a+1] < w[c] < w[a]
    n = len(w)
    return len([
        (a, c) for a in range(n - 1) for c in range(n)
        if c > a + 1 and w[a + 1] < w[c] < w[a]
    ])


def brute_trees(n):
    """Every parent array with parent(v) < v, kept if no vertex has 3+ children."""
    out = []
    for parents in product(*[range(1, v) for v in range(2, n + 1)]):
        if all(parents.count(u) <= 2 for u in range(1, n + 1)):
            out.append((0,) + parents)
    return out


def brute_chain_leaf(parents):
    n = len(parents)
    v = 1
    while True:
        kids = [c for c in range(1, n + 1) if parents[c - 1] == v]
        if not kids:
            return v
        v = min(kids)


def entringer(n_max):
    """Seidel-Entringer triangle E[n][k], 0 <= k <= n, by the boustrophedon rule.

    E[n][k] = E[n][k-1] + E[n-1][n-k] with E[0][0] = 1 and E[n][0] = 0.
    """
    rows = [[1]]
    for n in range(1, n_max + 1):
        row = [0]
        for k in range(1, n + 1):
            row.append(row[k - 1] + rows[n - 1][n - k])
        rows.append(row)
    return rows


def backtrack_alternating_count(n):
    """Count down-up words of [n] by extending prefixes one letter at a time."""
    def extend(prefix, rest):
        if not rest:
            return 1
        down = len(prefix) % 2 == 1
        return sum(
            extend(prefix + [v], rest - {v})
            for v in rest if (v < prefix[-1]) == down
        )
    return sum(extend([v], frozenset(range(1, n + 1)) - {v}) for v in range(1, n + 1))
