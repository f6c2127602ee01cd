"""Command-line front end: ``alttrees {map,unmap,enum,table,verify,dot}``."""

from __future__ import annotations

import argparse
import sys
from collections.abc import Callable, Iterable
from dataclasses import dataclass

from . import fixtures
from .bijection import phi, phi_inverse
from .perm import (
    NotAlternatingError, PermutationError, check_alternating, format_perm,
    inv, iter_alternating, occ_31_2, parse_perm,
)
from .poly import (
    ENUM_CAP, a_poly_recurrence_check, a_poly_table, count_recurrence_check,
    count_tables, enumerated_counts, format_count_lines, format_poly_lines,
    format_triangle, kpp_identity_check, recurrence_counts,
)
from .tree import (
    IncreasingTree, TreeParseError, TreeError, iter_trees, parse_tree,
    serialize_tree, to_dot,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INVALID = 3

# polynomial tables are built by enumerating A_n
POLY_CAP = 10


class CliError(Exception):
    def __init__(self, message: str, status: int):
        super().__init__(message)
        self.status = status


def _read_input(tokens: list[str]) -> str:
    if tokens:
        return " ".join(tokens)
    return sys.stdin.read()


def _load_perm(text: str) -> tuple[int, ...]:
    try:
        word = parse_perm(text)
    except PermutationError as e:
        raise CliError(str(e), EXIT_USAGE) from None
    try:
        return check_alternating(word)
    except NotAlternatingError as e:
        raise CliError(str(e), EXIT_INVALID) from None


def _load_tree(text: str) -> IncreasingTree:
    try:
        return parse_tree(text)
    except TreeParseError as e:
        raise CliError(str(e), EXIT_USAGE) from None
    except TreeError as e:
        raise CliError(f"invalid tree ({e.code}): {e}", EXIT_INVALID) from None


def cmd_map(args) -> int:
    word = _load_perm(_read_input(args.perm))
    tree, trace = phi(word)
    print(serialize_tree(tree))
    if args.trace:
        for step in trace:
            print(step)
    if args.dot:
        sys.stdout.write(to_dot(tree))
    return EXIT_OK


def cmd_unmap(args) -> int:
    tree = _load_tree(_read_input(args.tree))
    word, trace = phi_inverse(tree)
    print(format_perm(word))
    if args.trace:
        for step in trace:
            print(step)
    return EXIT_OK


def cmd_dot(args) -> int:
    text = _read_input(args.input)
    if args.perm:
        tree = phi(_load_perm(text))[0]
    else:
        tree = _load_tree(text)
    sys.stdout.write(to_dot(tree))
    return EXIT_OK


def cmd_enum(args) -> int:
    n, k = args.n, args.k
    if n < 1:
        raise CliError("n must be positive", EXIT_USAGE)
    if k is not None and not 1 <= k <= n:
        raise CliError(f"k={k} out of range [1, {n}]", EXIT_USAGE)
    if args.kind == "perms":
        items: Iterable = iter_alternating(n, first=k)
    else:
        items = (t for t in iter_trees(n) if k is None or t.chain_leaf() == k)
    if args.count_only:
        print(sum(1 for _ in items))
        return EXIT_OK
    out = sys.stdout
    for item in items:
        if args.kind == "trees":
            out.write(serialize_tree(item) + "\n")
        elif args.stats:
            out.write(f"{format_perm(item)}\t{inv(item)}\t{occ_31_2(item)}\n")
        else:
            out.write(format_perm(item) + "\n")
    return EXIT_OK


def cmd_table(args) -> int:
    n_max = args.n_max
    if n_max < 1:
        raise CliError("n_max must be positive", EXIT_USAGE)
    if args.kind == "counts":
        a, _ = count_tables(n_max)
        sys.stdout.write(format_count_lines(a) if args.machine else format_triangle(a, n_max))
        return EXIT_OK
    if n_max > POLY_CAP:
        raise CliError(f"polynomial tables are limited to n <= {POLY_CAP}", EXIT_USAGE)
    table = a_poly_table(n_max)
    if args.pretty:
        for (n, k), f in sorted(table.items()):
            print(f"{n} {k}: {f}")
    else:
        sys.stdout.write(format_poly_lines(table))
    return EXIT_OK


@dataclass
class Section:
    name: str
    span: str
    passed: int = 0
    failed: int = 0
    example: str = ""

    def check(self, good: bool, detail: Callable[[], str] | str) -> None:
        if good:
            self.passed += 1
            return
        self.failed += 1
        if not self.example:
            self.example = detail() if callable(detail) else detail

    def line(self) -> str:
        status = "PASS" if self.failed == 0 else "FAIL"
        text = f"{status}  {self.name:<22} {self.span:<14} passed={self.passed} failed={self.failed}"
        return text + (f"  first: {self.example}" if self.example else "")


class _Images:
    """Per-n cache of (word, tree) pairs and tree lists shared across sections."""

    def __init__(self):
        self._pairs: dict[int, list[tuple[tuple[int, ...], IncreasingTree]]] = {}
        self._trees: dict[int, list[IncreasingTree]] = {}

    def pairs(self, n):
        if n not in self._pairs:
            self._pairs[n] = [(w, phi(w)[0]) for w in iter_alternating(n)]
        return self._pairs[n]

    def trees(self, n):
        if n not in self._trees:
            self._trees[n] = list(iter_trees(n))
        return self._trees[n]


def _fmt_word(word) -> str:
    return format_perm(word)


def run_verify(args) -> list[Section]:
    cache = _Images()
    sections = []

    fwd = Section("roundtrip-perms", f"n<={args.roundtrip_n}")
    back = Section("roundtrip-trees", f"n<={args.roundtrip_n}")
    for n in range(1, args.roundtrip_n + 1):
        for w, t in cache.pairs(n):
            got = phi_inverse(t)[0]
            fwd.check(got == w, lambda: f"{_fmt_word(w)} -> {serialize_tree(t)} -> {_fmt_word(got)}")
        for t in cache.trees(n):
            w = phi_inverse(t)[0]
            again = phi(w)[0]
            back.check(again == t, lambda: f"{serialize_tree(t)} -> {_fmt_word(w)} -> {serialize_tree(again)}")
    sections += [fwd, back]

    refine = Section("refinement", f"n<={args.refine_n}")
    for n in range(1, args.refine_n + 1):
        for w, t in cache.pairs(n):
            refine.check(t.chain_leaf() == w[0], lambda: f"{_fmt_word(w)}: chain leaf {t.chain_leaf()}")
    sections.append(refine)

    bij = Section("bijection-per-cell", f"n<={args.bijection_n}")
    for n in range(1, args.bijection_n + 1):
        for k in range(1, n + 1):
            images = [t for w, t in cache.pairs(n) if w[0] == k]
            target = {t for t in cache.trees(n) if t.chain_leaf() == k}
            good = len(set(images)) == len(images) and set(images) == target
            bij.check(good, f"n={n} k={k}: {len(set(images))} distinct images of {len(images)}, {len(target)} trees")
    sections.append(bij)

    a_enum, t_enum = enumerated_counts(min(args.count_n, ENUM_CAP))
    rec = recurrence_counts(args.count_n)
    agree = Section("tables-agree", f"n<={min(args.count_n, ENUM_CAP)}")
    for cell in sorted(a_enum):
        agree.check(a_enum[cell] == t_enum[cell] == rec[cell],
                    f"{cell}: a={a_enum[cell]} t={t_enum[cell]} recurrence={rec[cell]}")
    sections.append(agree)
    for name, table in (("a-recurrence", a_enum), ("t-recurrence", t_enum)):
        sections.append(_from_check(count_recurrence_check(table, min(args.count_n, ENUM_CAP), name),
                                    f"3<=n<={min(args.count_n, ENUM_CAP)}"))

    poly_table = a_poly_table(args.poly_n)
    sections.append(_from_check(a_poly_recurrence_check(args.poly_n, poly_table), f"3<=n<={args.poly_n}"))
    at_one = Section("qp-at-(1,1)", f"n<={args.poly_n}")
    for (n, k), f in sorted(poly_table.items()):
        at_one.check(f(1, 1) == a_enum.get((n, k), rec.get((n, k))), f"n={n} k={k}: {f(1, 1)}")
    sections.append(at_one)

    if args.kpp_n <= min(args.count_n, ENUM_CAP):
        t_kpp = t_enum
    else:
        _, t_kpp = enumerated_counts(min(args.kpp_n, ENUM_CAP))
    sections.append(_from_check(kpp_identity_check(t_kpp, min(args.kpp_n, ENUM_CAP)),
                                f"2<=n<={min(args.kpp_n, ENUM_CAP)}"))

    sections.append(_golden(args.fixture))
    return sections


def _from_check(result, span: str) -> Section:
    sec = Section(result.name, span, passed=result.passed, failed=len(result.failures))
    if result.failures:
        sec.example = result.failures[0][1]
    return sec


def _golden(extra: list[str]) -> Section:
    sec = Section("golden-fixtures", "chain+A4")
    for g in fixtures.CHAIN + fixtures.A4:
        word = parse_perm(g.word)
        tree = phi(word)[0]
        got = (inv(word), occ_31_2(word), serialize_tree(tree), tree.chain_leaf())
        want = (g.inv, g.occ_31_2, g.tree, g.leaf)
        sec.check(got == want, f"{g.word}: got {got}, expected {want}")

    _, trace = phi(parse_perm(fixtures.CHAIN_ORDER[0]), record=True)
    visited = ["".join(map(str, s.word)) for s in trace]
    sec.check(visited == fixtures.CHAIN_ORDER, f"chain visits {visited}")

    for pair in extra:
        word_text, _, tree_text = pair.partition("=")
        try:
            word = check_alternating(parse_perm(word_text))
            got = serialize_tree(phi(word)[0])
            want = serialize_tree(parse_tree(tree_text))
        except ValueError as e:
            sec.check(False, f"{pair}: {e}")
            continue
        sec.check(got == want, f"{word_text.strip()}: got {got}, expected {want}")
    return sec


def cmd_verify(args) -> int:
    sections = run_verify(args)
    for sec in sections:
        print(sec.line())
    bad = sum(1 for s in sections if s.failed)
    print(f"{len(sections) - bad}/{len(sections)} sections passed")
    return EXIT_OK if bad == 0 else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alttrees",
        description="Alternating permutations <-> 0-1-2 increasing trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("map", help="permutation -> tree parent array")
    p.add_argument("perm", nargs="*", help='e.g. "7 4 8 5 9 1 6 2 3" (stdin if omitted)')
    p.add_argument("--trace", action="store_true", help="print one (case, n, k) line per level")
    p.add_argument("--dot", action="store_true", help="append the tree in Graphviz DOT")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("unmap", help="tree parent array -> permutation")
    p.add_argument("tree", nargs="*", help='e.g. "0 1 1 3 4" (stdin if omitted)')
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_unmap)

    p = sub.add_parser("dot", help="Graphviz DOT for a tree (or for the image of a permutation)")
    p.add_argument("input", nargs="*")
    p.add_argument("--perm", action="store_true", help="input is a permutation; map it first")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("enum", help="list alternating permutations or trees")
    p.add_argument("kind", choices=["perms", "trees"])
    p.add_argument("n", type=int)
    p.add_argument("--k", type=int, help="first letter / chain leaf")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--stats", action="store_true", help="append inv and 31-2 columns (perms)")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("table", help="count or (q,p)-polynomial triangles")
    p.add_argument("kind", choices=["counts", "poly"])
    p.add_argument("n_max", type=int)
    p.add_argument("--machine", action="store_true", help='counts as lines "n k value"')
    p.add_argument("--pretty", action="store_true", help="poly as readable polynomials")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the exhaustive checks")
    p.add_argument("--roundtrip-n", type=int, default=10)
    p.add_argument("--refine-n", type=int, default=10)
    p.add_argument("--bijection-n", type=int, default=10)
    p.add_argument("--count-n", type=int, default=12)
    p.add_argument("--poly-n", type=int, default=9)
    p.add_argument("--kpp-n", type=int, default=10)
    p.add_argument("--fixture", action="append", default=[], metavar="PERM=TREE",
                   help="extra golden pair to check, repeatable")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"alttrees: {e}", file=sys.stderr)
        return e.status


if __name__ == "__main__":
    sys.exit(main())
