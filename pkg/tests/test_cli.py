import io

import pytest

from alttrees.cli import EXIT_FAILED, EXIT_INVALID, EXIT_OK, EXIT_USAGE, main

SMALL = ["--roundtrip-n", "4", "--refine-n", "4", "--bijection-n", "4",
         "--count-n", "6", "--poly-n", "4", "--kpp-n", "5"]


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


@pytest.mark.parametrize("perm, tree", [
    ("2 1 5 3 4", "0 1 1 3 4"),
    ("1", "0"),
    ("7 4 8 5 9 1 6 2 3", "0 1 1 2 4 3 5 4 5"),
    ("41523", "0 1 1 2 3"),
])
def test_map(capsys, perm, tree):
    assert run(capsys, "map", perm) == (EXIT_OK, tree + "\n", "")


@pytest.mark.parametrize("tree, perm", [
    ("0 1 1 3 4", "2 1 5 3 4"),
    ("0", "1"),
    ("0 1 1 2 3", "4 1 5 2 3"),
])
def test_unmap(capsys, tree, perm):
    assert run(capsys, "unmap", tree) == (EXIT_OK, perm + "\n", "")


def test_map_unmap_compose(capsys):
    for perm in ["2 1 5 3 4", "7 4 8 5 9 1 6 2 3", "3 2 4 1"]:
        _, tree, _ = run(capsys, "map", perm)
        assert run(capsys, "unmap", tree.strip())[1] == perm + "\n"


def test_split_arguments_and_stdin(capsys, monkeypatch):
    assert run(capsys, "map", "2", "1", "5", "3", "4")[1] == "0 1 1 3 4\n"
    assert run(capsys, "map", stdin="2 1 5 3 4\n", monkeypatch=monkeypatch)[1] == "0 1 1 3 4\n"
    assert run(capsys, "unmap", stdin="0 1 1 3 4", monkeypatch=monkeypatch)[1] == "2 1 5 3 4\n"


@pytest.mark.parametrize("argv, status", [
    (["map", "2 x 3"], EXIT_USAGE),
    (["map", "1 1 2"], EXIT_USAGE),
    (["map", "1 2 3"], EXIT_INVALID),
    (["unmap", "0 a"], EXIT_USAGE),
    (["unmap", "0 1 1 1"], EXIT_INVALID),
    (["unmap", "0 2 1"], EXIT_INVALID),
    (["enum", "perms", "0"], EXIT_USAGE),
    (["enum", "perms", "4", "--k", "5"], EXIT_USAGE),
    (["table", "poly", "11"], EXIT_USAGE),
])
def test_error_statuses(capsys, argv, status):
    got, out, err = run(capsys, *argv)
    assert got == status and out == "" and err.startswith("alttrees: ")


def test_parse_and_validation_statuses_differ(capsys):
    assert run(capsys, "map", "3 x")[0] != run(capsys, "map", "1 2 3")[0]


def test_bad_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as e:
        main(["bogus"])
    assert e.value.code == EXIT_USAGE


def test_map_trace(capsys):
    _, out, _ = run(capsys, "map", "--trace", "7 4 8 5 9 1 6 2 3")
    lines = out.splitlines()
    assert lines[0] == "0 1 1 2 4 3 5 4 5"
    assert lines[1:] == [
        "(B2, 9, 7)", "(B1, 9, 6)", "(A, 9, 5)", "(B2, 7, 6)", "(A, 7, 5)",
        "(B2, 5, 5)", "(B2, 5, 4)", "(B1, 5, 3)", "(A, 5, 2)", "(B1, 3, 3)", "(A, 3, 2)", "(BASE, 1, 1)",
    ]


def test_unmap_trace_is_dual(capsys):
    _, fwd, _ = run(capsys, "map", "--trace", "7 4 8 5 9 1 6 2 3")
    _, back, _ = run(capsys, "unmap", "--trace", "0 1 1 2 4 3 5 4 5")
    dual = {"A": "A1", "B1": "A2", "B2": "B", "BASE": "BASE"}
    f, b = fwd.splitlines(), back.splitlines()
    assert b[0] == "7 4 8 5 9 1 6 2 3"
    assert len(f) == len(b)
    for x, y in zip(f[1:], b[1:]):
        case, rest = x[1:].split(",", 1)
        assert y == f"({dual[case]},{rest}"


def test_dot(capsys):
    _, out, _ = run(capsys, "map", "--dot", "2 1 5 3 4")
    assert out.splitlines()[0] == "0 1 1 3 4"
    assert "digraph {" in out and "  1 -> 2 [style=bold];" in out and "  1 -> 3;" in out
    _, dot, _ = run(capsys, "dot", "0 1 1 3 4")
    assert out.endswith(dot)
    assert run(capsys, "dot", "--perm", "2 1 5 3 4")[1] == dot


@pytest.mark.parametrize("argv, out", [
    (["enum", "perms", "4", "--count-only"], "5\n"),
    (["enum", "trees", "4", "--k", "3", "--count-only"], "2\n"),
    (["enum", "perms", "1"], "1\n"),
    (["enum", "trees", "10", "--count-only"], "50521\n"),
    (["enum", "perms", "4", "--k", "3"], "3 1 4 2\n3 2 4 1\n"),
    (["enum", "trees", "3"], "0 1 1\n0 1 2\n"),
])
def test_enum(capsys, argv, out):
    assert run(capsys, *argv) == (EXIT_OK, out, "")


def test_enum_stats(capsys):
    _, out, _ = run(capsys, "enum", "perms", "4", "--stats")
    assert out.splitlines() == ["2 1 4 3\t2\t0", "3 1 4 2\t3\t1", "3 2 4 1\t4\t0",
                                "4 1 3 2\t4\t2", "4 2 3 1\t5\t1"]


def test_table(capsys):
    _, out, _ = run(capsys, "table", "counts", "4")
    assert "4: 0 1 2 2" in out.splitlines()
    assert run(capsys, "table", "counts", "1")[1] == "1: 1\n"
    _, machine, _ = run(capsys, "table", "counts", "4", "--machine")
    assert machine.splitlines()[-4:] == ["4 1 0", "4 2 1", "4 3 2", "4 4 2"]
    _, poly, _ = run(capsys, "table", "poly", "4")
    assert "4 3 3 1 1" in poly.splitlines() and "4 3 4 0 1" in poly.splitlines()
    _, pretty, _ = run(capsys, "table", "poly", "4", "--pretty")
    assert "4 3: q^3p + q^4" in pretty.splitlines()


def test_table_counts_beyond_enumeration(capsys):
    _, out, _ = run(capsys, "table", "counts", "14", "--machine")
    assert "14 14 22368256" in out.splitlines()


def test_verify_small(capsys):
    status, out, _ = run(capsys, "verify", *SMALL)
    assert status == EXIT_OK
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1] == "11/11 sections passed"


def test_verify_roundtrip_3(capsys):
    argv = SMALL.copy()
    argv[1] = "3"
    _, out, _ = run(capsys, "verify", *argv)
    rows = {line.split()[1]: line for line in out.splitlines() if line.startswith(("PASS", "FAIL"))}
    # A_1, A_2, A_3 have 1 + 1 + 2 elements; |A_3| = |T_3| = 2
    assert "passed=4 failed=0" in rows["roundtrip-perms"]
    assert "passed=4 failed=0" in rows["roundtrip-trees"]


def test_verify_corrupted_fixture(capsys):
    status, out, _ = run(capsys, "verify", *SMALL, "--fixture", "2 1 5 3 4=0 1 1 2 4")
    assert status == EXIT_FAILED
    line = next(x for x in out.splitlines() if "golden-fixtures" in x)
    assert line.startswith("FAIL") and "failed=1" in line
    assert "got 0 1 1 3 4, expected 0 1 1 2 4" in line
    assert out.splitlines()[-1] == "10/11 sections passed"


def test_verify_good_extra_fixture(capsys):
    status, out, _ = run(capsys, "verify", *SMALL, "--fixture", "41523=0 1 1 2 3")
    assert status == EXIT_OK


def test_deterministic(capsys):
    for argv in (["map", "--trace", "--dot", "7 4 8 5 9 1 6 2 3"], ["enum", "trees", "5"],
                 ["table", "poly", "6"], ["verify", *SMALL]):
        assert run(capsys, *argv) == run(capsys, *argv)
