import io

import pytest

from isoprobe.cli import main
from isoprobe.generators import complete, cycle
from isoprobe.graph import Permutation, disjoint_union, is_isomorphism, parse_dimacs, to_dimacs


def run(*argv):
    out = io.StringIO()
    return main(list(argv), out), out.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, gr):
        p = tmp_path / name
        p.write_text(to_dimacs(gr))
        return str(p)
    return write


def test_isomorphic_output(files):
    a, b = files("a", cycle(5)), files("b", cycle(5))
    code, text = run(a, b)
    lines = text.splitlines()
    assert code == 0 and lines[0] == "isomorphic"
    images = [int(x) for x in lines[1].split(":")[1].split()]
    assert is_isomorphism(cycle(5), cycle(5), Permutation.from_one_based(images))


def test_explicit_test_subcommand(files):
    assert run("test", files("a", complete(3)), files("b", complete(3)))[0] == 0


def test_probably_non_isomorphic(files):
    a, b = files("a", cycle(6)), files("b", disjoint_union(cycle(3), cycle(3)))
    code, text = run("--epsilon", "0.05", "--stats", a, b)
    assert code == 1
    assert text.splitlines()[0] == "non-isomorphic (error < 0.05)"
    for key in ("walks:", "nodes:", "leaves: full=", "automorphisms:", "c:"):
        assert key in text


def test_certified(files):
    code, text = run(files("a", cycle(4)), files("b", cycle(5)))
    assert code == 1 and text.startswith("non-isomorphic (certified)")


def test_inconclusive(files):
    a, b = files("a", cycle(6)), files("b", disjoint_union(cycle(3), cycle(3)))
    code, text = run("--max-walks", "2", a, b)
    assert code == 3 and text.strip() == "inconclusive"


def test_parse_error(files, tmp_path, capsys):
    bad = tmp_path / "bad"
    bad.write_text("p edge 2 1\ne 1 3\n")
    assert run(str(bad), files("b", cycle(3)))[0] == 2
    assert "line 2" in capsys.readouterr().err


def test_missing_file_and_bad_args(files):
    assert run("/nonexistent/x", "/nonexistent/y")[0] == 2
    assert run("--epsilon", "2", files("a", cycle(3)), files("b", cycle(3)))[0] == 2
    with pytest.raises(SystemExit) as exc:
        run("--seed", "-1", "a", "b")
    assert exc.value.code == 2


def test_gen_round_trip(tmp_path):
    prefix = str(tmp_path / "pair")
    code, _ = run("gen", "--family", "random_regular", "--n", "20", "--d", "3",
                  "--relation", "isomorphic", "--seed", "9", "--out", prefix)
    assert code == 0
    first = (tmp_path / "pair_1.dimacs").read_text()
    run("gen", "--family", "random_regular", "--n", "20", "--d", "3", "--seed", "9", "--out", prefix)
    assert (tmp_path / "pair_1.dimacs").read_text() == first
    assert parse_dimacs(first).n == 20
    code, _ = run(str(tmp_path / "pair_1.dimacs"), str(tmp_path / "pair_2.dimacs"))
    assert code == 0


def test_gen_missing_param(tmp_path):
    assert run("gen", "--family", "gnp", "--n", "5", "--out", str(tmp_path / "x"))[0] == 2


def test_verify_small():
    code, text = run("verify", "--max-n", "5", "--random", "0")
    assert code == 0
    assert text.count("PASS") == len(text.splitlines()) > 5


def test_small_epsilon_on_c6_pair(files):
    a, b = files("a", cycle(6)), files("b", disjoint_union(cycle(3), cycle(3)))
    code, text = run("--epsilon", "0.001", a, b)
    assert code == 1
    assert text.splitlines()[0] in ("non-isomorphic (error < 0.001)", "non-isomorphic (certified)")
