import json

import pytest

from tournament_lab.cli import main
from tournament_lab.core import C3, encode_code, encode_trn
from tournament_lab.verify import check_ids


@pytest.fixture
def run(capsys, tmp_path_factory):
    cache = str(tmp_path_factory.getbasetemp() / "cli-cache")

    def go(*argv):
        code = main(["--cache-dir", cache, "--jobs", "1", *argv])
        out, err = capsys.readouterr()
        return code, out, err

    return go


def test_analyze_c3(run):
    code, out, _ = run("analyze", "T3:A0")
    js = json.loads(out)
    assert code == 0
    assert js["indecomposable"] is True and js["big_delta"] == 0 and js["small_delta"] is None
    assert list(js) == [
        "n", "code", "indecomposable", "nontrivial_modules", "minimal_comodules", "big_delta",
        "small_delta", "delta_decomposition", "witness_arcs", "delta_maximal", "Delta_maximal", "forms",
    ]


def test_analyze_transitive_five(run):
    code, out, _ = run("analyze", "name:transitive(5)")
    js = json.loads(out)
    assert (js["big_delta"], js["small_delta"]) == (3, 2)
    assert js["delta_decomposition"] == [[0], [4], [1, 2]]
    assert len(js["witness_arcs"]) == 2 and js["forms"] == ["F1", "F2"]


def test_analyze_four_vertices(run, tmp_path):
    path = tmp_path / "c4.trn"
    path.write_text("4\n0100\n0011\n1001\n1000\n")
    code, out, _ = run("analyze", str(path))
    assert code == 0 and json.loads(out)["small_delta"] is None


def test_analyze_exit_codes(run):
    assert run("analyze", "T3:ZZ")[0] == 2
    assert run("analyze", "name:nope")[0] == 2
    assert run("analyze", "/no/such/file.trn")[0] == 2
    big = encode_code(__import__("tournament_lab.core", fromlist=["transitive"]).transitive(23))
    code, _, err = run("analyze", big)
    assert code == 3 and "error" in err


def test_enum(run):
    assert run("enum", "5", "--count-only")[1].strip() == "12"
    assert run("enum", "4", "--count-only")[1].strip() == "4"
    lines = run("enum", "5", "--predicate", "indecomposable")[1].split()
    assert len(lines) == 3 and lines == sorted(lines)
    assert run("enum", "9", "--count-only")[0] == 3


def test_verify(run):
    code, out, _ = run("verify", "--checks", "thm-6.4", "--n-range", "7..7")
    assert code == 0 and json.loads(out)["status"] == "pass"
    assert run("verify", "--checks", "bogus")[0] == 4
    assert run("verify", "--checks", "thm-6.4", "--n-range", "9..9")[0] == 3


def test_verify_all_text(run):
    code, out, _ = run("--output", "text", "verify", "--checks", "all", "--n-range", "3..7")
    assert code == 0
    assert len(out.splitlines()) == len(check_ids())
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_gen_and_match(run):
    code, out, _ = run("gen", "F3", "--n", "1")
    assert code == 0
    gen = out.strip()
    code, out, _ = run("match", gen)
    assert json.loads(out) == ["F3"]
    assert run("gen", "F10", "--n", "1")[0] == 5
    assert run("gen", "F99", "--n", "1")[0] == 5
    assert run("gen", "F8", "--n", "1", "--assign", "0,0")[0] == 5


def test_gen_parameters(run):
    code, out, _ = run("gen", "F18", "--n", "1", "--s5", "W5", "--to", "trn")
    assert code == 0 and out.startswith("7\n")
    code, out, _ = run("gen", "F4", "--n", "1", "--param", "name:C3")
    assert code == 0 and out.startswith("T6:")


def test_convert(run):
    code, out, _ = run("convert", "T3:A0", "--to", "trn")
    assert code == 0 and out == "3\n010\n001\n100\n"
    assert out == encode_trn(C3)
    code, out, _ = run("convert", "name:U5", "--to", "code")
    back = run("convert", out.strip(), "--to", "trn")[1]
    assert back == encode_trn(__import__("tournament_lab.core", fromlist=["U5"]).U5)
