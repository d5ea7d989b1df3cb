import io
import json

import pytest

from dswr import families
from dswr.cli import main

E63 = "blowup-complement:base=mate:1,q=3"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def graph_file(tmp_path):
    def make(spec_or_graph):
        g = families.build(spec_or_graph) if isinstance(spec_or_graph, str) else spec_or_graph
        p = tmp_path / "g.txt"
        p.write_text(g.to_text())
        return str(p)
    return make


def test_construct_outputs(capsys):
    code, out, err = run(capsys, "construct", "cycle:g=6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "6" and len(lines[1:]) == 6
    assert "cycle:g=6" in err
    code, out, _ = run(capsys, "construct", "lvl-odd:m=3,k=2")
    assert out.splitlines()[0] == "9"
    code, out, _ = run(capsys, "construct", E63, "--format", "edges")
    assert out.splitlines()[0] == "18"


def test_construct_to_file(capsys, tmp_path):
    dest = tmp_path / "c.txt"
    assert run(capsys, "construct", "mate:2", "--out", str(dest))[0] == 0
    from dswr.digraph import parse_graph

    assert parse_graph(dest.read_text()) == families.cospectral_mate(2)


@pytest.mark.parametrize("bad", ["nosuch", "cycle:g=1", "lvl-odd:m=2,k=2", "cycle:g=x"])
def test_construct_errors_exit_2(capsys, bad):
    code, out, err = run(capsys, "construct", bad)
    assert code == 2 and out == "" and err.startswith("error:")


def test_analyze(capsys, graph_file):
    code, out, _ = run(capsys, "analyze", graph_file("mate:1"))
    d = json.loads(out)
    assert code == 0 and d["diag_class"] == "DTheta(0)" and d["schema"] == "swr/1"
    d = json.loads(run(capsys, "analyze", graph_file("cycle:g=6"))[1])
    assert d["hoffman"] == [1, 1, 1, 1, 1, 1]
    d = json.loads(run(capsys, "analyze", graph_file("chord:l=4"))[1])
    assert d["hoffman"] is None and d["hoffman_absent_reason"] == "not regular"


def test_analyze_malformed(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("3\n010\n001\n")
    assert run(capsys, "analyze", str(p))[0] == 2
    assert run(capsys, "analyze", str(tmp_path / "missing.txt"))[0] == 2


def test_check_verdicts(capsys, graph_file):
    path = graph_file("cycle:g=6")
    code, out, _ = run(capsys, "check", path, "7")
    d = json.loads(out)
    assert code == 0 and (d["lambda"], d["mu"], d["nu"]) == (1, 0, 0)
    code, out, _ = run(capsys, "check", path, "5")
    assert code == 1 and json.loads(out)["strongly_walk_regular"] is False
    code, out, _ = run(capsys, "check", graph_file("lvl-odd:m=3,k=2"), "3")
    d = json.loads(out)
    assert code == 0 and (d["lambda"], d["mu"], d["nu"]) == (1, 1, 0)
    assert run(capsys, "check", path, "1")[0] == 2


def test_check_example_certificate(capsys, graph_file):
    code, out, _ = run(capsys, "check", graph_file(E63), "3")
    d = json.loads(out)
    assert code == 0 and (d["l"], d["lambda"], d["mu"], d["nu"]) == (3, 75, 72, 74)
    assert sorted(d["methods"]) == ["direct", "hoffman-divisibility"]


def test_exponents(capsys, graph_file):
    code, out, _ = run(capsys, "exponents", graph_file(E63), "--lmax", "50")
    assert code == 0 and json.loads(out)["explicit"] == [3]
    d = json.loads(run(capsys, "exponents", graph_file("coclique:sizes=2/1/1"), "--lmax", "13")[1])
    assert (d["modulus"], d["residues"], d["explicit"]) == (3, [1], [4, 7, 10, 13])
    assert run(capsys, "exponents", graph_file("cycle:g=3"), "--lmax", "1")[0] == 2


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(families.directed_cycle(6).to_text()))
    code, out, _ = run(capsys, "check", "-", "6")
    assert code == 0 and json.loads(out)["nu"] == 1


def test_output_is_byte_deterministic(capsys, graph_file):
    path = graph_file(E63)
    for cmd in (["analyze", path], ["exponents", path, "--lmax", "20"], ["check", path, "3"]):
        a = run(capsys, *cmd)[1]
        b = run(capsys, *cmd)[1]
        assert a == b and json.loads(a)["schema"] == "swr/1"


def test_enumerate_ndjson(capsys, tmp_path):
    code, out, err = run(capsys, "enumerate", "--n", "6", "--k", "2", "--strongly-connected", "--lmax", "8")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and recs and all(r["kind"] == "census_record" for r in recs)
    assert f"{len(recs)} isomorphism classes" in err
    dest = tmp_path / "c.ndjson"
    run(capsys, "enumerate", "--n", "6", "--k", "2", "--strongly-connected", "--lmax", "8", "--out", str(dest))
    assert dest.read_text() == out
    assert run(capsys, "enumerate", "--n", "11", "--k", "2", "--allow-large")[0] == 2
    assert run(capsys, "enumerate", "--n", "9", "--k", "2")[0] == 2


def test_verify(capsys):
    code, out, err = run(capsys, "verify", "spectrum-census-6-2")
    assert code == 0 and json.loads(out)["passed"] and "pass" in err
    code, out, _ = run(capsys, "verify", "list")
    assert code == 0 and "girth-congruence" in out
    assert run(capsys, "verify", "no-such-claim")[0] == 2
    assert run(capsys, "verify", "even-l-implies-srd", "--param", "bogus=1")[0] == 2
    assert run(capsys, "verify", "even-l-implies-srd", "--param", "noequals")[0] == 2
    code, out, _ = run(capsys, "verify", "even-l-implies-srd", "--param", "n_max=5", "--param", "lmax=8")
    assert code == 0 and json.loads(out)["params"]["n_max"] == 5


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["check", "x"])
    assert e.value.code == 2
