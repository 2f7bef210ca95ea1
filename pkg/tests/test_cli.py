import json
import subprocess
import sys

import pytest

from kpm.cli import dispatch
from kpm.io import adhm_from_json, adhm_to_json, loop_matrix_from_json, parse_rational
from kpm.errors import MalformedInputError
from fixtures import X1

X1_DOC = {"d": 1, "alpha": [["0"]], "beta": [["0"]], "a": [["1", "0"]], "b": [["0", "1"]]}


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
        return str(p)
    return write


def test_parse_rational():
    assert parse_rational("-3/4") == parse_rational("-3/4")
    assert parse_rational(5) == 5
    for bad in ("2/4", "1/0", "1.5", True, 1.5, "3/1"):
        with pytest.raises(MalformedInputError):
            parse_rational(bad)


def test_adhm_round_trip():
    assert adhm_from_json(adhm_to_json(X1)) == X1
    assert adhm_from_json(X1_DOC) == X1


def test_loop_matrix_formats():
    bare = [[{"1": "1"}, {}], [{}, {"-1": 1}]]
    assert loop_matrix_from_json(bare) == loop_matrix_from_json({"matrix": bare})


def test_degree_check():
    assert dispatch(["schubert", "degree-check", "6"]) == (0, "anchor: degree of a based map P^3 -> affine Grassmannian is divisible by 6\nadmissible: true (c=18, e=36)\n")
    status, out = dispatch(["schubert", "degree-check", "2"])
    assert status == 1 and "admissible: false (obstruction at eps_3)" in out


def test_schubert_product():
    status, out = dispatch(["schubert", "product", "2", "3"])
    assert status == 0 and "eps_2 * eps_3 = 10*eps_5" in out


def test_monad_check(files):
    status, out = dispatch(["monad", "check", files("x.json", X1_DOC)])
    assert status == 0
    assert out.splitlines()[0] == "adhm-relation: ok; nondegenerate: true"
    bad = dict(X1_DOC, b=[["0", "0"]])
    status, out = dispatch(["monad", "check", files("y.json", bad)])
    assert status == 1 and "nondegenerate: false" in out
    invalid = dict(X1_DOC, b=[["1", "0"]])
    status, out = dispatch(["monad", "check", files("z.json", invalid)])
    assert status == 1 and out.startswith("adhm-relation: failed")


def test_monad_fiber_line_scan(files):
    path = files("x.json", X1_DOC)
    status, out = dispatch(["monad", "fiber", path, "--point", "0,0,1"])
    assert status == 0 and "rep1: (1, 0, 0, 0)" in out and "rep2: (0, 1, 0, 0)" in out
    status, out = dispatch(["monad", "line", path, "--p", "1,0,0", "--q", "0,0,1"])
    assert status == 0 and "splitting_type: 1" in out
    status, out = dispatch(["monad", "scan", path, "--grid", "4"])
    assert status == 0 and "n=1: 4" in out and "n=0: 12" in out
    status, out = dispatch(["monad", "scan", path, "--lines", "0,1,0;1,1,1", "--table"])
    assert out.splitlines() == ["line\tn\terror", "(0, 1, 0)\t1\t", "(1, 1, 1)\t0\t"]


def test_monad_random_deterministic(files):
    a = dispatch(["monad", "random", "2", "--seed", "5"])
    b = dispatch(["monad", "random", "2", "--seed", "5"])
    assert a == b and a[0] == 0
    status, out = dispatch(["monad", "check", files("r.json", a[1])])
    assert out.startswith("adhm-relation: ok")


def test_lattice_and_birkhoff(files):
    path = files("g.json", {"matrix": [[{"1": "1"}, {}], [{}, {"-1": "1"}]]})
    assert "index: 1" in dispatch(["lattice", "index", path])[1]
    assert dispatch(["lattice", "member", path, "0"])[0] == 1
    assert dispatch(["lattice", "member", path, "1"])[0] == 0
    assert "splitting_type: 1" in dispatch(["lattice", "splitting", path])[1]
    status, out = dispatch(["birkhoff", path])
    assert status == 0 and "n: 1" in out


def test_truncation_from_environment(files, monkeypatch):
    path = files("g.json", {"matrix": [[{"3": "1"}, {}], [{}, {"-3": "1"}]]})
    monkeypatch.setenv("KPM_TRUNCATION", "5")
    assert dispatch(["birkhoff", path])[0] == 2  # spread 6 needs N > 6
    monkeypatch.setenv("KPM_TRUNCATION", "7")
    assert dispatch(["birkhoff", path])[0] == 0
    assert dispatch(["birkhoff", path, "--truncation", "3"])[0] == 2


def test_actions(files):
    path = files("x.json", X1_DOC)
    status, out = dispatch(["act", "gl", path, "--g", "[[2]]"])
    assert status == 0 and json.loads(out)["a"] == [["1/2", "0"]]
    status, out = dispatch(["act", "cstar", path, "--z", "2"])
    moved = files("zx.json", out)
    assert json.loads(out)["a"] == [["2", "0"]]
    status, out = dispatch(["act", "equiv", moved, path])
    assert status == 1 and "status: none" in out
    status, out = dispatch(["act", "equiv", path, path])
    assert status == 0 and "status: found" in out
    status, out = dispatch(["act", "verify-l42", path, "--z", "2", "--point", "0,0,1"])
    assert status == 0 and "verified: true" in out
    status, out = dispatch(["act", "pi", "--x", "1,0,0", "--lm", "1,1"])
    assert "image: [1 : 0 : 0 : 1]" in out


def test_every_report_has_anchor(files):
    path = files("x.json", X1_DOC)
    for argv in (["schubert", "product", "1", "1"], ["monad", "check", path],
                 ["monad", "fiber", path, "--point", "1,0,0"],
                 ["act", "verify-l42", path, "--z", "3", "--point", "1,2,3"]):
        assert "anchor: " in dispatch(argv)[1]


def test_malformed_inputs(files):
    assert dispatch(["frobnicate"])[0] == 2
    assert dispatch(["monad"])[0] == 2
    assert dispatch(["monad", "check", "/nonexistent.json"])[0] == 2
    assert dispatch(["monad", "check", files("bad.json", "{not json")])[0] == 2
    assert dispatch(["monad", "check", files("half.json", {"d": 1, "alpha": [["0"]]})])[0] == 2
    assert dispatch(["monad", "fiber", files("x.json", X1_DOC), "--point", "0,0,0"])[0] == 2


def test_console_script_exit_codes():
    run = [sys.executable, "-m", "kpm.cli"]
    res = subprocess.run(run + ["schubert", "degree-check", "12"], capture_output=True, text=True)
    assert res.returncode == 0 and "admissible: true (c=72, e=288)" in res.stdout
    res = subprocess.run(run + ["nope"], capture_output=True, text=True)
    assert res.returncode == 2 and "usage" in res.stderr
