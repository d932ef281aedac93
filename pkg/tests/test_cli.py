import json

import pytest

from cycert import cli, pipeline


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_basis(capsys):
    code, out, _ = run(capsys, "basis", "--p", "3")
    assert code == 0
    data = json.loads(out)
    assert data["bases"] == {"3": ["x7^6*y4^3"]}
    assert data["arrangement"]["reference_point"]


def test_basis_with_custom_order(capsys):
    order = "x1,x2,x3,x4,x5,x6,x7,x8,y1,y2,y3,y4"
    code, out, _ = run(capsys, "basis", "--p", "1", "--order", order)
    assert code == 0 and len(json.loads(out)["bases"]["1"]) == 9


def test_reps_outputs(capsys):
    code, out, _ = run(capsys, "reps", "dim", "A5:[0,1,0,1,0]")
    assert code == 0 and json.loads(out)["dim"] == 189
    code, out, _ = run(capsys, "reps", "wedge2", "A5:[0,0,1,0,0]")
    assert json.loads(out)["trivial_summand"] is True
    code, out, _ = run(capsys, "reps", "center", "A5:[0,0,1,0,0]")
    assert list(json.loads(out)["multiplicities"].values()) == [1, 9, 9, 1]
    code, out, _ = run(capsys, "reps", "form", "C2:[3,0]")
    assert json.loads(out)["type"] == "symplectic"
    code, out, _ = run(capsys, "reps", "tensor", "A1:[1]", "A1:[2]")
    assert sorted(d["dim"] for d in json.loads(out)["tensor"]) == [2, 4]
    code, out, _ = run(capsys, "reps", "classify", "--dim", "4", "--symplectic")
    assert code == 0 and [e["rep"] for e in json.loads(out)["entries"]] == ["A1:[3]"]
    code, out, _ = run(capsys, "reps", "classify", "--dim", "4", "--symplectic", "--include-full")
    assert len(json.loads(out)["entries"]) == 2


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "basis", "--vandermonde", "1,1,3,4,5,6,7,8")[0] == 2
    assert run(capsys, "basis", "--vandermonde", "1,2,3")[0] == 2
    assert run(capsys, "basis", "--order", "x1,x2")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"matrix": [[1, 1, 0, 0, 1, 1, 1, 1], [0, 0, 1, 0, 1, 2, 3, 4],
                                          [0, 0, 0, 1, 1, 3, 9, 27], [1, 1, 0, 0, 1, 4, 27, 256]]}))
    code, _, err = run(capsys, "basis", "--matrix", str(bad))
    assert code == 2 and "(1, 2" in err
    assert run(capsys, "basis", "--matrix", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "reps", "dim", "A5:[1,0]")[0] == 2
    assert run(capsys, "reps", "center", "C2:[1,0]")[0] == 2


def test_mismatch_exit_code(capsys, monkeypatch):
    exp = pipeline.expected_x0()
    exp["plethysm"]["chain"] = [1, 9, 45, 79]
    monkeypatch.setattr(pipeline, "expected_x0", lambda: exp)
    code, out, _ = run(capsys, "plethysm")
    assert code == 1
    assert json.loads(out)["chain"] == [1, 9, 45, 78]


def test_output_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "char-variety", "--k", "2", "--out", str(a))[0] == 0
    assert run(capsys, "char-variety", "--k", "2", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["dimension"] == 7
