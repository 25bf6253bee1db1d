import csv
import io
import json

import pytest

from projdel import BinaryForm, MultiPoly
from projdel.cli import Config, main

V = "x1,x2"
CUB = "(x1*x2-1)*(x2+x1^3)"


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_transform_example4_canonical_json(capsys):
    code, out, _ = run(capsys, "transform", CUB, "--vars", V, "--matrix", "1,0;1,1", "--degree", "2")
    assert code == 0
    expected = MultiPoly.parse("((x1-1)*x2 - 1)*((1+x1^3)*x2 + x1^3)", ("x1", "x2"))
    assert out == json.dumps(expected.to_json(), indent=2) + "\n"


def test_json_file_and_stdin(tmp_path, capsys, monkeypatch):
    P = MultiPoly.parse("x1^2 + x2^2 - 1", ("x1", "x2"))
    f = tmp_path / "p.json"
    f.write_text(json.dumps(P.to_json()))
    code, out, _ = run(capsys, "discriminant", str(f))
    assert code == 0 and MultiPoly.from_json(json.loads(out)) == MultiPoly.parse("-4*x1^2 + 4", ("x1",))
    code, out2, _ = run(capsys, "discriminant", "-", stdin=json.dumps(P.to_json()), monkeypatch=monkeypatch)
    assert out2 == out


def test_homogenize_pullback_roundtrip(tmp_path, capsys):
    code, out, _ = run(capsys, "homogenize", "x1*x2 - 1", "--vars", V, "--degree", "3")
    assert code == 0
    g = BinaryForm.from_json(json.loads(out))
    f = tmp_path / "g.json"
    f.write_text(out)
    code, out, _ = run(capsys, "pullback", str(f))
    assert MultiPoly.from_json(json.loads(out)) == MultiPoly.parse("x1*x2 - 1", ("x1", "x2"))
    assert g.degree == 3


def test_resultant_and_roots(capsys):
    code, out, _ = run(capsys, "resultant", "x1^2+x2^2-1", "x1*x2-1", "--vars", V)
    assert MultiPoly.from_json(json.loads(out)) == MultiPoly.parse("x1^4 - x1^2 + 1", ("x1",))
    code, out, _ = run(capsys, "roots", "x^2 - 1", "--vars", "x", "--degree", "3")
    assert json.loads(out) == [
        {"point": "-1", "multiplicity": 1},
        {"point": "1", "multiplicity": 1},
        {"infinity": True, "multiplicity": 1},
    ]


def test_roots_above_and_check_finite(capsys):
    code, out, _ = run(capsys, "roots-above", "x1*x2-1", "--vars", V, "--point", "0")
    assert json.loads(out) == [{"infinity": True, "multiplicity": 1}]
    code, out, _ = run(capsys, "check-finite", "(x1*x2-1)*((x1-1)*x2-1)^2", "--vars", V, "--points", "0;1")
    data = json.loads(out)
    assert data["delineable"] is False and data["projectively_delineable"] is True


def test_project_and_cell(capsys):
    code, out, _ = run(capsys, "project", "x1^2+x2^2-1", "x1*x2-1", "--vars", V, "--mode", "projective")
    data = json.loads(out)
    assert data["mode"] == "projective"
    assert [g["provenance"] for g in data["generators"]] == ["disc(P1)", "res(P1,P2)"]
    code, out, _ = run(capsys, "cell", "x1^2+x2^2-1", "x1*x2-1", "--vars", V, "--sample=-1/2")
    assert json.loads(out)["interval"] == ["-1", "0"]


def test_track_csv(capsys):
    code, out, _ = run(capsys, "track", CUB, "--vars", V, "--segment=-2;2", "--samples", "16", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["t", "branch_id", "u", "v", "multiplicity", "is_infinity"]
    assert any(r[5] == "1" for r in rows[1:])
    assert "\r" not in out


def test_track_json_verdict(capsys):
    code, out, _ = run(capsys, "track", "x1^2*x2^2+1", "--vars", V, "--segment=-1;1", "--samples", "16")
    v = json.loads(out)["verdict"]
    assert v["status"] == "VIOLATION" and v["witness_point"] == ["0"]


def test_section_check(capsys):
    code, out, _ = run(capsys, "section-check", "x1^2+x2^2-1", "x1*x2-1", "--vars", V, "--segment=-9/10;9/10", "--samples", "32")
    assert {b["classification"] for b in json.loads(out)["branches"]} == {"never_vanishes"}


def test_plot_data(capsys):
    code, out, _ = run(capsys, "plot-data", CUB, "--vars", V, "--segment=-2;2", "--samples", "16")
    header = out.splitlines()[0].split(",")
    assert header == ["t", "p1b1_u", "p1b1_v", "p1b2_u", "p1b2_v"]
    code, out, _ = run(capsys, "plot-data", "x2^2+1", "--vars", V, "--segment=-2;2", "--samples", "16")
    assert out == "t\n"
    code, out, _ = run(capsys, "plot-data", "x1^2+x2^2-1", "x1*x2-1", "--vars", V, "--segment=-9/10;9/10", "--samples", "16")
    assert out.splitlines()[0].count("p2b") == 2


def test_exit_codes(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "discriminant", "nofile.json")[0] == 2
    assert run(capsys, "discriminant", "x1 +", "--vars", V)[0] == 2
    assert run(capsys, "transform", "x2", "--vars", V, "--matrix", "1,2;2,4")[0] == 2
    assert run(capsys, "track", CUB, "--vars", V, "--segment=-2;2", "--samples", "8")[0] == 2
    code, _, err = run(capsys, "roots-above", "x1*x2+x1", "--vars", V, "--point", "0")
    assert code == 3 and "nullified" in err
    assert run(capsys, "homogenize", "x2^3", "--vars", V, "--degree", "2")[0] == 3


def test_malformed_json(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text("{not json")
    assert run(capsys, "discriminant", str(f))[0] == 2


def test_output_file_and_determinism(tmp_path, capsys):
    out = tmp_path / "o.json"
    args = ["project", "x1^2+x2^2-1", "x1*x2-1", "--vars", V]
    assert main(args + ["-o", str(out)]) == 0
    first = out.read_bytes()
    assert main(args + ["-o", str(out)]) == 0
    assert out.read_bytes() == first


def test_config_invariants():
    with pytest.raises(ValueError):
        Config(samples=4)
    with pytest.raises(ValueError):
        Config(jump_threshold=1.0)


def test_reproduce_command(capsys):
    code, out, _ = run(capsys, "reproduce", "scc")
    data = json.loads(out)
    assert code == 0 and data["status"] == "PASS"
    names = {c["name"]: c["actual"] for c in data["checks"]}
    assert names["classical interval"] == ["-1", "0"] and names["projective interval"] == ["-1", "1"]
