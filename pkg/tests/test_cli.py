import json

import pytest

from ballcomb.cli import main, parse_vector, CliError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_vector():
    v = parse_vector("h:1,0,0")
    assert v.role == "h" and v.d == 2 and v.entries == (1, 0, 0)
    f = parse_vector("f:1,3,3,1")
    assert f.role == "f" and f.d == 3
    with pytest.raises(CliError):
        parse_vector("h:1,,2")
    with pytest.raises(CliError):
        parse_vector("1,2,3")
    with pytest.raises(CliError):
        parse_vector("g:1,2")


def test_convert(capsys):
    code, out, _ = run(capsys, "convert", "f:1,3,3,1")
    assert code == 0 and out.strip() == "h:1,0,0,0"
    code, out, _ = run(capsys, "convert", "h:1,0,0,0")
    assert code == 0 and out.strip() == "f:1,3,3,1"


def test_check_impossible(capsys):
    code, out, _ = run(capsys, "check", "h:1,4,5,7,3,2,0")
    assert code == 2
    assert "verdict: impossible_betti_split" in out
    assert "betti" in out


def test_check_constructible(capsys):
    code, out, _ = run(capsys, "check", "h:1,2,2,0,0")
    assert code == 0
    assert "verdict: constructible" in out


def test_check_reports_are_deterministic(capsys):
    _, first, _ = run(capsys, "check", "h:1,4,5,7,3,2,0")
    _, second, _ = run(capsys, "check", "h:1,4,5,7,3,2,0")
    assert first == second


def test_construct_verify_roundtrip(tmp_path, capsys):
    out_file = tmp_path / "ball.json"
    code, _, _ = run(capsys, "construct", "h:1,2,2,0,0", "-o", str(out_file))
    assert code == 0
    doc = json.loads(out_file.read_text())
    assert doc["h"] == [1, 2, 2, 0, 0]
    assert doc["classification"] == "homology_ball"
    code, out, _ = run(capsys, "verify", str(out_file))
    assert code == 0
    assert "h: 1,2,2,0,0" in out
    assert "shelling: valid" in out
    assert "classification: homology_ball" in out


def test_construct_rejects_inadmissible(capsys):
    code, out, _ = run(capsys, "construct", "h:1,4,5,7,3,2,0")
    assert code == 3
    assert "conditions_fail" in out


def test_verify_detects_bad_certificate(tmp_path, capsys):
    doc = {"dim": 2,
           "facets": [[1, 2, 3], [4, 5, 6]],
           "certificate": {"ordered_facets": [[1, 2, 3], [4, 5, 6]],
                           "restrictions": [[], []]}}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert "INVALID" in out


def test_family(capsys):
    code, out, _ = run(capsys, "family", "--x", "5", "--y", "2", "--dim", "6")
    assert code == 2
    assert '"budget": 37' in out and '"bound": 38' in out
    code, _, err = run(capsys, "family", "--x", "4", "--y", "2", "--dim", "6")
    assert code == 1


def test_betti(capsys):
    code, out, _ = run(capsys, "betti", "h:1,4,5,7,3,2,0")
    assert code == 2
    assert "peeva_bounds: 1 1" in out


def test_splits(capsys):
    code, out, _ = run(capsys, "splits", "h:1,2,0,0")
    assert code == 0
    assert "1,1,0,0 | 1,0,0,0" in out


def test_skeleton(capsys):
    code, out, _ = run(capsys, "skeleton", "h:1,4,5,7,3,2,0")
    assert code == 2
    assert "impossible_skeleton" in out


def test_glue(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps({"dim": 2, "facets": [[1, 2, 3]]}))
    b.write_text(json.dumps({"dim": 2, "facets": [[1, 2, 3]]}))
    code, out, _ = run(capsys, "glue", str(a), str(b),
                       "--pair", "1,2=1,2")
    assert code == 0
    doc = json.loads(out)
    assert doc["h"] == [1, 1, 0, 0]
    assert len(doc["facets"]) == 2


def test_input_errors_exit_one(capsys):
    code, _, err = run(capsys, "check", "h:1,,2")
    assert code == 1 and "error" in err
    code, _, err = run(capsys, "nonsense")
    assert code == 1


def test_missing_file_exits_one(capsys):
    code, _, err = run(capsys, "verify", "/no/such/file.json")
    assert code == 1
