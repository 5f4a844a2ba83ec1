import io
import json

import pytest

from envalg.cli import main
from envalg.lie import su3


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, expected", [
    (["nf", "-e", "X4*X3"], "X3*X4 - 2*X1"),
    (["nf", "-e", "comm(T1,T3) + T12"], "0"),
    (["nf", "comm(X5, X6)"], "2*X1 + 2*X2"),
    (["nf", "--env", "contracted", "-e", "comm(X'3, X'4)"], "0"),
    (["nf", "--env", "classical", "-e", "pb(x1, p1)"], "1"),
    (["nf", "--env", "quantum", "-e", "comm(d1, s1)"], "1"),
    (["comm", "X1", "X3"], "2*X4"),
    (["pb", "T1", "T1"], "0"),
])
def test_golden(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == expected


def test_nf_json(capsys):
    code, out, _ = run(capsys, "nf", "--format", "json", "-e", "X4*X3")
    assert code == 0
    assert json.loads(out)["result"] == "X3*X4 - 2*X1"


@pytest.mark.parametrize("argv, fragment", [
    (["nf", "-e", "X1 +"], "1:5"),
    (["nf", "-e", "X9"], "unknown generator 'X9'"),
    (["nf"], "needs an expression"),
    (["verify", "--group", "bogus"], "valid groups: all, sec2.classical"),
    (["contract", "--weights", "1,0,0,0,0,0,0,0"], "diverges"),
    (["contract", "--weights", "1,2"], "need 8 weights"),
    (["nf", "--algebra", "/nonexistent.json", "-e", "X1"], "cannot read"),
])
def test_errors_exit_2(capsys, argv, fragment):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert fragment in err and out == ""


def test_bad_flag_exit_2(capsys):
    assert main(["verify", "--format", "yaml"]) == 2


def test_verify_table_json(capsys):
    code, out, _ = run(capsys, "verify", "--group", "sec3.table", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["counts"] == {"sec3.table": {"PASS": 28, "FAIL": 0, "UNDECIDED": 0, "INFORMATIONAL": 0}}
    first = data["checks"][0]
    assert set(first) == {"id", "group", "status", "residual", "anchor", "engine", "expect", "millis", "notes",
                          "repair", "oracle"}
    assert first["millis"] is None and first["oracle"]["verdict"] == "confirmed"


def test_verify_failure_exit_1(capsys):
    code, out, _ = run(capsys, "verify", "--group", "sec3.ladder", "--no-oracle")
    assert code == 1
    assert "repair (sign): flip the sign in H - 2*C" in out
    assert out.rstrip().endswith("total: 14 PASS, 2 FAIL")


def test_verify_timing(capsys):
    code, out, _ = run(capsys, "verify", "--group", "sec3.table", "--timing", "--format", "json",
                       "--no-oracle")
    assert all(c["millis"] is not None for c in json.loads(out)["checks"])


def test_contract_text_and_dump(capsys):
    code, out, _ = run(capsys, "contract", "--weights", "0,0,1,1,0,0,1,1")
    assert code == 0
    assert out.strip().splitlines()[-1] == ("vanished (6): [X'3,X'4], [X'3,X'7], [X'3,X'8], [X'4,X'7], "
                                            "[X'4,X'8], [X'7,X'8]")
    code, out, _ = run(capsys, "contract", "--weights", "0,0,1,1,0,0,1,1", "--dump")
    data = json.loads(out)
    assert data["labels"] == ["X1", "X2", "X'3", "X'4", "X5", "X6", "X'7", "X'8"]
    pairs = {(b["i"], b["j"]) for b in data["brackets"]}
    assert not pairs & {(3, 4), (3, 7), (3, 8), (4, 7), (4, 8), (7, 8)}


def test_custom_algebra(capsys, tmp_path):
    so3 = {"name": "so3", "labels": ["J1", "J2", "J3"], "brackets": [
        {"i": 1, "j": 2, "terms": [{"k": 3, "c": "1"}]},
        {"i": 2, "j": 3, "terms": [{"k": 1, "c": "1"}]},
        {"i": 1, "j": 3, "terms": [{"k": 2, "c": "-1"}]}]}
    f = tmp_path / "so3.json"
    f.write_text(json.dumps(so3))
    code, out, _ = run(capsys, "nf", "--algebra", str(f), "-e", "J2*J1")
    assert (code, out.strip()) == (0, "J1*J2 - J3")
    so3["brackets"][2]["terms"] = [{"k": 1, "c": "1"}]
    f.write_text(json.dumps(so3))
    code, _, err = run(capsys, "nf", "--algebra", str(f), "-e", "J1")
    assert code == 2 and "Jacobi" in err
    code, out, _ = run(capsys, "nf", "--algebra", str(f), "--no-jacobi-check", "-e", "J1")
    assert (code, out.strip()) == (0, "J1")


def test_su3_json_round_trip_through_cli(capsys, tmp_path):
    f = tmp_path / "su3.json"
    f.write_text(su3().to_json())
    code, out, _ = run(capsys, "nf", "--algebra", str(f), "-e", "comm(T1, T3) + T12")
    assert (code, out.strip()) == (0, "0")


def test_pb_ideal(capsys):
    code, out, _ = run(capsys, "pb", "T1", "H", "--ideal", "sphere+momentum")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "pb", "T2", "x1", "--ideal", "sphere")
    assert code == 0 and "not member" in out


def test_repl(capsys, monkeypatch):
    script = "x = T1 + T3\ncomm(x, X1)\nX9\n:env classical\npb(x1, p1)\n:quit\nX1\n"
    monkeypatch.setattr("sys.stdin", io.StringIO(script))
    code, out, _ = run(capsys, "repl")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1] == "0"
    assert lines[2].startswith("error: 1:1: unknown generator 'X9'")
    assert lines[3:] == ["environment classical", "1"]
