import csv
import io
import json

import pytest

from bsym.cli import main

GOLDEN = "0,0,1,3,0,5,0,0,0,2,0,7,0,0,0"
ZERO15 = ",".join(["0"] * 15)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dist_golden(capsys):
    code, out, _ = run(capsys, "dist", "--b", "4", "--x", GOLDEN, "--y", ZERO15)
    assert code == 0
    assert "13" in out
    assert "match=true" in out


def test_dist_methods(capsys):
    for method in ("formula", "oracle"):
        code, out, _ = run(capsys, "dist", "--b", "4", "--x", GOLDEN,
                           "--y", ZERO15, "--method", method)
        assert code == 0 and out.strip() == "13"


def test_dist_missing_b(capsys):
    assert run(capsys, "dist", "--x", "1,0", "--y", "0,0")[0] == 1


def test_pi_output(capsys):
    code, out, _ = run(capsys, "pi", "--b", "2", "--word", "1,2,3")
    assert code == 0
    assert out.splitlines() == ["1,2", "2,3", "3,1"]


def test_pi_n_mismatch(capsys):
    code, _, err = run(capsys, "pi", "--n", "5", "--b", "2", "--word", "1,2,3")
    assert code == 1 and "usage error" in err


def test_code_row(capsys):
    code, out, _ = run(capsys, "code", "--p", "3", "--e", "2", "--i", "7",
                       "--b", "2", "--method", "both")
    assert code == 0
    assert "db_closed=9" in out and "db_brute=9" in out
    assert "consistent=True" in out


def test_code_json(capsys):
    code, out, _ = run(capsys, "code", "--p", "3", "--e", "2", "--i", "7",
                       "--b", "2", "--format", "json")
    assert code == 0
    row = json.loads(out)[0]
    assert row["db_rule"] == "Thm11" and row["db_brute"] == 9


def test_table_csv_row_count(capsys):
    code, out, _ = run(capsys, "table", "--p", "3", "--e", "2", "--m", "1",
                       "--b", "2..3", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["p", "e", "m", "i", "b", "n", "dim", "dH", "db_rule",
                       "db_closed", "db_lower", "db_upper", "db_brute",
                       "consistent"]
    assert len(rows) == 1 + 10 * 2  # i in 0..9, two b values


def test_table_empty_range(capsys):
    code, out, _ = run(capsys, "table", "--p", "2", "--e", "2",
                       "--b", "3..2", "--format", "csv")
    assert code == 0
    assert len(out.strip().splitlines()) == 1  # header only


def test_table_out_file(tmp_path, capsys):
    path = tmp_path / "t.csv"
    code, _, _ = run(capsys, "table", "--p", "2", "--e", "2", "--b", "2",
                     "--out", str(path))
    assert code == 0
    assert path.read_text().startswith("p,e,m,i,b,")


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--p", "2", "--e", "2", "--b", "2",
                       "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 5
    assert all(r["consistent"] for r in rows)


def test_table_extension_field(capsys):
    code, out, _ = run(capsys, "table", "--p", "2", "--e", "2", "--m", "2",
                       "--modulus", "1,1,1", "--b", "2", "--format", "json")
    assert code == 0
    assert all(r["consistent"] for r in json.loads(out))


def test_verify_cli_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "--suite", "lemma", "--seed", "42",
                         "--trials", "100")
    code2, out2, _ = run(capsys, "verify", "--suite", "lemma", "--seed", "42",
                         "--trials", "100")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["lemma"]["passed"] is True


def test_verify_byte_identical_output(capsys):
    args = ["verify", "--suite", "bounds", "--seed", "5", "--trials", "200"]
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1.encode() == out2.encode()


def test_cap_env_override(monkeypatch, capsys):
    monkeypatch.setenv("BSYM_CAP", "10")
    code, _, err = run(capsys, "code", "--p", "3", "--e", "2", "--i", "0",
                       "--b", "2", "--method", "both")
    assert code == 1
    assert "cap" in err


def test_bad_word(capsys):
    code, _, err = run(capsys, "dist", "--b", "2", "--x", "1,zz", "--y", "0,0")
    assert code == 1 and "usage error" in err
