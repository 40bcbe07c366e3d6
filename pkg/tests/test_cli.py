import json
from fractions import Fraction

import pytest

from barely import qverify
from barely.cde import scan
from barely.cli import parse_params, run
from barely.report import CSV_COLUMNS, report_string
from barely.shapes import SHIFTED


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    assert call(capsys, "count", "--shape", "4,3,1", "--what", "syt", "--method", "formula") == (0, "70\n", "")
    code, out, _ = call(capsys, "count", "--shape", "4,3,1", "--shifted", "--what", "syt", "--method", "enumerate")
    assert out == "12\n"
    code, out, _ = call(capsys, "count", "--shape", "2,1", "--what", "sbt", "--method", "enumerate")
    assert out == "8\n"


@pytest.mark.parametrize("method", ["formula", "interval", "sbt"])
def test_expect(capsys, method):
    code, out, _ = call(capsys, "expect", "--shape", "4,2", "--shifted", "--method", method)
    assert code == 0
    assert out == '{"E_X": "6/5", "E_Y": "6/5", "cde": true}\n'
    assert json.loads(out) == {"E_X": "6/5", "E_Y": "6/5", "cde": True}


def test_classify(capsys):
    code, out, _ = call(capsys, "classify", "--shape", "3,1", "--shifted")
    data = json.loads(out)
    assert data["classification"] == "balanced+trapezoidal"
    assert data["closed_form"] == "1"
    code, out, _ = call(capsys, "classify", "--family", "delta-sum:2,9,4", "--shifted")
    data = json.loads(out)
    assert data["shape"] == "14,13,10,9,6,5,2,1" and data["closed_form"] == "15/4"


def test_aq(capsys):
    code, out, _ = call(capsys, "aq", "--shape", "4,2", "--check-conjecture")
    data = json.loads(out)
    assert code == 0
    assert data["balanced"] and data["equal"] and data["forms_agree"]
    assert data["expect"] == data["product"]


def test_aq_unbalanced_is_not_a_failure(capsys):
    code, out, _ = call(capsys, "aq", "--shape", "3,1", "--check-conjecture")
    assert code == 0 and json.loads(out)["balanced"] is False


def test_verify_identity(capsys):
    code, out, _ = call(capsys, "verify", "--identity", "trapezoid-4f3", "--params", "N=3,n=2")
    assert code == 0
    assert json.loads(out) == {"name": "trapezoid-4f3", "params": {"N": 3, "n": 2}, "lhs": "3/2", "rhs": "3/2", "equal": True}
    js = '{"a": [1, -7], "d": [1, -4], "n": 1}'
    code, out, _ = call(capsys, "verify", "--identity", "q-8phi7-sum", "--params", js)
    assert code == 0 and json.loads(out)["equal"]


def test_verify_bijection_and_integrals(capsys):
    code, out, _ = call(capsys, "verify", "--bijection", "k2", "--shape", "4,2")
    assert code == 0 and json.loads(out)["equal"]
    code, out, _ = call(capsys, "verify", "--integrals", "--shape", "3,1")
    assert code == 0 and len(out.splitlines()) == 4
    code, out, _ = call(capsys, "verify", "--alternant", "--shape", "2,1", "--nu", "1", "--order", "6")
    assert code == 0


def test_parse_params():
    assert parse_params("a=1,b=1/2") == {"a": 1, "b": Fraction(1, 2)}
    assert parse_params('{"x": [1, "1/2"]}') == {"x": [1, Fraction(1, 2)]}
    assert parse_params(None) == {}


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--shape", "2,3"],
        ["expect", "--shape", "4,x"],
        ["count", "--shape", "2,2", "--shifted"],
        ["classify", "--family", "delta-sum:2,3,4", "--shifted"],
        ["classify", "--family", "delta-sum:x", "--shifted"],
        ["classify"],
        ["verify", "--identity", "trapezoid-4f3", "--params", "N=3"],
        ["verify", "--identity", "trapezoid-4f3", "--params", "N"],
        ["verify", "--identity", "dougall", "--params", "a=1,b=2,c=3,d=4"],
        ["verify", "--shape", "3,1"],
        ["nonsense"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 2
    assert err


def test_scan_csv(capsys, tmp_path):
    path = tmp_path / "scan.csv"
    code, out, err = call(capsys, "scan", "--max-size", "8", "--shifted", "--out", str(path))
    assert code == 0 and out == ""
    assert "0 counterexamples" in err
    lines = path.read_text().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[1] == "1,1,1,2,1,2,true,balanced+trapezoidal,true"
    assert len(lines) == 1 + sum(1 for _ in scan(8, SHIFTED))


def test_scan_is_byte_stable(capsys):
    first = call(capsys, "scan", "--max-size", "9", "--format", "json")
    again = call(capsys, "scan", "--max-size", "9", "--format", "json")
    jobs = call(capsys, "scan", "--max-size", "9", "--format", "json", "--jobs", "2")
    assert first == again == jobs
    assert json.loads(first[1])[0]["shape"] == "1"


def test_empty_scan_is_header_only(capsys):
    code, out, _ = call(capsys, "scan", "--min-size", "5", "--max-size", "4")
    assert code == 0 and out == ",".join(CSV_COLUMNS) + "\n"


def test_scan_write_failure_exits_1(capsys, tmp_path):
    code, _, err = call(capsys, "scan", "--max-size", "3", "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 1 and "cannot write" in err


def test_report_string_single_shape():
    out = report_string(scan(1, SHIFTED), "csv")
    assert out.splitlines()[1].split(",")[6] == "true"


def test_verify_mismatch_exits_1(capsys, monkeypatch):
    wrong = qverify.Check("forged", {}, Fraction(1), Fraction(2))
    monkeypatch.setattr(qverify, "check_identity", lambda name, params: wrong)
    code, out, _ = call(capsys, "verify", "--identity", "dougall", "--params", "a=1")
    assert code == 1 and json.loads(out)["equal"] is False
