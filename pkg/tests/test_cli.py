import csv
import io
import json
import subprocess
import sys

import pytest

from hrns.cli import main
from hrns.cycpres import HParams
from hrns.records import CSV_COLUMNS, OutputRecord


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ab_json(capsys):
    code, out, _ = run(["ab", "--r", "3", "--n", "5", "--s", "2", "--format", "json"], capsys)
    rec = json.loads(out)
    assert code == 0
    assert rec["order"] == "16" and rec["betti"] == 0


def test_ab_infinite(capsys):
    code, out, _ = run(["ab", "--r", "1", "--n", "2", "--s", "1", "--format", "json"], capsys)
    rec = json.loads(out)
    assert rec["order"] == "infinite" and rec["betti"] == 1


def test_ab_factors(capsys):
    _, out, _ = run(["ab", "--r", "2", "--n", "3", "--s", "1", "--format", "json"], capsys)
    assert json.loads(out)["invariant_factors"] == ["2", "2"]
    _, out, _ = run(["ab", "--r", "2", "--n", "3", "--s", "1"], capsys)
    assert "invariant_factors=[2, 2]" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["ab", "--r", "0", "--n", "5", "--s", "2"],
        ["ab", "--r", "1", "--n", "1", "--s", "2"],
        ["ab", "--r", "1", "--n", "3", "--s", "-1"],
        ["ab", "--r", "x", "--n", "3", "--s", "1"],
        ["ab", "--r", "1.5", "--n", "3", "--s", "1"],
        ["classify", "--r", "1", "--n", "3"],
        ["verify", "--suite", "nope"],
        ["search", "--r-max", "0", "--n-max", "2", "--s-max", "1"],
        ["search", "--r-max", "1", "--n-max", "2", "--s-max", "1", "--jobs", "0"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 1
    assert capsys.readouterr().out == ""


def test_classify_torus(capsys):
    code, out, _ = run(["classify", "--r", "2", "--n", "5", "--s", "2", "--format", "json"], capsys)
    rec = json.loads(out)
    c = rec["classification"]
    assert c["verdict"] == "ConfirmedLOG_TorusKnot"
    assert c["witness"]["relation"] == "a^5=b^2"
    assert (c["witness"]["torus_r"], c["witness"]["torus_n"]) == ("2", "5")


def test_classify_infinite_cyclic(capsys):
    _, out, _ = run(["classify", "--r", "4", "--n", "2", "--s", "2", "--format", "json"], capsys)
    assert json.loads(out)["classification"]["verdict"] == "ConfirmedLOG_InfiniteCyclic"


def test_classify_half_params(capsys):
    _, out, _ = run(["classify", "--r", "6", "--n", "8", "--s", "4", "--format", "json"], capsys)
    c = json.loads(out)["classification"]
    assert c["verdict"] == "NotConnectedLOG"
    assert c["reason"] == "HALF_PARAMS_NOT_PERFECT"
    assert c["witness"]["half_order"] == "5"


def test_classify_csv(capsys):
    _, out, _ = run(["classify", "--r", "6", "--n", "8", "--s", "4", "--format", "csv"], capsys)
    rows = list(csv.reader(io.StringIO(out)))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert rows[1][:8] == ["6", "8", "4", "1", "5;5", "inf", "NotConnectedLOG", "HALF_PARAMS_NOT_PERFECT"]
    assert "half_order=5" in rows[1][8]


@pytest.mark.parametrize("p", [(3, 5, 2), (2, 5, 2), (6, 8, 4), (1, 2, 1), (7, 30, 6)])
def test_json_round_trip(p):
    for classify in (False, True):
        rec = OutputRecord.build(HParams(*p), classify=classify)
        text = rec.to_json()
        again = OutputRecord.from_json(text)
        assert again == rec
        assert again.to_json() == text


def test_order_matches_factors():
    rec = OutputRecord.build(HParams(3, 5, 2))
    prod = 1
    for d in rec.invariant_factors:
        prod *= d
    assert rec.order == str(prod)


def test_search_summary(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, out, _ = run(["search", "--r-max", "4", "--n-max", "12", "--s-max", "4", "--out", str(out_file)], capsys)
    assert code == 0
    assert "0 conjecture-relevant perfect triples" in out
    data = json.loads(out_file.read_text())
    assert len(data["perfect"]) == 12


def test_search_single(capsys):
    code, out, _ = run(["search", "--r-max", "1", "--n-max", "2", "--s-max", "1"], capsys)
    assert code == 0 and out.startswith("1 triple examined")


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_search_jobs_byte_identical(capsys, tmp_path, fmt):
    a, b = tmp_path / f"a.{fmt}", tmp_path / f"b.{fmt}"
    base = ["search", "--r-max", "5", "--n-max", "12", "--s-max", "5", "--format", fmt]
    assert main(base + ["--jobs", "1", "--out", str(a)]) == 0
    assert main(base + ["--jobs", "4", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_search_csv_schema(tmp_path):
    out = tmp_path / "r.csv"
    assert main(["search", "--r-max", "4", "--n-max", "6", "--s-max", "4", "--format", "csv", "--out", str(out)]) == 0
    rows = list(csv.reader(out.open()))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert all(r[5] == "1" for r in rows[1:])


def test_search_unwritable(capsys, tmp_path):
    code, _, err = run(
        ["search", "--r-max", "1", "--n-max", "2", "--s-max", "1", "--out", str(tmp_path / "no" / "x.json")], capsys
    )
    assert code != 0 and "cannot write" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--suite", "thmB", "--r-max", "5", "--n-max", "10", "--s-max", "5"],
        ["verify", "--suite", "shift", "--r-max", "3", "--n-max", "6", "--s-max", "3"],
        ["verify", "--suite", "detxcheck", "--n-max", "10", "--random", "50"],
        ["verify", "--suite", "lemma41", "--r-max", "4", "--n-max", "8", "--s-max", "4"],
        ["verify", "--suite", "freeprod", "--r-max", "4", "--n-max", "8", "--s-max", "4"],
    ],
)
def test_verify_passes(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert "PASS" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    from hrns import cli, search

    def broken(r_max, n_max, s_max):
        rep = search.VerificationReport("thmB", checked=1)
        rep.counterexamples.append({"r": 3, "n": 5, "s": 2, "formula": 1})
        return rep

    monkeypatch.setitem(cli.SUITES, "thmB", broken)
    code, out, _ = run(["verify", "--suite", "thmB"], capsys)
    assert code == 3
    assert "H(3,5,2)^ab" in out and "FAIL" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hrns", "ab", "--r", "3", "--n", "6", "--s", "2", "--format", "json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["order"] == "13"
