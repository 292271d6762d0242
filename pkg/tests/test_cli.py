import csv
import io
import json
import math
from pathlib import Path

import pytest

import expected as E
import oracle as O
from mutants import flip_term
from ratio_bounds.cli import main

GOLDEN = Path(__file__).parent / "golden" / "sweep_coshcos_alpha1_k-1_0_2_p5.csv"
GOLDEN_ARGS = ["sweep", "--family", "coshcos", "--alpha", "1.0", "--k0-list", "-1,0,2",
               "--points", "5", "--format", "csv"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestEval:
    def test_coshcos(self, capsys):
        code, out, _ = run(capsys, "eval", "coshcos", "--x", "0.5", "--alpha", "1.0", "--k0", "0")
        assert code == 0
        d = json.loads(out)
        assert list(d) == ["bound", "reference", "margin"]
        assert d["bound"] == pytest.approx(E.COSHCOS_B_HALF_ONE[1], rel=1e-15)
        assert d["reference"] == pytest.approx(E.COSHCOS[0.5], rel=1e-15)
        assert d["margin"] == pytest.approx(9.4113e-5, rel=1e-4)

    def test_lemma(self, capsys):
        code, out, _ = run(capsys, "eval", "lemma", "--u", "0.5", "--v", "0.5", "--k0", "-1")
        d = json.loads(out)
        assert code == 0
        assert d["bound"] == pytest.approx(E.LEMMA_HALF[0], rel=1e-15)
        assert d["reference"] == pytest.approx(E.LEMMA_LHS_HALF, rel=1e-15)
        assert d["margin"] == pytest.approx(0.0384805206, rel=1e-8)

    def test_shortest_round_trip(self, capsys):
        _, out, _ = run(capsys, "eval", "beta", "--alpha", "1.0")
        assert out == json.dumps({"bound": E.BETA[1.0]}) + "\n"

    @pytest.mark.parametrize(
        "argv,keys",
        [
            (["sinhsin", "--x", "0.5", "--alpha", "1", "--k0", "0"], ["bound", "reference", "margin"]),
            (["limit", "--x", "0.5"], ["bound", "reference", "margin"]),
            (["envelope", "--x", "0.5", "--alpha", "1"], ["bound", "reference", "margin"]),
            (["beta", "--alpha", "1"], ["bound"]),
            (["lambda", "--k", "1"], ["bound", "value"]),
        ],
    )
    def test_other_kinds(self, capsys, argv, keys):
        code, out, _ = run(capsys, "eval", *argv)
        assert code == 0
        d = json.loads(out)
        assert list(d) == keys
        if "margin" in d:
            assert d["margin"] > 0

    @pytest.mark.parametrize(
        "argv",
        [
            ["eval", "coshcos", "--x", "1.0", "--alpha", "1.0", "--k0", "0"],
            ["eval", "coshcos", "--x", "0.5", "--alpha", "1.6", "--k0", "0"],
            ["eval", "lemma", "--u", "1.0", "--v", "0.5"],
            ["eval", "lemma", "--u", "0.5", "--v", "0.5", "--k0", "-2"],
            ["eval", "lambda", "--k", "-1"],
            ["eval", "limit", "--x", "abc"],
            ["eval", "nope"],
            [],
        ],
    )
    def test_usage_errors_exit_2(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 2
        assert "usage" in err


class TestVerify:
    def test_all_passes_and_writes_report(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        code, out, _ = run(capsys, "verify", "--suite", "all", "--grid", "64", "--tol", "1e-12",
                           "--out", str(out_path))
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 8 and all(line.startswith("PASS ") for line in lines)
        payload = json.loads(out_path.read_text(encoding="utf-8"))
        assert payload["passed"] is True
        assert all(r["passed"] for r in payload["reports"])

    def test_lambda_suite(self, capsys):
        assert run(capsys, "verify", "--suite", "lambda", "--tol", "1e-12")[0] == 0

    def test_bad_grid(self, capsys):
        assert run(capsys, "verify", "--suite", "all", "--grid", "0")[0] == 2

    def test_bad_suite(self, capsys):
        assert run(capsys, "verify", "--suite", "everything")[0] == 2

    def test_unwritable(self, capsys, tmp_path):
        target = tmp_path / "missing" / "r.json"
        assert run(capsys, "verify", "--suite", "lambda", "--out", str(target))[0] == 2

    def test_sign_flip_exits_1(self, capsys, monkeypatch):
        flip_term(monkeypatch, "_coshcos_log_terms")
        code, out, _ = run(capsys, "verify", "--suite", "all", "--grid", "16")
        assert code == 1
        assert "FAIL ratio_coshcos" in out

    def test_max_terms_env(self, capsys, monkeypatch):
        monkeypatch.setenv("RATIO_BOUNDS_MAX_TERMS", "5")
        # a 5-term budget cannot meet the default tail target for the lambda sums
        assert run(capsys, "verify", "--suite", "lambda")[0] == 2
        monkeypatch.setenv("RATIO_BOUNDS_MAX_TERMS", "zero")
        assert run(capsys, "eval", "lambda", "--k", "1")[0] == 2


class TestSweep:
    def test_golden_bytes(self, capsys):
        code, out, _ = run(capsys, *GOLDEN_ARGS)
        assert code == 0
        assert out.encode("utf-8") == GOLDEN.read_bytes()

    def test_golden_against_oracle(self):
        rows = list(csv.DictReader(io.StringIO(GOLDEN.read_text(encoding="utf-8"))))
        assert list(rows[0]) == ["x", "reference", "b_k-1", "b_k0", "b_k2", "limit", "envelope"]
        assert len(rows) == 5
        mid = rows[2]
        assert float(mid["x"]) == 0.5
        assert float(mid["reference"]) == pytest.approx(E.COSHCOS[0.5], rel=1e-15)
        assert float(mid["b_k-1"]) == pytest.approx(E.COSHCOS_B_HALF_ONE[0], rel=1e-15)
        assert float(mid["b_k0"]) == pytest.approx(E.COSHCOS_B_HALF_ONE[1], rel=1e-15)
        assert float(mid["b_k2"]) == pytest.approx(E.COSHCOS_B_HALF_ONE[3], rel=1e-15)
        assert float(mid["limit"]) == pytest.approx(E.LIMIT_HALF, rel=1e-15)
        for row in rows:
            x = row["x"]
            assert float(row["reference"]) == pytest.approx(float(O.coshcos(x)), rel=1e-15)
            assert float(row["b_k0"]) == pytest.approx(float(O.coshcos_bound(x, 1, 0)), rel=1e-14)

    def test_rows_dominate_reference(self, capsys):
        _, out, _ = run(capsys, "sweep", "--family", "coshcos", "--alpha", "1.4", "--points", "40")
        rows = list(csv.reader(io.StringIO(out)))
        for row in rows[1:]:
            ref = float(row[1])
            assert all(float(v) - ref >= -1e-12 for v in row[2:])

    def test_sinhsin_shape(self, capsys):
        code, out, _ = run(capsys, "sweep", "--family", "sinhsin", "--alpha", "1.0", "--k0-list", "0",
                           "--points", "3")
        lines = out.split("\n")
        assert code == 0 and lines[0] == "x,reference,b_k0" and len(lines) == 5 and lines[-1] == ""
        assert all(len(line.split(",")) == 3 for line in lines[1:4])

    def test_seventeen_digits(self, capsys):
        _, out, _ = run(capsys, *GOLDEN_ARGS)
        for row in list(csv.reader(io.StringIO(out)))[1:]:
            for cell in row:
                assert float(cell) == float(f"{float(cell):.17g}")
                assert len(cell.replace(".", "").replace("-", "").lstrip("0").split("e")[0]) <= 17

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "sweep", "--k0-list", "-1,1", "--points", "4", "--format", "json")
        d = json.loads(out)
        assert code == 0
        assert d["columns"] == ["x", "reference", "b_k-1", "b_k1", "limit", "envelope"]
        assert len(d["rows"]) == 4

    def test_deterministic(self, capsys):
        first = run(capsys, "sweep", "--points", "7")[1]
        assert run(capsys, "sweep", "--points", "7")[1] == first

    @pytest.mark.parametrize(
        "argv",
        [["--points", "0"], ["--k0-list", "a,b"], ["--k0-list", "-3"], ["--alpha", "2.0"],
         ["--family", "tan"], ["--format", "xml"]],
    )
    def test_bad_flags(self, capsys, argv):
        assert run(capsys, "sweep", *argv)[0] == 2


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "ratio_bounds", "eval", "beta", "--alpha", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert math.isclose(json.loads(proc.stdout)["bound"], E.BETA[1.0])
