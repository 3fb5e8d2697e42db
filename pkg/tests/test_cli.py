import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cohsys.cli import main
from cohsys.closed_forms import closed_form_n3
from cohsys.exact import IntPoly
from cohsys.moduli import WallPattern
from cohsys.serialize import (
    pattern_from_json,
    pattern_to_json,
    poly_from_json,
    poly_to_json,
    rational_from_json,
    rational_to_json,
)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestInfo:
    def test_rank_three(self, capsys):
        out = run_json(capsys, "info", "--n", "3", "--d", "5", "--k", "1", "--g", "2")
        assert out["beta"] == 11
        assert out["alpha_T"] == {"num": 1, "den": 1}
        assert out["nonempty"] is True

    def test_nnn(self, capsys):
        out = run_json(capsys, "info", "--n", "3", "--d", "3", "--k", "3", "--g", "2")
        assert out["nonempty"] is False

    def test_missing_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["info", "--n", "3", "--d", "3", "--k", "3"])
        assert exc.value.code == 2

    def test_invalid_genus(self, capsys):
        code, out, err = run(capsys, "info", "--n", "3", "--d", "3", "--k", "1", "--g", "1")
        assert code == 2 and out == "" and err.count("\n") == 1


class TestCritical:
    def test_certified_rank_four(self, capsys):
        (wall,) = run_json(capsys, "critical", "--n", "4", "--d", "7", "--k", "2", "--g", "2",
                           "--certified")
        assert wall["alpha"] == {"num": 5, "den": 2}
        (p,) = wall["patterns"]
        assert (p["n1"], p["d1"], p["k1"], p["c12"], p["c21"], p["certified"]) == (
            1, 3, 0, 8, 2, True)

    def test_certified_rank_three(self, capsys):
        assert run_json(capsys, "critical", "--n", "3", "--d", "5", "--k", "1", "--g", "2",
                        "--certified") == []

    def test_inverted_range(self, capsys):
        code, out, _ = run(capsys, "critical", "--n", "4", "--d", "7", "--k", "2", "--g", "2",
                           "--lo", "9/2", "--hi", "7/2")
        assert code == 2 and out == ""

    def test_candidates_sorted(self, capsys):
        walls = run_json(capsys, "critical", "--n", "2", "--d", "3", "--k", "1", "--g", "2")
        assert [w["alpha"] for w in walls] == [{"num": 1, "den": 1}]
        assert all(not p["certified"] for w in walls for p in w["patterns"])


class TestPoincare:
    def test_rank_three(self, capsys):
        out = run_json(capsys, "poincare", "--n", "3", "--d", "5", "--g", "2", "--alpha", "2/1")
        assert poly_from_json(out["coeffs"]) == closed_form_n3(5, 2)
        assert out["beta"] == 11 and out["degree"] == 22 and out["palindrome"]

    def test_wall(self, capsys):
        code, out, _ = run(capsys, "poincare", "--n", "4", "--d", "7", "--g", "2",
                           "--alpha", "5/2")
        assert code == 3 and out == ""

    def test_even(self, capsys):
        code, _, _ = run(capsys, "poincare", "--n", "4", "--d", "6", "--g", "2", "--alpha", "2/1")
        assert code == 4

    def test_outside_range(self, capsys):
        code, _, _ = run(capsys, "poincare", "--n", "4", "--d", "7", "--g", "2", "--alpha", "9")
        assert code == 2

    def test_chamber_and_csv(self, capsys):
        js = run_json(capsys, "poincare", "--n", "4", "--d", "7", "--g", "2", "--chamber", "0")
        code, out, _ = run(capsys, "poincare", "--n", "4", "--d", "7", "--g", "2",
                           "--chamber", "0", "--format", "csv")
        header, row = out.strip().split("\n")
        assert header.startswith("n,d,k,g,chamber,alpha_num,alpha_den,beta")
        cells = row.split(",")
        assert cells[:8] == ["4", "7", "2", "2", "0", "2", "1", "19"]
        assert [int(c) for c in cells[10:]] == js["coeffs"]


class TestReport:
    def test_pi1(self, capsys):
        out = run_json(capsys, "report", "--n", "4", "--d", "7", "--k", "2", "--g", "2",
                       "--alpha", "3/1")
        assert out["pi1"] == "Z^4"
        assert out["pi2"] == "Z x Z"
        assert out["pi1_detail"]["hypotheses"]
        assert "conjectures" not in out

    def test_exception(self, capsys):
        out = run_json(capsys, "report", "--n", "4", "--d", "6", "--k", "2", "--g", "2",
                       "--alpha", "2/1")
        assert out["exceptions"] == ["g2_k_n-2_d_even_unknown"]
        assert out["pic"] is None

    def test_brill_noether(self, capsys):
        out = run_json(capsys, "report", "--n", "3", "--d", "2", "--k", "2", "--g", "2",
                       "--alpha", "1/1")
        assert out["brill_noether"] == "G^0_4"

    def test_conjecture_tagged(self, capsys):
        out = run_json(capsys, "report", "--n", "6", "--d", "4", "--k", "2", "--g", "3",
                       "--alpha", "1/7", "--conjectures")
        assert out["conjectures"]["pi2"]["conjecture"] is True

    def test_k_equals_n(self, capsys):
        code, _, _ = run(capsys, "report", "--n", "3", "--d", "5", "--k", "3", "--g", "2",
                         "--alpha", "1")
        assert code == 2


SWEEP = ["sweep", "--n", "3:4", "--d", "1:9", "--g", "2:3"]


class TestSweep:
    def test_lines_and_determinism(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("COHSYS_THREADS", "1")
        a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        assert main(SWEEP + ["--out", str(a)]) == 0
        monkeypatch.setenv("COHSYS_THREADS", "2")
        assert main(SWEEP + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()
        assert main(SWEEP + ["--out", str(a)]) == 0
        assert a.read_bytes() == b.read_bytes()
        rows = [json.loads(line) for line in a.read_text().splitlines()]
        assert len(rows) >= 20
        keys = [(r["n"], r["d"], r["g"], r["chamber"]) for r in rows]
        assert keys == sorted(keys)
        assert all(r["poincare"]["palindrome"] for r in rows)
        # n=3 has one chamber; n=4 has two for d >= 3 and one for d = 1
        assert len(rows) == 10 + 2 * (1 + 2 * 4)

    def test_empty_range(self, tmp_path):
        out = tmp_path / "empty.jsonl"
        assert main(["sweep", "--n", "5:4", "--d", "1:9", "--g", "2:3", "--out", str(out)]) == 0
        assert out.read_bytes() == b""

    def test_unwritable(self, tmp_path, capsys):
        bad = tmp_path / "missing" / "x.jsonl"
        code, _, err = run(capsys, *SWEEP, "--out", str(bad))
        assert code == 5 and "cannot write" in err

    def test_even_rows_carry_difference(self, capsys, monkeypatch):
        monkeypatch.setenv("COHSYS_THREADS", "1")
        code, out, _ = run(capsys, "sweep", "--n", "4", "--d", "6", "--g", "3", "--parity", "even")
        rows = [json.loads(line) for line in out.splitlines()]
        assert code == 0 and rows
        assert all(r["poincare"] is None and r["difference"] is not None for r in rows)

    def test_csv(self, capsys, monkeypatch):
        monkeypatch.setenv("COHSYS_THREADS", "1")
        code, out, _ = run(capsys, *SWEEP, "--format", "csv")
        lines = out.strip().split("\n")
        assert code == 0 and len(lines) == 29

    def test_bad_thread_setting(self, capsys, monkeypatch):
        monkeypatch.setenv("COHSYS_THREADS", "many")
        code, _, _ = run(capsys, *SWEEP)
        assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cohsys", "info", "--n", "3", "--d", "5", "--k", "1", "--g", "2"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["beta"] == 11


@given(st.fractions())
def test_rational_round_trip(r):
    obj = json.loads(json.dumps(rational_to_json(r)))
    assert rational_from_json(obj) == r
    assert obj["den"] > 0


@given(st.lists(st.integers(-(2**80), 2**80), max_size=8))
def test_poly_round_trip(cs):
    p = IntPoly(cs)
    obj = json.loads(json.dumps(poly_to_json(p)))
    assert poly_from_json(obj) == p
    for c, j in zip(p.coeffs, obj):
        assert isinstance(j, int) == (abs(c) < 2**63)


@given(
    st.tuples(*[st.integers(-50, 50)] * 6), st.fractions(), st.integers(-99, 99),
    st.integers(-99, 99), st.booleans(),
)
def test_pattern_round_trip(ints, alpha, c12, c21, cert):
    p = WallPattern(*ints, alpha, c12, c21, cert)
    assert pattern_from_json(json.loads(json.dumps(pattern_to_json(p)))) == p


def test_big_coefficient_is_string():
    p = IntPoly([2**64, 1])
    assert poly_to_json(p) == [str(2**64), 1]
    assert rational_to_json(Fraction(-3, 6)) == {"num": -1, "den": 2}
