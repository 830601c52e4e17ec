"""Command-line surface: formats, round-trips, cache transparency, exit codes."""
from __future__ import annotations

import json
from fractions import Fraction

from seshadri.bounds import compute_bound
from seshadri.cli import main
from seshadri.render import (
    report_from_json_dict,
    report_to_json_dict,
    truncate2,
    truncate2_value,
)
from seshadri.lattice import QuadraticExpr

Q = Fraction


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestTruncation:
    def test_truncates_never_rounds(self):
        assert truncate2(Q(313600, 310)) == "1011.61"
        assert truncate2(Q(9801, 41)) == "239.04"  # 239.048... stays .04
        assert truncate2(Q(49, 6)) == "8.16"

    def test_trailing_zero_trimming(self):
        assert truncate2(Q(361, 10)) == "36.1"
        assert truncate2(Q(1)) == "1"
        assert truncate2(Q(1369)) == "1369"
        assert truncate2(Q(519841, 10)) == "51984.1"

    def test_surd_values(self):
        assert truncate2_value(QuadraticExpr(-497, 133, 14)) == "0.64"
        assert truncate2_value(QuadraticExpr(0, 1, 2)) == "1.41"
        assert truncate2_value(QuadraticExpr(0, -1, 2)) == "-1.41"
        assert truncate2_value(QuadraticExpr(0, 1, 4)) == "2"


class TestCandidatesCommand:
    def test_text_matches_reference_values(self, capsys):
        code, out, _ = run_cli(capsys, "candidates", "--n", "10", "--m-max", "182")
        assert code == 0
        lines = out.strip().splitlines()[1:]
        assert len(lines) == 32
        assert lines[0].split() == ["3", "1", "0", "1"]
        assert lines[1].split() == ["6", "2", "-1", "36.1"]

    def test_csv_is_exact(self, capsys):
        code, out, _ = run_cli(capsys, "--jobs", "1", "candidates", "--n", "10",
                               "--m-max", "7", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "t,m,k,e_num,e_den,e_trunc,f_num,f_den"
        assert lines[3] == "22,7,0,49,6,8.16,245,3"

    def test_json_round_trips(self, capsys):
        code, out, _ = run_cli(capsys, "candidates", "--n", "11", "--m-max", "32",
                               "--format", "json")
        assert code == 0
        data = json.loads(out)
        row = [c for c in data["candidates"] if c["t"] == 106][0]
        assert Q(int(row["e"]["num"]), int(row["e"]["den"])) == Q(123904, 11 * 308)


class TestAlphaCommand:
    def test_semiuniform_input(self, capsys):
        code, out, _ = run_cli(capsys, "alpha", "--n", "10", "--m", "2", "--k", "-1")
        assert code == 0
        assert "alpha >= 7   (specialization criterion)" in out
        assert "alpha >= 6   (closed form)" in out

    def test_explicit_mults_and_trace(self, capsys):
        code, out, _ = run_cli(capsys, "alpha", "--n", "10",
                               "--mults", "1,1,1,1,1,1,1,1,1,1", "--trace")
        assert code == 0
        assert "alpha >= 4" in out
        assert "j = 3" in out or "j = " in out

    def test_custom_parameters(self, capsys):
        code, out, _ = run_cli(capsys, "alpha", "--n", "14", "--m", "1", "--k", "1",
                               "--d", "3", "--r", "12")
        assert code == 0
        assert "r = 12" in out


class TestBoundCommand:
    def test_text_shape(self, capsys):
        code, out, _ = run_cli(capsys, "bound", "--n", "10")
        assert code == 0
        assert "f = 1011.61 (exact 31360/31), blocker C(177,56,0)" in out

    def test_json_round_trip(self, capsys):
        code, out, _ = run_cli(capsys, "bound", "--n", "11", "--format", "json")
        assert code == 0
        rep = report_from_json_dict(json.loads(out))
        assert rep == compute_bound(11)

    def test_strict_budget_limited_exit(self, capsys):
        code, out, _ = run_cli(capsys, "bound", "--n", "10", "--m-cap", "5", "--strict")
        assert code == 3
        assert "BUDGET-LIMITED" in out

    def test_custom_db_file(self, capsys, tmp_path):
        from seshadri.exclusions import default_db

        path = tmp_path / "db.json"
        default_db().with_sources(disable=("Miranda",)).save(str(path))
        code, out, _ = run_cli(capsys, "bound", "--n", "10", "--db", str(path))
        assert code == 0
        assert "blocker C(79,25,0)" in out

    def test_cache_transparency(self, capsys, tmp_path):
        cache = tmp_path / "cache.json"
        _, plain, _ = run_cli(capsys, "bound", "--n", "12")
        _, first, _ = run_cli(capsys, "--cache", str(cache), "bound", "--n", "12")
        assert cache.exists()
        _, second, _ = run_cli(capsys, "--cache", str(cache), "bound", "--n", "12")
        assert plain == first == second

    def test_cache_hit_is_used(self, capsys, tmp_path):
        cache = tmp_path / "cache.json"
        run_cli(capsys, "--cache", str(cache), "bound", "--n", "12")
        data = json.loads(cache.read_text())
        (key, payload), = data.items()
        assert key.startswith("n=12|d=3|r=10|db=")
        payload["f"] = {"num": "999", "den": "1"}
        cache.write_text(json.dumps(data))
        _, out, _ = run_cli(capsys, "--cache", str(cache), "bound", "--n", "12")
        assert "999" in out


class TestFormulasCommand:
    def test_range(self, capsys):
        code, out, _ = run_cli(capsys, "formulas", "--n", "17..17")
        assert code == 0
        assert "theoremone-a" in out and "1089" in out

    def test_single_and_square(self, capsys):
        code, out, _ = run_cli(capsys, "formulas", "--n", "16")
        assert code == 0
        assert "correm-21" in out  # uniform consequences hold for squares too


class TestVerifyCommand:
    def test_table_a_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--table", "A")
        assert code == 0
        assert "PASS" in out


class TestExitCodes:
    def test_usage_error(self, capsys):
        assert main(["bogus-subcommand"]) == 2

    def test_missing_required(self, capsys):
        assert main(["candidates"]) == 2

    def test_domain_error_reported(self, capsys):
        code, _, err = run_cli(capsys, "bound", "--n", "16")
        assert code == 2
        assert "square" in err


def test_report_json_dict_round_trip():
    rep = compute_bound(10)
    assert report_from_json_dict(report_to_json_dict(rep)) == rep


class TestReferenceTables:
    def test_table_a_has_32_rows(self):
        from seshadri.tables import TABLE_A

        assert len(TABLE_A) == 32

    def test_table_b_covers_every_nonsquare(self):
        from math import isqrt

        from seshadri.tables import TABLE_B

        want = [n for n in range(10, 100) if isqrt(n) ** 2 != n]
        assert [row.n for row in TABLE_B] == want

    def test_exception_rows_are_tagged(self):
        from seshadri.tables import EXCEPTION_NS, REFERENCE_F

        assert EXCEPTION_NS == {17, 19, 22, 26, 37, 41, 50, 65, 82}
        assert REFERENCE_F[41] == (1025, "Harbourne")
        assert REFERENCE_F[19][1] == "Biran"

    def test_normalized_class_note_preserved(self):
        from seshadri.tables import TABLE_B_BY_N

        row = TABLE_B_BY_N[19]
        assert (row.t, row.m) == (170, 39)
        assert "C(170.39)" in row.note

    def test_printed_values_match_their_own_classes(self):
        # each printed f is the truncation of the exact value implied by the
        # row's class, except the two rows flagged as one digit short
        from seshadri.tables import TABLE_B, implied_f

        off_by_a_digit = []
        for row in TABLE_B:
            if truncate2(implied_f(row)) != row.f_str:
                off_by_a_digit.append(row.n)
                assert row.note is not None, row
        assert off_by_a_digit == [21, 79]
