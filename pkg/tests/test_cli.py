"""End-to-end command-line behavior via run_command."""

import io
import json

import pytest

from bincyclic.cli import run_command
from bincyclic.codecore import assemble, describe
from bincyclic.constructions import DefiningSet, build_even_m
from bincyclic.fixtures import EXAMPLE1_Z2, SQRT_M5_Z
from bincyclic.gf2 import poly_to_hex

M4_COSETS_CSV = (
    "leader,size,members\n"
    "0,1,0\n"
    "1,4,1;2;4;8\n"
    "3,4,3;6;9;12\n"
    "5,2,5;10\n"
    "7,4,7;11;13;14\n"
)


class TestCosets:
    def test_m4_csv_table(self, capsys):
        assert run_command(["cosets", "--m", "4"]) == 0
        assert capsys.readouterr().out == M4_COSETS_CSV

    def test_bad_m_is_a_domain_error(self, capsys):
        assert run_command(["cosets", "--m", "1"]) == 1
        assert capsys.readouterr().err.startswith("error:")


class TestConstruct:
    def test_sqrt_m5_elements_only(self, capsys):
        assert run_command(["construct", "sqrt", "--m", "5", "--elements-only"]) == 0
        out = capsys.readouterr().out
        assert out.endswith("\n")
        values = [int(line) for line in out.splitlines()]
        assert values == sorted(values)
        assert tuple(values) == SQRT_M5_Z
        # parseable straight back into the identical set
        assert DefiningSet.from_elements(31, values).as_set() == set(SQRT_M5_Z)

    def test_even_m_json_payload(self, capsys):
        rc = run_command(
            ["construct", "even-m", "--m", "4", "--which", "C2", "--json"]
        )
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["schema"] == 1
        assert payload["code"]["defining_set"] == list(EXAMPLE1_Z2)
        assert payload["code"]["dimension"] == 7
        assert payload["audit"]["construction"] == "even-m"

    def test_json_report_matches_library_exactly(self, capsys):
        run_command(["construct", "even-m", "--m", "6", "--which", "C1", "--json"])
        payload = json.loads(capsys.readouterr().out)
        z1, _, audit = build_even_m(6)
        assert payload["code"] == describe(z1).as_dict()
        assert payload["audit"] == audit.as_dict()

    def test_human_summary(self, capsys):
        assert run_command(["construct", "two-prime", "--p", "3"]) == 0
        out = capsys.readouterr().out
        assert "n                : 63  (m = 6)" in out
        assert "dimension        : 32" in out
        assert "bch lower bound  : 12" in out
        assert "dual bch bound   : 7" in out

    def test_sqrt_choose_flag(self, capsys):
        rc = run_command(
            ["construct", "sqrt", "--m", "7", "--choose", "21,27", "--json"]
        )
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["audit"]["selected_leaders"] == [27, 21]

    def test_bad_choice_is_a_domain_error(self, capsys):
        rc = run_command(["construct", "sqrt", "--m", "7", "--choose", "19,27"])
        assert rc == 1
        assert "error:" in capsys.readouterr().err

    def test_weight_class_mismatched_parity(self, capsys):
        assert run_command(["construct", "weight-class", "--m", "8", "--i", "0"]) == 1


class TestAnalyze:
    def test_empty_set_is_the_full_space(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(""))
        assert run_command(["analyze", "--m", "4"]) == 0
        out = capsys.readouterr().out
        assert "dimension        : 15" in out
        assert "exact distance   : 1" in out

    def test_stdin_comma_separated(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("1, 2, 4\n"))
        assert run_command(["analyze", "--m", "3", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["code"]["defining_set"] == [1, 2, 4]
        assert payload["distance"]["exact_distance"] == 3

    def test_file_input_round_trips_construct_output(self, capsys, tmp_path):
        run_command(["construct", "sqrt", "--m", "5", "--elements-only"])
        elements = capsys.readouterr().out
        src = tmp_path / "z.txt"
        src.write_text(elements)
        assert run_command(["analyze", str(src), "--m", "5", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["code"]["defining_set"] == list(SQRT_M5_Z)
        assert payload["code"]["dimension"] == 16
        assert payload["distance"]["exact_distance"] == 7

    def test_hex_display_matches_library_encoding(self, capsys, monkeypatch):
        z = DefiningSet.from_elements(15, (1, 2, 4, 8, 5, 10))
        expected_hex = poly_to_hex(assemble(z).generator)
        monkeypatch.setattr("sys.stdin", io.StringIO("1 2 4 8 5 10\n"))
        assert run_command(["analyze", "--m", "4", "--hex"]) == 0
        out = capsys.readouterr().out
        assert f"generator        : {expected_hex}" in out

    def test_not_closed_under_doubling_is_a_domain_error(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("1\n"))
        assert run_command(["analyze", "--m", "4"]) == 1
        assert "doubling" in capsys.readouterr().err

    def test_missing_file_is_a_domain_error(self, capsys):
        assert run_command(["analyze", "/nonexistent/z.txt", "--m", "4"]) == 1

    def test_search_engine_flags(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("1 2 4 8\n"))
        rc = run_command(
            ["analyze", "--m", "4", "--engine", "search",
             "--seed", "9", "--iters", "50", "--json"]
        )
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["distance"]["method"] == "search"
        assert payload["distance"]["seed"] == 9
        assert payload["distance"]["iterations"] == 50


class TestVerifyPaper:
    def test_example1_passes(self, capsys):
        assert run_command(["verify-paper", "--fixture", "example1"]) == 0
        out = capsys.readouterr().out
        assert "[ok  ] example1" in out
        assert "1 fixture(s): 1 passed, 0 failed" in out

    def test_table3_p3_passes(self, capsys):
        rc = run_command(["verify-paper", "--fixture", "table3-p3", "--threads", "4"])
        assert rc == 0
        assert "1 passed, 0 failed" in capsys.readouterr().out

    def test_unknown_fixture_warns_but_succeeds(self, capsys):
        assert run_command(["verify-paper", "--fixture", "no-such-thing"]) == 0
        captured = capsys.readouterr()
        assert "warning: no fixture matches" in captured.err
        assert captured.out == ""

    def test_known_mismatch_reports_and_exits_2(self, capsys):
        rc = run_command(["verify-paper", "--fixture", "weight-class-m9-i0"])
        assert rc == 2
        out = capsys.readouterr().out
        assert "[FAIL] weight-class-m9-i0" in out
        assert "size: expected 255, got 264" in out
        assert "note:" in out

    def test_json_report_structure(self, capsys):
        rc = run_command(["verify-paper", "--fixture", "sqrt-m5", "--json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["schema"] == 1
        [fx] = payload["fixtures"]
        assert fx["id"] == "sqrt-m5" and fx["ok"] is True
        assert all(row["ok"] for row in fx["rows"])
        fields = {row["field"] for row in fx["rows"]}
        assert "dimension" in fields and "distance" in fields

    def test_glob_pattern_selection(self, capsys):
        rc = run_command(["verify-paper", "--fixture", "even-m*"])
        assert rc == 0
        out = capsys.readouterr().out
        for m in (6, 8, 10, 12):
            assert f"even-m{m}" in out


class TestExport:
    def test_default_engine_skips_distance(self, capsys):
        rc = run_command(["export", "even-m", "--m", "4", "--which", "C1"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["schema"] == 1
        assert "distance" not in payload
        assert payload["code"]["generator_bits"] is None
        assert payload["audit"]["m"] == 4

    def test_exhaustive_engine_includes_distance(self, capsys):
        rc = run_command(
            ["export", "even-m", "--m", "4", "--which", "C1",
             "--engine", "exhaustive"]
        )
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["distance"]["exact_distance"] == 3
        assert payload["code"]["generator_bits"] is not None

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        rc = run_command(
            ["export", "sqrt", "--m", "5", "--output", str(target)]
        )
        assert rc == 0
        assert capsys.readouterr().out == ""
        payload = json.loads(target.read_text())
        assert payload["schema"] == 1
        assert payload["code"]["defining_set"] == list(SQRT_M5_Z)

    def test_unwritable_output_is_a_domain_error(self, capsys):
        rc = run_command(
            ["export", "sqrt", "--m", "5", "--output", "/nonexistent/dir/out.json"]
        )
        assert rc == 1


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ["bogus"],
            ["cosets"],                      # missing required --m
            ["cosets", "--bogus"],
            ["construct"],                   # missing family
            ["construct", "sqrt"],           # missing --m
            ["construct", "even-m", "--m", "4"],  # missing --which
            ["analyze"],                     # missing --m
            ["construct", "weight-class", "--m", "9", "--i", "2"],
        ],
    )
    def test_exit_64(self, argv, capsys):
        assert run_command(argv) == 64
        assert capsys.readouterr().err != ""

    def test_no_command_prints_help(self, capsys):
        assert run_command([]) == 64
        assert "usage" in capsys.readouterr().out.lower()
