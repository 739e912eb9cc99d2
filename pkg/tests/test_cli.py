import json
import subprocess
import sys

import pytest

from aritygap import make_function
from aritygap.cli import function_file_text, main, parse_function_text
from aritygap.errors import ParseError

XOR_TEXT = "# exclusive or\n2 2 2\n0 1 1 0\n"
MAJ_TEXT = "2 3 2\n0 0 0 1 0 1 1 1\n"


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


class TestFunctionFileFormat:
    def test_decimal_with_comments(self):
        f = parse_function_text(XOR_TEXT)
        assert (f.k, f.n, f.b) == (2, 2, 2)
        assert f.table == (0, 1, 1, 0)

    def test_values_may_wrap_lines(self):
        f = parse_function_text("2 3 2\n0 1\n1 0 1 0\n0 1\n")
        assert f.n == 3 and f.table == (0, 1, 1, 0, 1, 0, 0, 1)

    def test_hex_form_equals_decimal(self):
        assert parse_function_text("hex:6") == parse_function_text(XOR_TEXT)
        assert parse_function_text("# comment\nhex:17\n") == parse_function_text(MAJ_TEXT)

    def test_hex_rejects_bad_length(self):
        with pytest.raises(ParseError):
            parse_function_text("hex:123")

    def test_hex_rejects_bad_digits(self):
        with pytest.raises(ParseError):
            parse_function_text("hex:xyz")

    def test_bad_header(self):
        with pytest.raises(ParseError):
            parse_function_text("2 2\n0 1 1 0\n")

    def test_wrong_value_count(self):
        with pytest.raises(ParseError):
            parse_function_text("2 2 2\n0 1 1\n")

    def test_value_out_of_range(self):
        with pytest.raises(ParseError):
            parse_function_text("2 2 2\n0 1 2 0\n")

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_function_text("# nothing here\n")

    def test_write_parse_round_trip(self):
        f = make_function(3, 3, 2, [0, 1, 2, 1, 2, 0, 2, 0, 1])
        assert parse_function_text(function_file_text(f, comment="latin square")) == f


class TestAnalyze:
    def test_xor_summary(self, tmp_path, capsys):
        path = write(tmp_path, "xor.fn", XOR_TEXT)
        assert main(["analyze", path]) == 0
        out = capsys.readouterr().out
        assert "ess=2 essl=0 gap=2 witness=(1,2)" in out
        assert "essential_vars: 1 2" in out

    def test_constant_gap_undefined(self, tmp_path, capsys):
        path = write(tmp_path, "const.fn", "2 2 2\n1 1 1 1\n")
        assert main(["analyze", path]) == 0
        assert "ess=0 gap: undefined" in capsys.readouterr().out

    def test_json_payload(self, tmp_path, capsys):
        path = write(tmp_path, "maj.fn", MAJ_TEXT)
        assert main(["analyze", path, "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["schema"] == "aritygap/1"
        assert payload["ess"] == 3 and payload["essl"] == 1 and payload["gap"] == 2
        assert payload["essential_vars"] == [1, 2, 3]

    def test_malformed_header_exits_2(self, tmp_path, capsys):
        path = write(tmp_path, "bad.fn", "2 2\n0 1 1 0\n")
        assert main(["analyze", path]) == 2
        assert "error:" in capsys.readouterr().err

    def test_missing_file_exits_2(self, capsys):
        assert main(["analyze", "/nonexistent/f.fn"]) == 2


class TestAnf:
    def test_and(self, tmp_path, capsys):
        path = write(tmp_path, "and.fn", "2 2 2\n0 0 0 1\n")
        assert main(["anf", path]) == 0
        assert capsys.readouterr().out.strip() == "x1*x2"

    def test_constant_one(self, tmp_path, capsys):
        path = write(tmp_path, "one.fn", "2 1 2\n1 1\n")
        assert main(["anf", path]) == 0
        assert capsys.readouterr().out.strip() == "1"

    def test_xor(self, tmp_path, capsys):
        path = write(tmp_path, "xor.fn", XOR_TEXT)
        assert main(["anf", path]) == 0
        assert capsys.readouterr().out.strip() == "x1 + x2"

    def test_not_boolean_exits_2(self, tmp_path, capsys):
        path = write(tmp_path, "tern.fn", "3 1 3\n0 1 2\n")
        assert main(["anf", path]) == 2


class TestClassify:
    def test_majority(self, tmp_path, capsys):
        path = write(tmp_path, "maj.fn", MAJ_TEXT)
        assert main(["classify", path, "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["tag"] == "TriangleMaj"
        assert payload["participants"] == [1, 2, 3]
        assert payload["gap"] == 2

    def test_and_not_special(self, tmp_path, capsys):
        path = write(tmp_path, "and.fn", "2 2 2\n0 0 0 1\n")
        assert main(["classify", path]) == 0
        out = capsys.readouterr().out
        assert "NotSpecial" in out and "gap=1" in out

    def test_xor_parity(self, tmp_path, capsys):
        path = write(tmp_path, "xor.fn", "hex:6")
        assert main(["classify", path]) == 0
        out = capsys.readouterr().out
        assert "LinearParity" in out and "gap=2" in out

    def test_single_variable_exits_2(self, tmp_path, capsys):
        path = write(tmp_path, "proj.fn", "2 2 2\n0 0 1 1\n")
        assert main(["classify", path]) == 2


class TestSweepCommand:
    def test_thmstr_small(self, capsys):
        assert main(["sweep", "--theorem", "thmstr", "--k", "2", "--b", "2", "--n", "3"]) == 0
        out = capsys.readouterr().out
        assert "violations: 0" in out and "result: pass" in out

    def test_thm1_lists_boolean_witnesses(self, capsys):
        assert main(["sweep", "--theorem", "thm1", "--k", "2", "--n", "2"]) == 0
        out = capsys.readouterr().out
        assert "0 1 1 0" in out  # xor
        assert "1 0 0 1" in out  # xnor

    def test_json_report(self, capsys):
        code = main(["sweep", "--theorem", "salomaamain", "--n", "2", "--json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["schema"] == "aritygap/1"
        assert payload["theorem"] == "ThmSalomaaMain"
        assert payload["violation_count"] == 0
        assert payload["checked"] + payload["skipped"] == 16

    def test_sampled_flags(self, capsys):
        code = main([
            "sweep", "--theorem", "thmgen", "--k", "3", "--b", "3", "--n", "4",
            "--count", "50", "--seed", "42", "--json",
        ])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["checked"] + payload["skipped"] == 50

    def test_budget_env_exits_3(self, capsys, monkeypatch):
        monkeypatch.setenv("ARITYGAP_BUDGET", "10")
        assert main(["sweep", "--theorem", "thmstr", "--n", "4"]) == 3

    def test_deg2_sweep(self, capsys):
        assert main(["sweep", "--theorem", "lemdeg2", "--n", "4"]) == 0
        assert "violations: 0" in capsys.readouterr().out


class TestSearchCommand:
    def test_boolean_rejected(self, capsys):
        assert main(["search", "--k", "2", "--n", "3"]) == 2
        assert "gap at most 2" in capsys.readouterr().err

    def test_arity_too_small_rejected(self, capsys):
        assert main(["search", "--k", "3", "--n", "3"]) == 2

    def test_small_run_reports_none(self, capsys):
        assert main(["search", "--k", "3", "--n", "4", "--count", "30", "--seed", "1"]) == 0
        assert "none found" in capsys.readouterr().out

    def test_json_report(self, capsys):
        assert main(["search", "--k", "3", "--n", "4", "--count", "20", "--seed", "5", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["found"] == []
        assert payload["count"] == 20


class TestGenerateCommand:
    def test_random_golden(self, tmp_path, capsys):
        out1 = str(tmp_path / "a.fn")
        out2 = str(tmp_path / "b.fn")
        assert main(["generate", "--random", "2", "2", "3", "1", "--out", out1]) == 0
        assert main(["generate", "--random", "2", "2", "3", "1", "--out", out2]) == 0
        text = open(out1).read()
        assert text == open(out2).read()
        assert parse_function_text(text).table == parse_function_text(text).table

    def test_quasilinear_spec_roundtrip(self, tmp_path, capsys):
        spec = {"k": 3, "n": 3, "h_maps": [[0, 1, 0]] * 3, "g_map": [0, 1]}
        spec_path = write(tmp_path, "ql.json", json.dumps(spec))
        out = str(tmp_path / "ql.fn")
        assert main(["generate", "--quasilinear", spec_path, "--out", out]) == 0
        assert main(["analyze", out]) == 0
        assert "gap=2" in capsys.readouterr().out

    def test_lift_spec_roundtrip(self, tmp_path, capsys):
        spec = {
            "base": {"k": 2, "b": 2, "n": 2, "table": [0, 1, 1, 0]},
            "gamma": [0, 1, 0],
            "phi": [0, 1],
        }
        spec_path = write(tmp_path, "lift.json", json.dumps(spec))
        out = str(tmp_path / "lift.fn")
        assert main(["generate", "--lift", spec_path, "--out", out]) == 0
        assert main(["analyze", out]) == 0
        assert "ess=2 essl=0 gap=2" in capsys.readouterr().out

    def test_stdout_output(self, capsys):
        assert main(["generate", "--random", "2", "2", "2", "7"]) == 0
        f = parse_function_text(capsys.readouterr().out)
        assert (f.k, f.n) == (2, 2)

    def test_invalid_spec_exits_2(self, tmp_path, capsys):
        spec_path = write(tmp_path, "bad.json", json.dumps({"k": 2}))
        assert main(["generate", "--quasilinear", spec_path]) == 2

    def test_bad_json_exits_2(self, tmp_path, capsys):
        spec_path = write(tmp_path, "bad.json", "{not json")
        assert main(["generate", "--quasilinear", spec_path]) == 2


def test_module_entry_point(tmp_path):
    path = tmp_path / "xor.fn"
    path.write_text("hex:6", encoding="utf-8")
    result = subprocess.run(
        [sys.executable, "-m", "aritygap", "analyze", str(path)],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "gap=2" in result.stdout
