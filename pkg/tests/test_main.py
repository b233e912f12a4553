import json
import os

import pytest

from dualcalc.main import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, build_parser, main

LOOP = "[x.(x * not<x>)]not * not<[x.(x * not<x>)]not>"


def run_json(capsys, *argv):
    code = main(["--json", *argv])
    return code, json.loads(capsys.readouterr().out)


class TestCheck:
    def test_valid_judgment(self, capsys):
        assert main(["check", "x : A |- | x : A"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "[1/2] 正在解析判断" in out
        assert "✓ 判断成立" in out

    def test_invalid_judgment(self, capsys):
        assert main(["check", "x : A |- | x : B"]) == EXIT_FAILURE
        assert "✗ 判断不成立" in capsys.readouterr().out

    def test_json_output(self, capsys):
        code, data = run_json(capsys, "check", "x : A |- | <x>inl : A \\/ B")
        assert code == EXIT_OK
        assert data["typable"] is True
        assert data["derivation_size"] == 2

    def test_output_options_after_subcommand(self, capsys):
        assert main(["check", "--json", "x : A |- | x : A"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["typable"] is True

    def test_syntax_error_is_a_usage_error(self, capsys):
        assert main(["check", "x : A |- | x *"]) == EXIT_USAGE
        out = capsys.readouterr().out
        assert "✗" in out
        assert "[2/2]" not in out

    def test_json_error_payload(self, capsys):
        code, data = run_json(capsys, "check", "x : A |- | x *")
        assert code == EXIT_USAGE
        assert data["error"]["code"] == "syntax"

    def test_missing_cut_type_needs_infer(self, capsys):
        args = ["check", "--prelude", "--name", "choice"]
        assert main(args) == EXIT_FAILURE
        assert "cut type" in capsys.readouterr().out
        assert main([*args, "--infer"]) == EXIT_OK
        assert main([*args, "--infer", "--strict"]) == EXIT_OK

    def test_derivation_and_elaboration(self, capsys):
        code = main(["check", "--derivation", "--elaborate", "--validate", "x : A |- | x : A"])
        assert code == EXIT_OK
        assert "x : A" in capsys.readouterr().out


class TestReduce:
    def test_all_traces_of_choice(self, capsys):
        code, data = run_json(capsys, "reduce", "--all", "--prelude", "--name", "pick")
        assert code == EXIT_OK
        assert set(data["normal_forms"]) == {"x * 'k", "y * 'k"}
        assert all(t["status"] == "normal_form" for t in data["traces"])

    @pytest.mark.parametrize("strategy,expected", [("cbv", "x * 'k"), ("cbn", "y * 'k")])
    def test_deterministic(self, capsys, strategy, expected):
        args = ["reduce", "-s", strategy, "--prelude", "--name", "pick"]
        code, data = run_json(capsys, *args)
        assert code == EXIT_OK
        assert data["normal_forms"] == [expected]

    def test_trace_lines(self, capsys):
        assert main(["-q", "reduce", "--trace", "<x, y> * fst['a]"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "<x, y> * fst['a]"
        assert lines[1] == "--[β∧1 @ ε]--> x * 'a"

    def test_fuel_exhaustion(self, capsys):
        assert main(["reduce", "--fuel", "3", LOOP]) == EXIT_OK
        assert "⚠ 燃料耗尽" in capsys.readouterr().out
        assert main(["reduce", "--fuel", "3", "--strict", LOOP]) == EXIT_FAILURE

    def test_dc2_has_no_call_by_value(self, capsys):
        assert main(["reduce", "-s", "cbv", "<x>a * a{A}['c]"]) == EXIT_USAGE

    def test_name_needs_a_source(self, capsys):
        assert main(["reduce", "--name", "pick"]) == EXIT_USAGE
        assert "--prelude" in capsys.readouterr().out

    def test_missing_input(self, capsys):
        assert main(["reduce"]) == EXIT_USAGE


class TestGraph:
    def test_choice_is_not_confluent(self, capsys):
        args = ["graph", "--confluence", "--sn", "--prelude", "--name", "pick"]
        code, data = run_json(capsys, *args)
        assert code == EXIT_FAILURE
        assert data["confluent"] == "no"
        assert data["strongly_normalizing"] == "yes"

    def test_call_by_value_is_confluent(self, capsys):
        args = ["graph", "-s", "cbv", "--confluence", "--prelude", "--name", "pick"]
        code, data = run_json(capsys, *args)
        assert code == EXIT_OK
        assert data["confluent"] == "yes"

    def test_cycle_is_not_strongly_normalizing(self, capsys):
        code, data = run_json(capsys, "graph", "--sn", LOOP)
        assert code == EXIT_FAILURE
        assert data["nodes"] == 2
        assert data["strongly_normalizing"] == "no"

    def test_unknown_verdict_fails_only_when_strict(self, capsys):
        args = ["graph", "--sn", "--max-nodes", "3", "--prelude", "--name", "two_itr"]
        code, data = run_json(capsys, *args)
        assert data["cap_hit"]["nodes"]
        assert data["strongly_normalizing"] == "unknown"
        assert code == EXIT_OK
        assert main([*args, "--strict"]) == EXIT_FAILURE


class TestOtherCommands:
    def test_dual_of_expression(self, capsys):
        code, data = run_json(capsys, "dual", "x * 'a")
        assert code == EXIT_OK
        assert data["dual"] == "a * 'x"

    def test_dual_of_type(self, capsys):
        assert main(["-q", "dual", "A /\\ B"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "A \\/ B"

    def test_translate_to_sl2(self, capsys):
        code = main(["translate", "--target", "sl2", "--check", "x : A |- | <x>inl : A \\/ A"])
        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert "⊢" in out and "inj1(x)" in out

    def test_translate_to_dc2_checks(self, capsys):
        assert main(["translate", "--check", "--infer", "--prelude", "--name", "zero"]) == EXIT_OK

    def test_translate_rejects_types(self, capsys):
        assert main(["translate", "A /\\ B"]) == EXIT_USAGE

    def test_desugar_cbv(self, capsys):
        assert main(["desugar-cbv", "--verify", "<(x * 'b).'a>inl * 'c"]) == EXIT_OK
        assert "D →*CBV D⊛" in capsys.readouterr().out

    def test_mono(self, capsys):
        args = [
            "mono",
            "--var", "X",
            "--context", "X /\\ A",
            "--domain", "A",
            "--codomain", "A \\/ A",
            "--binder", "x",
            "--body", "<x>inl",
            "--argument", "n",
        ]  # fmt: skip
        code, data = run_json(capsys, *args)
        assert code == EXIT_OK
        assert data["measure"] == 2

    def test_measure(self, capsys):
        code, data = run_json(capsys, "measure", "<x, y> * fst['a]")
        assert code == EXIT_OK
        assert data["size"] == 3
        assert data["degree"] == [0, 3]

    def test_stdlib_listing_and_entry(self, capsys):
        assert main(["stdlib"]) == EXIT_OK
        assert "iterate-succ" in capsys.readouterr().out
        code, data = run_json(capsys, "stdlib", "numeral", "--n", "3", "--check")
        assert code == EXIT_OK
        assert data["typable"] is True

    def test_unknown_stdlib_entry(self, capsys):
        assert main(["stdlib", "nope"]) == EXIT_USAGE

    def test_source_file(self, capsys, tmp_path):
        path = tmp_path / "defs.dc"
        path.write_text("term f [y : A] [] : A = y\nstmt s [y : A] ['k : A] = f * 'k\n")
        code, data = run_json(capsys, "reduce", "--file", str(path), "--name", "s")
        assert code == EXIT_OK
        assert data["normal_forms"] == ["y * 'k"]

    def test_missing_source_file(self, capsys, tmp_path):
        assert main(["check", "--file", str(tmp_path / "none.dc"), "--name", "s"]) == EXIT_USAGE


class TestReports:
    def test_reduce_writes_trace_reports(self, capsys, report_dir):
        assert main(["reduce", "--report-dir", report_dir, "<x, y> * fst['a]"]) == EXIT_OK
        assert os.path.exists(os.path.join(report_dir, "trace_0.csv"))

    def test_measure_writes_csv(self, capsys, report_dir):
        assert main(["measure", "--report-dir", report_dir, "x * 'a"]) == EXIT_OK
        assert os.path.exists(os.path.join(report_dir, "measures.csv"))


def test_parser_rejects_unknown_commands():
    parser = build_parser()
    assert parser.parse_args(["measure", "x * 'a"]).command == "measure"
    with pytest.raises(SystemExit):
        parser.parse_args(["bogus"])
