import json

import pytest

from gammapos.cli import (
    EXIT_FAIL,
    EXIT_PASS,
    EXIT_RESOURCE,
    EXIT_USAGE,
    _emit_reports,
    main,
)
from gammapos.exactpoly import IntPoly1, QTPoly, QTRPoly
from gammapos.reports import Report


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCompute:
    def test_text_examples(self, capsys):
        code, out, _ = run(capsys, "compute", "q-eulerian", "--n", "3")
        assert code == EXIT_PASS
        assert out.strip() == "1 + (2 + q + q^2)*t + t^2"
        code, out, _ = run(capsys, "compute", "eulerian", "--n", "0")
        assert code == EXIT_PASS and out.strip() == "1"

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "compute", "q-eulerian", "--n", "4",
                           "--format", "json")
        assert code == EXIT_PASS
        payload = json.loads(out)
        parsed = QTPoly.from_json(payload["polynomial"])
        assert parsed.to_json() == payload["polynomial"]
        assert parsed.to_text() == \
            "1 + (3 + 2*q + 3*q^2 + 2*q^3 + q^4)*t + " \
            "(3 + 2*q + 3*q^2 + 2*q^3 + q^4)*t^2 + t^3"

    def test_json_round_trip_intpoly(self, capsys):
        code, out, _ = run(capsys, "compute", "eulerian", "--n", "5",
                           "--format", "json")
        payload = json.loads(out)
        assert IntPoly1.from_json(payload["polynomial"]).to_json() == payload["polynomial"]

    def test_json_round_trip_qtr(self, capsys):
        code, out, _ = run(capsys, "compute", "q-eulerian-fix", "--n", "3",
                           "--format", "json")
        payload = json.loads(out)
        assert QTRPoly.from_json(payload["polynomial"]).to_json() == payload["polynomial"]

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "compute", "q-eulerian", "--n", "3",
                           "--format", "csv")
        assert code == EXIT_PASS
        assert out.strip().split("\r\n")[0] == "1,2 + q + q^2,1"

    def test_gamma_class(self, capsys):
        code, out, _ = run(capsys, "compute", "gamma-class", "--family",
                           "derangement", "--n", "4", "--k", "1",
                           "--format", "json")
        assert code == EXIT_PASS
        payload = json.loads(out)
        assert payload["permutations"] == ["1324", "1423", "2314", "2413", "3412"]

    def test_polytope_targets(self, capsys):
        code, out, _ = run(capsys, "compute", "stellohedron-h", "--n", "3")
        assert code == EXIT_PASS and out.strip() == "1 + 7*t + 7*t^2 + t^3"

    def test_sym_target(self, capsys):
        code, out, _ = run(capsys, "compute", "sym-derangement", "--n", "2")
        assert code == EXIT_PASS and "t" in out

    def test_missing_parameter(self, capsys):
        code, _, err = run(capsys, "compute", "q-eulerian")
        assert code == EXIT_USAGE and "--n" in err


class TestVerify:
    def test_pass_exit_code(self, capsys):
        code, out, _ = run(capsys, "verify", "gamma", "--family",
                           "binomial-eulerian-qt", "--n", "4")
        assert code == EXIT_PASS
        assert out.startswith("PASS")

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "verify", "cgk", "--r", "1", "--s", "2")
        assert code == EXIT_PASS
        code, out, _ = run(capsys, "verify", "cgk", "--r", "1", "--s", "2",
                           "--format", "json")
        payload = json.loads(out)
        assert payload["status"] == "pass"
        assert payload["lhs"] == "7"

    def test_gal(self, capsys):
        code, out, _ = run(capsys, "verify", "gal", "--complex",
                           "cross-polytope", "--n", "4")
        assert code == EXIT_PASS

    def test_fail_exit_code(self, capsys):
        failing = Report("synthetic", {}, "fail")
        assert _emit_reports([failing], "text") == EXIT_FAIL
        assert _emit_reports([Report("ok", {}, "pass")], "text") == EXIT_PASS
        capsys.readouterr()

    def test_unknown_target(self, capsys):
        code, _, err = run(capsys, "verify", "nope", "--n", "1")
        assert code == EXIT_USAGE


class TestExitCodes:
    def test_resource(self, capsys):
        code, _, err = run(capsys, "compute", "q-eulerian", "--n", "12")
        assert code == EXIT_RESOURCE
        code, _, err = run(capsys, "verify", "gamma", "--family", "eulerian-qt",
                           "--n", "11")
        assert code == EXIT_RESOURCE

    def test_usage(self, capsys):
        code, _, _ = run(capsys, "compute", "nosuch", "--n", "1")
        assert code == EXIT_USAGE
        code, _, _ = run(capsys, "bogus-verb")
        assert code == EXIT_USAGE

    def test_validation_maps_to_usage(self, capsys):
        code, _, _ = run(capsys, "verify", "gamma", "--family", "eulerian-qt",
                         "--n", "0")
        assert code == EXIT_USAGE


class TestTable:
    def test_csv_table(self, capsys):
        code, out, _ = run(capsys, "table", "q-eulerian", "--n-min", "2",
                           "--n-max", "3")
        assert code == EXIT_PASS
        lines = out.strip().splitlines()
        assert lines[1].startswith("2,")
        assert "2 + q + q^2" in lines[2]

    def test_gamma_table(self, capsys):
        code, out, _ = run(capsys, "table", "gamma-derangement", "--n-max", "4",
                           "--format", "json")
        rows = json.loads(out)
        assert rows[-1] == {"n": 4, "coefficients": ["1", "q + 2*q^2 + q^3 + q^4"]}

    def test_requires_n_max(self, capsys):
        code, _, err = run(capsys, "table", "eulerian")
        assert code == EXIT_USAGE


class TestSuite:
    def test_vacuous(self, capsys):
        code, out, _ = run(capsys, "suite", "--max-n", "0")
        assert code == EXIT_PASS
        assert "0 failed" in out

    def test_small(self, capsys):
        code, out, _ = run(capsys, "suite", "--max-n", "2")
        assert code == EXIT_PASS
        assert "FAIL" not in out

    def test_alias(self, capsys):
        code, _, _ = run(capsys, "run-suite", "--max-n", "0")
        assert code == EXIT_PASS
