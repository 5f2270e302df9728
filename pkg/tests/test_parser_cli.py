import json
import random
import subprocess
import sys
from fractions import Fraction as F

import pytest

from qhlip.cli import main
from qhlip.parser import (
    ParseError,
    parse_bi,
    parse_rational,
    parse_uni,
    print_bi,
    print_uni,
)
from qhlip.polyalg import BiPoly, UniPoly

from helpers import rand_unipoly


class TestParse:
    def test_hp_family_with_binding(self):
        out = parse_bi("X^6 - 3*l*X^4*Y + Y^3", {"l": F(1)})
        assert out == BiPoly({(6, 0): 1, (4, 1): -3, (0, 3): 1})

    def test_univariate(self):
        assert parse_uni("t^3 - 3*t + 1") == UniPoly([1, -3, 0, 1])

    def test_rational_coefficient(self):
        assert parse_bi("1/2*X^2") == BiPoly({(2, 0): F(1, 2)})

    def test_whitespace_insensitive(self):
        assert parse_uni(" t ^ 2-1 ") == UniPoly([-1, 0, 1])

    def test_parentheses_and_unary_minus(self):
        assert parse_uni("-(t - 1)*(t + 1)") == UniPoly([1, 0, -1])
        assert parse_uni("-t^2") == UniPoly([0, 0, -1])
        assert parse_uni("(-t)^2") == UniPoly([0, 0, 1])

    def test_syntax_error_has_position(self):
        with pytest.raises(ParseError) as err:
            parse_uni("t^3 + + 1")
        assert err.value.position == 6

    def test_unbound_identifier(self):
        with pytest.raises(ParseError, match="unbound identifier"):
            parse_bi("a*X")

    def test_negative_exponent(self):
        with pytest.raises(ParseError, match="negative exponent"):
            parse_uni("t^-2")

    def test_decimal_rejected(self):
        with pytest.raises(ParseError, match="p/q"):
            parse_uni("0.5*t")

    def test_wrong_variable_for_kind(self):
        with pytest.raises(ParseError, match="unbound identifier"):
            parse_uni("X^2")

    def test_parse_rational(self):
        assert parse_rational("5/2") == F(5, 2)
        assert parse_rational("-3") == F(-3)
        with pytest.raises(ParseError):
            parse_rational("0.5")

    def test_round_trip_uni(self):
        rng = random.Random(600)
        for _ in range(25):
            p = rand_unipoly(rng, 7)
            assert parse_uni(print_uni(p)) == p

    def test_round_trip_bi(self):
        rng = random.Random(601)
        for _ in range(25):
            terms = {
                (rng.randint(0, 5), rng.randint(0, 5)): F(
                    rng.randint(-9, 9), rng.randint(1, 4)
                )
                for _ in range(4)
            }
            p = BiPoly(terms)
            assert parse_bi(print_bi(p)) == p


def run_cli(*argv):
    return main(list(argv))


def run_cli_capture(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


HP = "X^6 - 3*l*X^4*Y + Y^3"


class TestCli:
    def test_classify2_not_equivalent_exit_code(self, capsys):
        code, out, _ = run_cli_capture(
            capsys,
            "classify2",
            HP,
            "X^6 - 3*m*X^4*Y + Y^3",
            "--beta",
            "2/1",
            "--let",
            "l=1",
            "--let",
            "m=4",
        )
        assert code == 1
        data = json.loads(out)
        assert data["verdict"] == "NotEquivalent"
        conditions = {c["condition"] for c in data["reason"]["necessity_conditions"]}
        assert "a" in conditions

    def test_classify2_equivalent_exit_code(self, capsys):
        code, out, _ = run_cli_capture(
            capsys,
            "classify2",
            HP,
            "X^6 - 3*m*X^4*Y + Y^3",
            "--beta",
            "2/1",
            "--let",
            "l=-1",
            "--let",
            "m=-2",
        )
        assert code == 0
        data = json.loads(out)
        assert data["certificate"]["theorem"] == "Cor_NoCritPoints"

    def test_classify1(self, capsys):
        code, out, _ = run_cli_capture(
            capsys, "classify1", "t^3 + 3*t + 1", "t^3 + 6*t + 1"
        )
        assert code == 0
        assert json.loads(out)["verdict"] == "Equivalent"

    def test_witness_report(self, capsys):
        code, out, _ = run_cli_capture(
            capsys,
            "witness",
            HP,
            "X^6 - 3*m*X^4*Y + Y^3",
            "--beta",
            "2/1",
            "--let",
            "l=-1",
            "--let",
            "m=-2",
            "--tol",
            "1e-8",
            "--samples",
            "4000",
        )
        assert code == 0
        report = json.loads(out)["report"]
        assert report["conjugacy_pass"]
        assert report["lipschitz_ratio_min"] > 0
        assert "asymptotic" in report

    def test_scan_single_class(self, capsys):
        code, out, _ = run_cli_capture(
            capsys,
            "scan",
            HP,
            "--param",
            "l",
            "--values=-1,-2,-3",
            "--beta",
            "2/1",
        )
        assert code == 0
        data = json.loads(out)
        assert data["partition"] == [[0, 1, 2]]
        assert data["unknown_pairs"] == []

    def test_scan_three_singletons(self, capsys):
        code, out, _ = run_cli_capture(
            capsys,
            "scan",
            HP,
            "--param",
            "l",
            "--values",
            "1/4,1,4",
            "--beta",
            "2/1",
        )
        assert code == 0
        assert json.loads(out)["partition"] == [[0], [1], [2]]

    def test_scan_partition_order_independent(self, capsys):
        def classes_by_value(values):
            code, out, _ = run_cli_capture(
                capsys, "scan", HP, "--param", "l", f"--values={values}", "--beta", "2/1"
            )
            assert code == 0
            data = json.loads(out)
            return {
                frozenset(data["values"][i] for i in cls) for cls in data["partition"]
            }

        assert classes_by_value("-1,-2,1,4") == classes_by_value("4,-2,1,-1")

    def test_infer_beta(self, capsys):
        code, out, _ = run_cli_capture(capsys, "infer-beta", "X^6 - 3*X^4*Y + Y^3")
        assert code == 0
        data = json.loads(out)
        assert data["matches"] == [{"beta": "2/1", "degree": 6}]

    def test_parse_error_json_on_stderr(self, capsys):
        code, out, err = run_cli_capture(capsys, "classify1", "t +", "t")
        assert code == 3
        assert out == ""
        assert json.loads(err)["error"]["code"] == "parse_error"

    def test_beta_validation_error(self, capsys):
        code, _, err = run_cli_capture(
            capsys, "classify2", "X^2 + Y", "X^2 + Y", "--beta", "1/2"
        )
        assert code == 3
        assert json.loads(err)["error"]["code"] == "beta_out_of_range"

    def test_decimal_binding_rejected(self, capsys):
        code, _, err = run_cli_capture(
            capsys, "classify2", HP, HP, "--beta", "2/1", "--let", "l=0.5"
        )
        assert code == 3
        assert json.loads(err)["error"]["code"] == "parse_error"

    def test_unknown_exit_code(self, capsys):
        code, out, _ = run_cli_capture(
            capsys,
            "classify2",
            "2*X^4",
            "X^4 + X^2*Y",
            "--beta",
            "2/1",
        )
        assert code == 2
        assert json.loads(out)["verdict"] == "Unknown"

    def test_byte_deterministic_output(self):
        cmd = [
            sys.executable,
            "-m",
            "qhlip.cli",
            "witness",
            HP,
            "X^6 - 3*m*X^4*Y + Y^3",
            "--beta",
            "2/1",
            "--let",
            "l=-1",
            "--let",
            "m=-3",
            "--samples",
            "2000",
        ]
        first = subprocess.run(cmd, capture_output=True)
        second = subprocess.run(cmd, capture_output=True)
        assert first.returncode == second.returncode == 0
        assert first.stdout == second.stdout
