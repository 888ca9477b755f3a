import json
import math

import pytest

from pseudopoly import ExactSequence, InputError, IntPolynomial
from pseudopoly.cli import run_cli
from pseudopoly.formats import (
    parse_polynomial,
    parse_sequence,
    render_polynomial,
    render_sequence,
)


def fibonacci(count):
    terms = [0, 1]
    while len(terms) < count:
        terms.append(terms[-1] + terms[-2])
    return terms[:count]


def write_sequence(tmp_path, name, terms):
    path = tmp_path / name
    path.write_text("\n".join(str(t) for t in terms) + "\n")
    return str(path)


class TestFormats:
    def test_parse_newline_format(self):
        seq = parse_sequence("1\n-2\n3\n")
        assert list(seq) == [1, -2, 3]

    def test_parse_json_strings(self):
        seq = parse_sequence('["5", "-17", "123456789012345678901234567890"]')
        assert list(seq) == [5, -17, 123456789012345678901234567890]

    def test_parse_rejects_floats(self):
        with pytest.raises(InputError):
            parse_sequence("[1.5, 2]")
        with pytest.raises(InputError):
            parse_sequence("1.5\n2\n")

    def test_parse_rejects_empty(self):
        with pytest.raises(InputError):
            parse_sequence("   \n  ")

    def test_render_round_trip(self):
        seq = ExactSequence.of([3, -1, 4])
        assert list(parse_sequence(render_sequence(seq, "lines"))) == [3, -1, 4]
        assert list(parse_sequence(render_sequence(seq, "json"))) == [3, -1, 4]

    def test_polynomial_round_trip(self):
        poly = IntPolynomial.of([2, -7, 0, 1])
        assert parse_polynomial(render_polynomial(poly)) == poly

    def test_polynomial_rejects_fractions(self):
        with pytest.raises(InputError):
            parse_polynomial('["1/2"]')


class TestGen:
    def test_gen_poly(self, capsys):
        code = run_cli(
            ["gen", "poly", "--coeffs", '["2", "-7", "0", "1"]', "--n-max", "5"]
        )
        assert code == 0
        assert capsys.readouterr().out == "2\n-4\n-4\n8\n38\n"

    def test_gen_poly_from_file(self, tmp_path, capsys):
        path = tmp_path / "poly.json"
        path.write_text('["0", "0", "1"]')
        assert run_cli(["gen", "poly", "--coeffs", f"@{path}", "--n-max", "4"]) == 0
        assert capsys.readouterr().out == "0\n1\n4\n9\n"

    def test_gen_primary_is_seeded_and_congruent(self, capsys):
        assert run_cli(["gen", "primary", "--n-max", "12", "--seed", "3"]) == 0
        first = capsys.readouterr().out
        assert run_cli(["gen", "primary", "--n-max", "12", "--seed", "3"]) == 0
        assert capsys.readouterr().out == first
        terms = [int(line) for line in first.split()]
        assert len(terms) == 12

    def test_gen_hall_zero_perturbation(self, capsys):
        assert run_cli(["gen", "hall", "--n-max", "6", "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out) == ["0"] * 6


class TestCheckAndTransform:
    def test_congruence_violation_exit_code(self, tmp_path, capsys):
        path = write_sequence(tmp_path, "pow2.txt", [2**n for n in range(10)])
        code = run_cli(["check", "congruences", "--mode", "primary", "--input", path])
        assert code == 1
        report = json.loads(capsys.readouterr().out)
        assert report["ok"] is False
        assert report["violations"][0]["modulus"] == 2

    def test_congruence_pass(self, tmp_path, capsys):
        path = write_sequence(tmp_path, "sq.txt", [n * n for n in range(10)])
        assert run_cli(["check", "congruences", "--input", path]) == 0
        assert json.loads(capsys.readouterr().out)["ok"] is True

    def test_transform_round_trip(self, tmp_path, capsys):
        path = write_sequence(tmp_path, "seq.txt", [3, 1, 4, 1, 5])
        assert run_cli(["transform", "forward", "--input", path]) == 0
        forward = capsys.readouterr().out
        back = tmp_path / "b.txt"
        back.write_text(forward)
        assert run_cli(["transform", "inverse", "--input", str(back)]) == 0
        assert capsys.readouterr().out == "3\n1\n4\n1\n5\n"


class TestHankelCommands:
    def test_invariance_on_fibonacci(self, tmp_path, capsys):
        path = write_sequence(tmp_path, "fib.txt", fibonacci(21))
        assert run_cli(["hankel", "verify-invariance", "--n-max", "10", "--input", path]) == 0
        assert json.loads(capsys.readouterr().out)["passed"] is True

    def test_table_csv_columns(self, tmp_path, capsys):
        path = write_sequence(tmp_path, "fib.txt", fibonacci(9))
        assert run_cli(["hankel", "table", "--input", path]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "n,det,required_divisor,divisible,normalized_growth"
        assert lines[1].startswith("1,0,1,true,")
        assert len(lines) == 6  # header + orders 1..5

    def test_divisibility_failure_exit_code(self, tmp_path, capsys):
        # det of order 3 is -1, which misses the required factor of 2
        path = write_sequence(tmp_path, "odd.txt", [1, 1, 1, 2, 1])
        code = run_cli(["hankel", "verify-divisibility", "--input", path])
        assert code == 1

    def test_divisibility_passes_on_squares(self, tmp_path, capsys):
        path = write_sequence(tmp_path, "sq.txt", [n * n for n in range(15)])
        assert run_cli(["hankel", "verify-divisibility", "--input", path]) == 0


class TestRationalDetect:
    def test_fibonacci_reconstruction(self, tmp_path, capsys):
        path = write_sequence(tmp_path, "fib.txt", fibonacci(40))
        assert run_cli(["rational", "detect", "--input", path, "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["rational"] is True
        assert report["numerator"] == "x"
        assert report["denominator"] == "1 - x - x^2"
        assert report["order"] == 2

    def test_undetected_is_still_exit_zero(self, tmp_path, capsys):
        path = write_sequence(tmp_path, "fact.txt", [math.factorial(n) for n in range(15)])
        assert run_cli(["rational", "detect", "--input", path]) == 0
        assert json.loads(capsys.readouterr().out)["rational"] is False


class TestThetaAndCapacity:
    def test_theta_table(self, capsys):
        assert run_cli(["theta", "table", "--n-max", "10"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "n,theta,partial_sum,ratio"
        assert len(lines) == 12
        last = lines[-1].split(",")
        assert float(last[1]) == pytest.approx(math.log(210), rel=1e-12)

    def test_capacity_bound(self, capsys):
        assert run_cli(["capacity", "bound", "--endpoints", "1,-1"]) == 0
        assert json.loads(capsys.readouterr().out)["bound"] == pytest.approx(0.5)

    def test_capacity_estimate(self, capsys):
        assert run_cli(["capacity", "estimate", "--endpoints", "1"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert 0.20 <= report["estimate"] <= 0.26
        assert report["bound"] == pytest.approx(0.25)

    def test_bad_endpoint_is_input_error(self, capsys):
        assert run_cli(["capacity", "bound", "--endpoints", "1,spam"]) == 2


class TestAuditCommand:
    def test_polynomial_sequence(self, tmp_path, capsys):
        terms = [n**3 - 7 * n + 2 for n in range(40)]
        path = write_sequence(tmp_path, "cubic.txt", terms)
        assert run_cli(["audit", "--input", path]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["schema"] == "ruzsa-audit/1"
        assert report["verdict"] == "polynomial"
        assert report["degree"] == 3
        assert report["denominator_is_power_of_one_minus_x"] is True

    def test_csv_summary(self, tmp_path, capsys):
        terms = [n**2 for n in range(20)]
        path = write_sequence(tmp_path, "sq.txt", terms)
        assert run_cli(["audit", "--input", path, "--format", "csv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("verdict,degree,length,")
        assert lines[1].startswith("polynomial,2,20,")

    def test_congruence_violation_exit_code(self, tmp_path, capsys):
        path = write_sequence(tmp_path, "pow2.txt", [2**n for n in range(12)])
        assert run_cli(["audit", "--input", path]) == 1
        assert json.loads(capsys.readouterr().out)["verdict"] == "congruence_violation"

    def test_byte_identical_reports(self, tmp_path, capsys):
        path = write_sequence(tmp_path, "seq.txt", [n * n for n in range(16)])
        assert run_cli(["audit", "--input", path]) == 0
        first = capsys.readouterr().out
        assert run_cli(["audit", "--input", path]) == 0
        assert capsys.readouterr().out == first


class TestErrorPaths:
    def test_unknown_subcommand(self, capsys):
        assert run_cli(["frobnicate"]) == 2

    def test_unknown_flag(self, capsys):
        assert run_cli(["theta", "table", "--n-max", "5", "--bogus"]) == 2

    def test_missing_file(self, capsys):
        assert run_cli(["check", "congruences", "--input", "/nonexistent/seq.txt"]) == 2

    def test_bad_sequence_content(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("one\ntwo\n")
        assert run_cli(["check", "congruences", "--input", str(path)]) == 2

    def test_help_exits_zero(self, capsys):
        assert run_cli(["--help"]) == 0
