"""Command-line interface: rendering, exit codes, JSON round-trips."""

import json

from recform import build_form
from recform.api import FormResponse, form_response_to_package
from recform.cli import main
from recform.problems import BUNDLED_PROBLEMS


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestForm:
    def test_narayana_values(self, capsys):
        code, out, _ = run(capsys, "form", "narayana")
        assert code == 0
        assert "-187*x1^3" in out and "- 27*x3^3" in out
        assert "Delta = -6" in out
        assert "= -216 * (1)^n" in out

    def test_fibonacci_lucas_identity_line(self, capsys):
        code, out, _ = run(capsys, "form", "fibonacci-lucas")
        assert code == 0
        assert "-5*x1^2 + x2^2" in out
        assert "= 4 * (-1)^n" in out

    def test_dense_listing_shows_zeros(self, capsys):
        code, out, _ = run(capsys, "form", "table1-row1", "--dense")
        assert code == 0
        # row 1 has a vanished square coefficient, printed explicitly when dense
        assert "0*x2^2" in out

    def test_dependent_initials_exit_code(self, capsys, tmp_path):
        path = tmp_path / "dependent.json"
        path.write_text(
            '{"k": 2, "gammas": ["1", "1"], "sequences": [["1", "2"], ["2", "4"]]}'
        )
        code, _, err = run(capsys, "form", str(path))
        assert code == 2
        assert "det = 0" in err

    def test_zero_gamma0_exit_code(self, capsys, tmp_path):
        path = tmp_path / "zero.json"
        path.write_text(
            '{"k": 2, "gammas": ["0", "1"], "sequences": [["0", "1"], ["2", "1"]]}'
        )
        code, _, err = run(capsys, "form", str(path))
        assert code == 2

    def test_missing_file_is_usage_error(self, capsys):
        code, _, err = run(capsys, "form", "definitely-missing.json")
        assert code == 1

    def test_json_roundtrip(self, capsys):
        code, out, _ = run(capsys, "form", "narayana", "--json")
        assert code == 0
        response = FormResponse.model_validate(json.loads(out))
        package = form_response_to_package(response)
        direct = build_form(BUNDLED_PROBLEMS["narayana"].family())
        assert package == direct


class TestFactor:
    def test_exact_split(self, capsys):
        code, out, _ = run(capsys, "factor", "table1-row4")
        assert code == 0
        assert "exact" in out
        assert "residual = 0" in out

    def test_approximate_split(self, capsys):
        code, out, _ = run(capsys, "factor", "narayana")
        assert code == 0
        assert "approx" in out
        assert "scale = -216" in out

    def test_unreachable_tolerance_exit_code(self, capsys):
        code, _, err = run(capsys, "factor", "narayana", "--tolerance", "1e-30")
        assert code == 3

    def test_json_mode(self, capsys):
        code, out, _ = run(capsys, "factor", "table1-row2", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["residual"] == 0.0
        assert payload["factors"][0]["multiplicity"] == 2


class TestVerify:
    def test_narayana_window(self, capsys):
        code, out, _ = run(capsys, "verify", "narayana", "--n-range", "0..50")
        assert code == 0
        assert "51/51 OK" in out

    def test_negative_range(self, capsys):
        code, out, _ = run(capsys, "verify", "fibonacci-lucas", "--n-range", "-10..10")
        assert code == 0
        assert "21/21 OK" in out

    def test_bad_range_is_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "narayana", "--n-range", "abc")
        assert code == 1


class TestEval:
    def test_two_sided_fibonacci(self, capsys):
        code, out, _ = run(
            capsys, "eval", "fibonacci-lucas", "--seq", "1", "--n-range", "-3..3"
        )
        assert code == 0
        values = [line.split(": ")[1] for line in out.strip().splitlines()]
        assert values == ["2", "-1", "1", "0", "1", "1", "2"]

    def test_sequence_index_bounds(self, capsys):
        code, _, err = run(capsys, "eval", "fibonacci-lucas", "--seq", "9")
        assert code == 1


class TestExamples:
    def test_listing(self, capsys):
        code, out, _ = run(capsys, "examples")
        assert code == 0
        for name in BUNDLED_PROBLEMS:
            assert name in out

    def test_running_one(self, capsys):
        code, out, _ = run(capsys, "examples", "table1-row3")
        assert code == 0
        assert "-9*x1^2 + x2^2" in out
        assert "= 4 * (10)^n" in out
        assert "21/21 OK" in out

    def test_unknown_name(self, capsys):
        code, _, err = run(capsys, "examples", "bogus")
        assert code == 1
