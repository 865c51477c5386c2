"""End-to-end tests of the ``igf`` command line through ``main(argv)``.

Expected strings assume the default 12-significant-digit rendering; values
behind them were frozen from the direct-summation oracles.
"""

from __future__ import annotations

import json

import pytest

from igf import ScalingIdentityReport, make_scheme, scheme_from_dict
from igf.cli import main


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def half_half(tmp_path):
    path = tmp_path / "half_half.json"
    path.write_text(json.dumps({"probabilities": [0.5, 0.5], "utilities": [1.0, 2.0]}))
    return str(path)


@pytest.fixture
def unit(tmp_path):
    path = tmp_path / "unit.json"
    path.write_text(json.dumps({"probabilities": [0.5, 0.5], "utilities": [1.0, 1.0]}))
    return str(path)


@pytest.fixture
def eight_two(tmp_path):
    path = tmp_path / "eight_two.json"
    path.write_text(json.dumps({"probabilities": [0.8, 0.2], "utilities": [1.0, 1.0]}))
    return str(path)


class TestEval:
    def test_complete_scheme_is_one_at_t1(self, capsys, half_half):
        code, out, _ = run(capsys, "eval", "--input", half_half, "--t", "1")
        assert (code, out) == (0, "1\n")

    def test_weighted_point_values(self, capsys, half_half):
        code, out, _ = run(capsys, "eval", "--input", half_half, "--t", "2")
        assert (code, out) == (0, "0.375\n")
        code, out, _ = run(capsys, "eval", "--input", half_half, "--t", "3")
        assert (code, out) == (0, "0.15625\n")

    def test_other_measures(self, capsys, half_half, tmp_path):
        code, out, _ = run(
            capsys, "eval", "--input", half_half, "--measure", "golomb", "--t", "2"
        )
        assert (code, out) == (0, "0.5\n")
        hb = tmp_path / "hb.json"
        hb.write_text(json.dumps({"probabilities": [0.5, 0.5], "utilities": [2.0, 4.0]}))
        code, out, _ = run(
            capsys, "eval", "--input", str(hb), "--measure", "hooda_bhaker", "--t", "2"
        )
        assert (code, out) == (0, "1.5\n")

    def test_below_domain_is_exit_3(self, capsys, half_half):
        code, out, err = run(capsys, "eval", "--input", half_half, "--t", "0.5")
        assert code == 3
        assert out == ""
        assert err.startswith("error:")

    def test_extended_t_opens_the_domain(self, capsys, half_half):
        code, out, _ = run(
            capsys, "eval", "--input", half_half, "--t", "0.5", "--extended-t"
        )
        # 0.5**0.5 + 0.5**0 at the shifted exponents
        assert (code, out) == (0, "1.70710678119\n")

    def test_digits_flag(self, capsys, half_half):
        code, out, _ = run(
            capsys, "eval", "--input", half_half, "--t", "2", "--digits", "2"
        )
        assert (code, out) == (0, "0.38\n")

    def test_digits_out_of_range_is_a_usage_error(self, half_half):
        with pytest.raises(SystemExit) as excinfo:
            main(["eval", "--input", half_half, "--t", "2", "--digits", "18"])
        assert excinfo.value.code == 2

    def test_missing_input_is_exit_2(self, capsys):
        code, _, err = run(capsys, "eval", "--t", "2")
        assert code == 2
        assert "input" in err

    def test_unreadable_file_is_exit_2(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "eval", "--input", str(tmp_path / "missing.json"), "--t", "2"
        )
        assert code == 2
        assert err.startswith("error:")

    def test_malformed_json_is_exit_2(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        code, _, err = run(capsys, "eval", "--input", str(path), "--t", "2")
        assert code == 2
        assert "JSON" in err

    def test_non_normalized_scheme_is_exit_2(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"probabilities": [0.5, 0.6], "utilities": [1, 1]}))
        code, _, err = run(capsys, "eval", "--input", str(path), "--t", "2")
        assert code == 2

    def test_csv_input(self, capsys, tmp_path):
        path = tmp_path / "scheme.csv"
        path.write_text("p,u\n0.5,1\n0.5,2\n")
        code, out, _ = run(
            capsys, "eval", "--input", str(path), "--format", "csv", "--t", "2"
        )
        assert (code, out) == (0, "0.375\n")

    def test_csv_with_wrong_column_count_is_exit_2(self, capsys, tmp_path):
        path = tmp_path / "scheme.csv"
        path.write_text("0.5,1,9\n0.5,2,9\n")
        code, _, err = run(
            capsys, "eval", "--input", str(path), "--format", "csv", "--t", "2"
        )
        assert code == 2
        assert "two columns" in err


class TestEntropy:
    def test_natural_base(self, capsys, unit, half_half):
        code, out, _ = run(capsys, "entropy", "--input", unit)
        assert (code, out) == (0, "0.69314718056\n")
        code, out, _ = run(capsys, "entropy", "--input", half_half)
        assert (code, out) == (0, "1.03972077084\n")

    def test_base_two(self, capsys, unit, half_half):
        code, out, _ = run(capsys, "entropy", "--input", unit, "--base", "2")
        assert (code, out) == (0, "1\n")
        code, out, _ = run(capsys, "entropy", "--input", half_half, "--base", "2")
        assert (code, out) == (0, "1.5\n")


class TestMoments:
    def test_first_two_rows(self, capsys, half_half):
        code, out, _ = run(capsys, "moments", "--input", half_half, "--r-max", "1")
        assert code == 0
        assert out.splitlines() == ["0\t1", "1\t1.03972077084"]

    def test_degenerate_scheme_has_zero_moments(self, capsys, tmp_path):
        path = tmp_path / "point.json"
        path.write_text(json.dumps({"probabilities": [1.0], "utilities": [3.0]}))
        code, out, _ = run(capsys, "moments", "--input", str(path), "--r-max", "4")
        assert code == 0
        assert out.splitlines() == ["0\t1", "1\t0", "2\t0", "3\t0", "4\t0"]

    def test_zeroth_row_is_the_mass_for_generalized_input(self, capsys, tmp_path):
        path = tmp_path / "partial.json"
        path.write_text(
            json.dumps(
                {
                    "probabilities": [0.25, 0.25],
                    "utilities": [1.0, 2.0],
                    "kind": "generalized",
                }
            )
        )
        code, out, _ = run(capsys, "moments", "--input", str(path), "--r-max", "1")
        assert code == 0
        assert out.splitlines()[0] == "0\t0.5"

    @pytest.mark.parametrize("bad", ["0", "9", "-1"])
    def test_r_max_outside_declared_range_is_exit_2(self, capsys, half_half, bad):
        code, _, err = run(capsys, "moments", "--input", half_half, "--r-max", bad)
        assert code == 2
        assert "--r-max" in err


class TestCurve:
    def test_three_point_curve_bytes(self, capsys, half_half, tmp_path):
        out_path = tmp_path / "curve.csv"
        code, _, _ = run(
            capsys,
            "curve",
            "--input",
            half_half,
            "--t-min",
            "1",
            "--t-max",
            "3",
            "--steps",
            "3",
            "--out",
            str(out_path),
        )
        assert code == 0
        assert out_path.read_bytes() == b"t,weighted\n1.0,1.0\n2.0,0.375\n3.0,0.15625\n"

    def test_measure_columns_follow_canonical_order(self, capsys, half_half, tmp_path):
        out_path = tmp_path / "curve.csv"
        code, _, _ = run(
            capsys,
            "curve",
            "--input",
            half_half,
            "--steps",
            "3",
            "--measures",
            "golomb,weighted",
            "--out",
            str(out_path),
        )
        assert code == 0
        header = out_path.read_text().splitlines()[0]
        assert header == "t,weighted,golomb"

    def test_duplicate_measures_are_dropped(self, capsys, half_half, tmp_path):
        out_path = tmp_path / "curve.csv"
        code, _, _ = run(
            capsys,
            "curve",
            "--input",
            half_half,
            "--steps",
            "2",
            "--measures",
            "weighted,weighted",
            "--out",
            str(out_path),
        )
        assert code == 0
        assert out_path.read_text().splitlines()[0] == "t,weighted"

    def test_identical_requests_are_byte_identical(self, capsys, half_half, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for path in paths:
            code, _, _ = run(
                capsys,
                "curve",
                "--input",
                half_half,
                "--steps",
                "101",
                "--measures",
                "weighted,golomb,hooda_bhaker",
                "--out",
                str(path),
            )
            assert code == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_weighted_column_never_increases(self, capsys, half_half, tmp_path):
        out_path = tmp_path / "curve.csv"
        run(capsys, "curve", "--input", half_half, "--steps", "101", "--out", str(out_path))
        rows = out_path.read_text().splitlines()[1:]
        ts = [float(r.split(",")[0]) for r in rows]
        values = [float(r.split(",")[1]) for r in rows]
        assert len(rows) == 101
        assert ts[0] == 1.0 and ts[-1] == 3.0
        assert all(b > a for a, b in zip(ts, ts[1:]))
        assert values[0] == 1.0
        assert all(b <= a for a, b in zip(values, values[1:]))

    def test_named_family_source(self, capsys, tmp_path):
        out_path = tmp_path / "uniform.csv"
        code, _, _ = run(
            capsys,
            "curve",
            "--family",
            "uniform",
            "--n",
            "4",
            "--u",
            "2",
            "--steps",
            "5",
            "--out",
            str(out_path),
        )
        assert code == 0
        rows = out_path.read_text().splitlines()
        assert rows[1] == "1.0,1.0"
        assert rows[2] == "1.5,0.25"
        assert rows[3] == "2.0,0.0625"

    def test_infinite_family_needs_truncation(self, capsys, tmp_path):
        code, _, err = run(
            capsys,
            "curve",
            "--family",
            "geometric",
            "--p",
            "0.5",
            "--steps",
            "3",
            "--out",
            str(tmp_path / "g.csv"),
        )
        assert code == 2
        assert "truncation" in err

    def test_truncated_geometric_family(self, capsys, tmp_path):
        out_path = tmp_path / "geom.csv"
        code, _, _ = run(
            capsys,
            "curve",
            "--family",
            "geometric",
            "--p",
            "0.5",
            "--truncation",
            "60",
            "--steps",
            "3",
            "--out",
            str(out_path),
        )
        assert code == 0
        first = out_path.read_text().splitlines()[1]
        assert first == "1.0,1.0"

    def test_source_must_be_exactly_one_of_input_and_family(self, capsys, half_half, tmp_path):
        out = str(tmp_path / "x.csv")
        code, _, err = run(
            capsys, "curve", "--input", half_half, "--family", "uniform",
            "--n", "4", "--out", out,
        )
        assert code == 2 and "not both" in err
        code, _, err = run(capsys, "curve", "--out", out)
        assert code == 2

    def test_unknown_measure_is_exit_2(self, capsys, half_half, tmp_path):
        code, _, err = run(
            capsys, "curve", "--input", half_half, "--measures", "renyi",
            "--out", str(tmp_path / "x.csv"),
        )
        assert code == 2
        assert "--measures" in err

    def test_degenerate_grids_are_exit_2(self, capsys, half_half, tmp_path):
        out = str(tmp_path / "x.csv")
        code, _, _ = run(capsys, "curve", "--input", half_half, "--steps", "1", "--out", out)
        assert code == 2
        code, _, _ = run(
            capsys, "curve", "--input", half_half, "--t-min", "2", "--t-max", "2", "--out", out
        )
        assert code == 2

    def test_grid_below_domain_is_exit_3_unless_extended(self, capsys, half_half, tmp_path):
        out = str(tmp_path / "x.csv")
        code, _, _ = run(
            capsys, "curve", "--input", half_half, "--t-min", "0.5", "--out", out
        )
        assert code == 3
        code, _, _ = run(
            capsys, "curve", "--input", half_half, "--t-min", "0.5", "--steps", "6",
            "--extended-t", "--out", out,
        )
        assert code == 0

    def test_unwritable_output_is_exit_2(self, capsys, half_half, tmp_path):
        code, _, err = run(
            capsys, "curve", "--input", half_half,
            "--out", str(tmp_path / "no_dir" / "x.csv"),
        )
        assert code == 2
        assert "cannot write" in err


class TestClosedForm:
    def test_uniform_entropy(self, capsys):
        code, out, _ = run(
            capsys, "closed-form", "uniform", "--n", "4", "--u", "2", "--entropy"
        )
        assert (code, out) == (0, "2.77258872224\n")

    def test_geometric_igf(self, capsys):
        code, out, _ = run(
            capsys, "closed-form", "geometric", "--p", "0.5", "--u", "1", "--t", "2"
        )
        assert (code, out) == (0, "0.333333333333\n")

    def test_beta_power_igf(self, capsys):
        code, out, _ = run(
            capsys, "closed-form", "beta-power", "--beta", "2", "--u", "1", "--t", "2"
        )
        assert (code, out) == (0, "0.4\n")

    def test_divergent_beta_is_exit_2(self, capsys):
        code, _, err = run(capsys, "closed-form", "beta-power", "--beta", "0.9", "--t", "2")
        assert code == 2
        assert err.startswith("error:")

    def test_domain_failures_are_exit_3(self, capsys):
        # t below 1 without the flag
        code, _, _ = run(
            capsys, "closed-form", "geometric", "--p", "0.5", "--u", "1", "--t", "0.9"
        )
        assert code == 3
        # s <= 0 for the geometric sum
        code, _, _ = run(
            capsys, "closed-form", "geometric", "--p", "0.5", "--u", "2", "--t", "0.4",
            "--extended-t",
        )
        assert code == 3
        # beta * s <= 1 for the transformed power series
        code, _, _ = run(
            capsys, "closed-form", "beta-power", "--beta", "1.5", "--u", "2", "--t", "0.8",
            "--extended-t",
        )
        assert code == 3

    def test_t_and_entropy_are_mutually_exclusive(self, capsys):
        code, _, err = run(
            capsys, "closed-form", "uniform", "--n", "4", "--t", "2", "--entropy"
        )
        assert code == 2 and "not both" in err
        code, _, err = run(capsys, "closed-form", "uniform", "--n", "4")
        assert code == 2

    def test_family_parameter_mismatch_is_exit_2(self, capsys):
        code, _, err = run(capsys, "closed-form", "uniform", "--n", "4", "--p", "0.5", "--t", "2")
        assert code == 2 and "does not take" in err
        code, _, err = run(capsys, "closed-form", "uniform", "--t", "2")
        assert code == 2 and "requires" in err

    def test_check_against_direct_summation(self, capsys):
        code, out, _ = run(
            capsys, "closed-form", "geometric", "--p", "0.5", "--u", "1", "--t", "2",
            "--check",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "closed_form: 0.333333333333"
        assert lines[1].startswith("direct: 0.333333333333")
        assert float(lines[2].split(": ")[1]) <= 1e-11

    def test_check_uniform_and_beta_power(self, capsys):
        code, out, _ = run(
            capsys, "closed-form", "uniform", "--n", "4", "--u", "2", "--t", "2",
            "--check",
        )
        assert code == 0
        assert float(out.splitlines()[2].split(": ")[1]) <= 1e-14
        code, out, _ = run(
            capsys, "closed-form", "beta-power", "--beta", "2", "--u", "1", "--t", "2",
            "--check",
        )
        assert code == 0
        assert float(out.splitlines()[2].split(": ")[1]) <= 1e-10


class TestEscort:
    def test_transform_report(self, capsys, eight_two):
        code, out, _ = run(capsys, "escort", "--input", eight_two, "--beta", "2")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "escort: 0.941176470588 0.0588235294118"
        assert lines[1] == "mass: 0.68"

    def test_power_one_echoes_the_input(self, capsys, eight_two):
        code, out, _ = run(capsys, "escort", "--input", eight_two, "--beta", "1")
        lines = out.splitlines()
        assert (code, lines[0], lines[1]) == (0, "escort: 0.8 0.2", "mass: 1")

    def test_generalized_igf_line(self, capsys, eight_two):
        code, out, _ = run(
            capsys, "escort", "--input", eight_two, "--beta", "2", "--t", "2"
        )
        assert code == 0
        assert out.splitlines()[2] == "generalized_igf: 0.889273356401"

    def test_verify_identity_passes(self, capsys, eight_two):
        code, out, _ = run(
            capsys, "escort", "--input", eight_two, "--beta", "2", "--u", "1",
            "--t", "2", "--verify-identity",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[2] == "generalized_igf: 0.889273356401"
        assert lines[3] == "lhs: 0.4112"
        assert float(lines[4].split(": ")[1]) == pytest.approx(0.4112, abs=1e-12)
        assert lines[-1] == "PASS"

    def test_verify_identity_needs_t(self, capsys, eight_two):
        code, _, err = run(
            capsys, "escort", "--input", eight_two, "--beta", "2", "--verify-identity"
        )
        assert code == 2
        assert "--t" in err

    def test_failed_verification_is_exit_4(self, capsys, eight_two, monkeypatch):
        # both sides agree to ~1e-15 on anything this CLI can reach, so a
        # genuine FAIL is not constructible from inputs; fake the report to
        # pin the exit-code wiring
        import igf.cli as cli_module

        monkeypatch.setattr(
            cli_module,
            "verify_scaling_identity",
            lambda *a, **k: ScalingIdentityReport(
                lhs=1.0, rhs=2.0, abs_diff=1.0, passed=False
            ),
        )
        code, out, _ = run(
            capsys, "escort", "--input", eight_two, "--beta", "2", "--u", "1",
            "--t", "2", "--verify-identity",
        )
        assert code == 4
        assert out.splitlines()[-1] == "FAIL"

    def test_bad_beta_is_exit_2(self, capsys, eight_two):
        code, _, _ = run(capsys, "escort", "--input", eight_two, "--beta", "0")
        assert code == 2


class TestNormalize:
    def test_canonical_rendering(self, capsys, tmp_path):
        path = tmp_path / "scheme.json"
        path.write_text(
            json.dumps({"probabilities": [0.25, 0.25, 0.25, 0.25], "utilities": [1, 1, 1, 1]})
        )
        code, out, _ = run(capsys, "normalize", "--input", str(path))
        assert code == 0
        assert out == (
            '{\n'
            '  "probabilities": [0.25, 0.25, 0.25, 0.25],\n'
            '  "utilities": [1, 1, 1, 1],\n'
            '  "kind": "complete"\n'
            '}\n'
        )

    def test_round_trip_is_byte_stable_and_value_exact(self, capsys, tmp_path):
        path = tmp_path / "scheme.json"
        path.write_text(
            json.dumps(
                {
                    "probabilities": [0.1, 0.2, 0.3, 0.4],
                    "utilities": [1e-5, 3.0000000000000004, 7.25, 1.0],
                    "labels": ["a", "b", "c", "d"],
                }
            )
        )
        code, first, _ = run(capsys, "normalize", "--input", str(path))
        assert code == 0
        again = tmp_path / "normalized.json"
        again.write_text(first)
        code, second, _ = run(capsys, "normalize", "--input", str(again))
        assert code == 0
        assert first == second
        reparsed = scheme_from_dict(json.loads(second))
        original = make_scheme(
            [0.1, 0.2, 0.3, 0.4],
            [1e-5, 3.0000000000000004, 7.25, 1.0],
            labels=["a", "b", "c", "d"],
        )
        assert reparsed == original

    def test_csv_input_normalizes_to_json(self, capsys, tmp_path):
        path = tmp_path / "scheme.csv"
        path.write_text("0.5,1\n0.5,2\n")
        code, out, _ = run(capsys, "normalize", "--input", str(path), "--format", "csv")
        assert code == 0
        doc = json.loads(out)
        assert doc == {
            "probabilities": [0.5, 0.5],
            "utilities": [1.0, 2.0],
            "kind": "complete",
        }
