"""In-process CLI tests: output shapes, exit codes, golden transcripts."""

import math

import pytest

from anglekit.cli import main


class TestConvert:
    def test_degrees_to_radians_is_symbolic(self, run_cli):
        code, out, err = run_cli("convert", "180°", "rad")
        assert (code, out, err) == (0, "π rad\n", "")

    def test_ascii_flag(self, run_cli):
        code, out, _ = run_cli("convert", "180°", "rad", "--ascii")
        assert code == 0
        assert out == "pi rad\n"

    def test_records_mode(self, run_cli):
        code, out, _ = run_cli("convert", "180°", "rad", "--format", "records")
        assert code == 0
        assert out == "value=π\nunit=rad\nexact=true\n"

    def test_exactly_one_unit_token(self, run_cli):
        code, out, _ = run_cli("convert", "pi rad", "deg")
        assert code == 0
        assert out.strip().split() == ["180", "°"]

    def test_gon_round_numbers(self, run_cli):
        code, out, _ = run_cli("convert", "90°", "gon")
        assert (code, out.strip()) == (0, "100 gon")

    def test_inexact_value_marked_in_records(self, run_cli):
        code, out, _ = run_cli(
            "convert", "0.1234567890123456789 rad", "deg", "--format", "records"
        )
        assert code == 0
        assert "exact=false" in out

    def test_unknown_target_unit(self, run_cli):
        code, out, err = run_cli("convert", "180°", "furlong")
        assert code == 3
        assert out == ""
        assert err.startswith("error:")

    def test_unknown_source_unit(self, run_cli):
        code, _, _ = run_cli("convert", "1 furlong", "rad")
        assert code == 3

    def test_unparseable_angle(self, run_cli):
        code, _, err = run_cli("convert", "@@@", "rad")
        assert code == 2
        assert "Traceback" not in err


class TestMeasure:
    def test_half_turn_prints_bare_pi(self, run_cli):
        code, out, _ = run_cli("measure", "180°")
        assert (code, out) == (0, "π\n")

    def test_measure_never_prints_a_unit(self, run_cli):
        for text in ("180°", "1/2 turn", "100 gon", "0.25 rad"):
            code, out, _ = run_cli("measure", text)
            assert code == 0
            assert not any(ch.isalpha() for ch in out.replace("π", ""))

    def test_quarter_turn(self, run_cli):
        code, out, _ = run_cli("measure", "90°")
        assert (code, out.strip()) == (0, "π/2")

    def test_missing_unit_is_a_unit_error(self, run_cli):
        code, _, _ = run_cli("measure", "1.5")
        assert code == 3


class TestArcAndChord:
    def test_half_circle_arc_with_radius_two(self, run_cli):
        code, out, _ = run_cli("arc", "180°", "2")
        assert code == 0
        assert out == "6.283185307179586 (exactly 2π)\n"

    def test_arc_records_carry_the_exact_form(self, run_cli):
        code, out, _ = run_cli("arc", "180°", "2", "--format", "records")
        assert code == 0
        assert out == "length=6.283185307179586\nexact=2π\n"

    def test_unit_measure_times_radius(self, run_cli):
        code, out, _ = run_cli("arc", "1 rad", "3.5")
        assert code == 0
        assert out.split()[0] == "3.5"

    def test_huge_radius_degrades_gracefully(self, run_cli):
        code, out, _ = run_cli("arc", "180°", "1e300")
        assert code == 0
        assert "exactly" not in out
        assert float(out.split()[0]) == pytest.approx(math.pi * 1e300)

    def test_zero_radius(self, run_cli):
        code, _, _ = run_cli("arc", "90°", "0")
        assert code == 4

    def test_negative_radius(self, run_cli):
        code, _, _ = run_cli("arc", "90°", "-2")
        assert code == 4

    def test_nonfinite_radius(self, run_cli):
        code, _, _ = run_cli("arc", "90°", "inf")
        assert code == 4

    def test_textual_radius_is_a_parse_error(self, run_cli):
        code, _, _ = run_cli("arc", "90°", "wide")
        assert code == 2

    def test_zero_angle_is_out_of_range(self, run_cli):
        code, _, _ = run_cli("arc", "0°", "1")
        assert code == 5

    def test_diameter_chord(self, run_cli):
        code, out, _ = run_cli("chord", "180°", "3.5")
        assert (code, out) == (0, "7\n")

    def test_hexagon_chord_equals_radius(self, run_cli):
        code, out, _ = run_cli("chord", "60°", "2")
        assert code == 0
        assert float(out) == pytest.approx(2.0, abs=1e-15)

    def test_chord_rejects_oversized_angle(self, run_cli):
        code, _, _ = run_cli("chord", "370°", "1")
        assert code == 5


class TestAdd:
    def test_two_right_angles(self, run_cli):
        code, out, _ = run_cli("add", "90°", "90°")
        assert (code, out) == (0, "π\n")

    def test_wraparound_subtracts_a_straight_angle(self, run_cli):
        code, out, _ = run_cli("add", "120°", "120°")
        assert (code, out.strip()) == (0, "π/3")

    def test_operand_above_straight_angle(self, run_cli):
        code, _, _ = run_cli("add", "270°", "10°")
        assert code == 6

    def test_zero_operand(self, run_cli):
        code, _, _ = run_cli("add", "0°", "10°")
        assert code == 6


class TestPoints:
    def test_right_angle_from_axes(self, run_cli):
        code, out, _ = run_cli("points", "1", "0", "0", "0", "0", "1")
        assert code == 0
        assert float(out) == pytest.approx(math.pi / 2, abs=1e-15)

    def test_digits_flag_truncates(self, run_cli):
        code, out, _ = run_cli("points", "1", "0", "0", "0", "0", "1", "--digits", "5")
        assert (code, out) == (0, "1.5708\n")

    def test_degenerate_vertex(self, run_cli):
        code, _, _ = run_cli("points", "0", "0", "0", "0", "1", "1")
        assert code == 6

    def test_collinear_same_side(self, run_cli):
        code, _, _ = run_cli("points", "1", "0", "0", "0", "2", "0")
        assert code == 6

    def test_textual_coordinate(self, run_cli):
        code, _, _ = run_cli("points", "a", "0", "0", "0", "0", "1")
        assert code == 2


class TestTrig:
    def test_default_period_matches_math_sin(self, run_cli):
        code, out, _ = run_cli("trig", "sin", "0.5")
        assert code == 0
        assert float(out) == math.sin(0.5)

    def test_degree_period_quarter_turn(self, run_cli):
        code, out, _ = run_cli("trig", "sin", "90", "--period", "360")
        assert (code, out) == (0, "1\n")

    def test_digits_flag(self, run_cli):
        code, out, _ = run_cli("trig", "sin", "0.5", "--digits", "5")
        assert (code, out) == (0, "0.47943\n")

    def test_inverse_lands_on_the_anchor(self, run_cli):
        code, out, _ = run_cli("trig", "arccos", "-1", "--period", "400")
        assert (code, out) == (0, "200 gon\n")

    def test_inverse_degree_symbol(self, run_cli):
        code, out, _ = run_cli("trig", "arcsin", "1", "--period", "360")
        assert (code, out) == (0, "90 °\n")

    def test_inverse_degree_ascii(self, run_cli):
        code, out, _ = run_cli("trig", "arcsin", "1", "--period", "360", "--ascii")
        assert (code, out) == (0, "90 deg\n")

    def test_tangent_pole(self, run_cli):
        code, _, err = run_cli("trig", "tan", "90", "--period", "360")
        assert code == 6
        assert "Traceback" not in err

    def test_unit_bearing_argument_is_refused(self, run_cli):
        code, out, err = run_cli("trig", "sin", "0.5 rad")
        assert code == 6
        assert out == ""
        assert "RAD-IN-TRIG-ARG" in err

    def test_inverse_outside_domain(self, run_cli):
        code, _, _ = run_cli("trig", "arcsin", "2")
        assert code == 6

    def test_zero_period(self, run_cli):
        code, _, _ = run_cli("trig", "sin", "1", "--period", "0")
        assert code == 6

    def test_textual_period(self, run_cli):
        code, _, _ = run_cli("trig", "sin", "1", "--period", "soon")
        assert code == 2

    def test_textual_argument(self, run_cli):
        code, _, _ = run_cli("trig", "sin", "later")
        assert code == 2


class TestClassify:
    @pytest.mark.parametrize(
        "angle,label",
        [
            ("45°", "acute angle"),
            ("90°", "right angle"),
            ("135°", "obtuse angle"),
            ("180°", "straight angle"),
            ("270°", "reflex angle"),
            ("360°", "perigon"),
        ],
    )
    def test_named_ranges(self, run_cli, angle, label):
        code, out, _ = run_cli("classify", angle)
        assert (code, out.strip()) == (0, label)

    def test_records_key(self, run_cli):
        code, out, _ = run_cli("classify", "90°", "--format", "records")
        assert (code, out) == (0, "class=right angle\n")

    def test_out_of_range(self, run_cli):
        code, _, _ = run_cli("classify", "370°")
        assert code == 5


class TestTable:
    def test_records_contain_reciprocal_factors(self, run_cli):
        code, out, _ = run_cli("table", "--format", "records")
        assert code == 0
        lines = out.splitlines()
        assert "degree->radian=π/180" in lines
        assert "radian->degree=180/π" in lines
        assert "degree->gon=10/9" in lines
        assert "turn->turn=1" in lines
        assert len(lines) == 36

    def test_ascii_records(self, run_cli):
        code, out, _ = run_cli("table", "--format", "records", "--ascii")
        assert code == 0
        assert "degree->radian=pi/180" in out.splitlines()
        assert "π" not in out

    def test_human_grid_has_a_header_and_six_rows(self, run_cli):
        code, out, _ = run_cli("table")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 7
        assert lines[0].split()[0] == "from\\to"


class TestLint:
    def test_findings_exit_one(self, run_cli, tmp_path):
        source = tmp_path / "angles.txt"
        source.write_text("x = sin(0.5 rad)\n", encoding="utf-8")
        code, out, _ = run_cli("lint", str(source))
        assert code == 1
        assert out.startswith("1:9: RAD-IN-TRIG-ARG:")

    def test_clean_file_exits_zero(self, run_cli, tmp_path):
        source = tmp_path / "clean.txt"
        source.write_text("x = sin(0.5)\nangle a = 90°\n", encoding="utf-8")
        code, out, _ = run_cli("lint", str(source))
        assert (code, out) == (0, "")

    def test_stdin_dash(self, run_cli, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("angle a = pi\n"))
        code, out, _ = run_cli("lint", "-")
        assert code == 1
        assert "MISSING-REFERENCE-SYMBOL" in out

    def test_missing_file(self, run_cli, tmp_path):
        code, _, err = run_cli("lint", str(tmp_path / "nope.txt"))
        assert code == 2
        assert err.startswith("error:")

    def test_syntax_findings_use_the_syntax_label(self, run_cli, tmp_path):
        source = tmp_path / "broken.txt"
        source.write_text("angle a = )\n", encoding="utf-8")
        code, out, _ = run_cli("lint", str(source))
        assert code == 1
        assert out.startswith("1:11: syntax:")

    def test_records_mode(self, run_cli, tmp_path):
        source = tmp_path / "angles.txt"
        source.write_text("angle a = pi\n", encoding="utf-8")
        code, out, _ = run_cli("lint", str(source), "--format", "records")
        assert code == 1
        assert out.startswith("finding=1:11:MISSING-REFERENCE-SYMBOL:")


class TestUsageAndSafety:
    def test_no_arguments_is_a_usage_error(self, run_cli):
        code, _, _ = run_cli()
        assert code == 2

    def test_unknown_subcommand(self, run_cli):
        code, _, _ = run_cli("frobnicate", "1")
        assert code == 2

    def test_digits_out_of_range(self, run_cli):
        code, _, _ = run_cli("measure", "1 rad", "--digits", "0")
        assert code == 2

    def test_internal_failures_map_to_seventy(self, run_cli, monkeypatch):
        def boom(args):
            raise RuntimeError("wires crossed")

        monkeypatch.setattr("anglekit.cli._cmd_measure", boom)
        code, out, err = run_cli("measure", "1 rad")
        assert code == 70
        assert out == ""
        assert "internal error" in err
        assert "Traceback" not in err

    def test_errors_never_leak_tracebacks(self, run_cli):
        for argv in (
            ["convert", "@@@", "rad"],
            ["arc", "90°", "0"],
            ["trig", "tan", "90", "--period", "360"],
            ["add", "300°", "300°"],
        ):
            _, out, err = run_cli(*argv)
            assert "Traceback" not in out + err

    def test_records_output_is_byte_stable(self, run_cli):
        first = run_cli("convert", "180°", "rad", "--format", "records")
        second = run_cli("convert", "180°", "rad", "--format", "records")
        assert first == second


GOLDEN = [
    (["convert", "180°", "rad"], "π rad\n"),
    (["convert", "100 gon", "deg"], "90 °\n"),
    (["convert", "1 turn", "arcsec"], "1296000 ″\n"),
    (["convert", "π rad", "turn"], "1/2 turn\n"),
    (["measure", "180°"], "π\n"),
    (["measure", "1/4 turn"], "π/2\n"),
    (["measure", "1 arcmin"], "π/10800\n"),
    (["arc", "180°", "2"], "6.283185307179586 (exactly 2π)\n"),
    (["chord", "180°", "3.5"], "7\n"),
    (["add", "90°", "90°"], "π\n"),
    (["classify", "90°"], "right angle\n"),
    (["trig", "sin", "90", "--period", "360"], "1\n"),
    (["trig", "arccos", "-1", "--period", "400"], "200 gon\n"),
]


@pytest.mark.parametrize("argv,expected", GOLDEN, ids=[" ".join(a) for a, _ in GOLDEN])
def test_golden_transcripts(run_cli, argv, expected):
    code, out, err = run_cli(*argv)
    assert (code, out, err) == (0, expected, "")
