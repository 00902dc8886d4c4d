"""File formats (canonical round-trip) and the command-line front end."""

import io
import os
import pathlib

import pytest

from teichlen import ParseError
from teichlen.cli import main
from teichlen.files import (
    parse_curves,
    parse_fn,
    parse_surface,
    serialize_curves,
    serialize_fn,
    serialize_surface,
)

DATA = pathlib.Path(__file__).resolve().parent.parent / "demos" / "data"

SURFACE = DATA / "genus2.surf"
FN_THIN = DATA / "genus2_thin.fn"
FN_CORE = DATA / "genus2_core.fn"
FN_TWISTED = DATA / "genus2_twisted.fn"
FN_PINCHED = DATA / "genus2_pinched.fn"
CURVES = DATA / "genus2_curves.crv"


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


class TestFileRoundTrip:
    def test_surface_round_trip(self):
        text = SURFACE.read_text()
        assert serialize_surface(parse_surface(text)) == text

    def test_all_surface_files_round_trip(self):
        for path in sorted(DATA.glob("*.surf")):
            text = path.read_text()
            assert serialize_surface(parse_surface(text)) == text, path.name

    def test_fn_round_trip(self):
        marking = parse_surface(SURFACE.read_text())
        for path in (FN_THIN, FN_CORE, FN_TWISTED, FN_PINCHED):
            text = path.read_text()
            assert serialize_fn(parse_fn(text, marking), marking) == text, path.name

    def test_curves_round_trip(self):
        marking = parse_surface(SURFACE.read_text())
        text = CURVES.read_text()
        assert serialize_curves(parse_curves(text, marking), marking) == text

    def test_comments_and_spacing_tolerated(self):
        marking = parse_surface(SURFACE.read_text())
        text = "[fn]\n# comment\ng1 = 0.5 0.0  # inline\ng2=1.0 0.0\ng3 = 2 1e-1\n"
        point = parse_fn(text, marking)
        assert point.length("g1") == 0.5
        assert point.twist("g3") == 0.1

    def test_parse_errors_carry_line_numbers(self):
        with pytest.raises(ParseError) as err:
            parse_surface("[surface]\ngenus == 2\n")
        assert "line 2" in str(err.value)

    def test_missing_section_rejected(self):
        with pytest.raises(ParseError):
            parse_surface("[surface]\ngenus = 2\n")


class TestCliValidate:
    def test_genus2_summary(self):
        code, out = run_cli("validate", str(SURFACE))
        assert code == 0
        assert out == "3 curves, 2 pants, chi=-2\n"

    def test_punctured_torus_summary(self):
        code, out = run_cli("validate", str(DATA / "punctured_torus.surf"))
        assert code == 0
        assert out == "1 curve, 1 pants, chi=-1\n"

    def test_rows_format(self):
        code, out = run_cli("--format", "rows", "validate", str(SURFACE))
        assert code == 0
        assert out == "#curves\tpants\tchi\n3\t2\t-2\n"

    def test_parse_error_exit_code(self, tmp_path):
        bad = tmp_path / "bad.surf"
        bad.write_text("[surface\n")
        assert run_cli("validate", str(bad))[0] == 2

    def test_validation_error_exit_code(self, tmp_path):
        # genus 2 with only 2 curves: curve-count mismatch
        bad = tmp_path / "bad.surf"
        bad.write_text(
            "[surface]\ngenus = 2\npunctures = 0\nboundary = 0\n\n"
            "[curves]\ng1 = +\ng2 = +\n\n"
            "[pants]\npA = g1 g2 g1\npB = g2 puncture:q puncture:r\n\n"
            "[seams]\ng1 = 0\ng2 = 0\n"
        )
        assert run_cli("validate", str(bad))[0] == 3


class TestCliCollar:
    def test_report(self):
        code, out = run_cli("collar", str(SURFACE), str(FN_THIN))
        assert code == 0
        assert "thin g1" in out
        assert "thick[pA,pB]" in out

    def test_numeric_domain_exit_code(self):
        # valid parameter ordering but a realized collar of modulus < 1
        code, _ = run_cli(
            "--eps0", "1.7", "--eps1", "1.69",
            "collar", str(SURFACE), str(DATA / "genus2_wide.fn"),
        )
        assert code == 4

    def test_bad_params_exit_code(self):
        code, _ = run_cli("--eps0", "0.05", "--eps1", "0.1",
                          "collar", str(SURFACE), str(FN_THIN))
        assert code == 3


class TestCliExtremal:
    def test_core_of_thin_value(self):
        code, out = run_cli(
            "--format", "rows",
            "extremal", str(SURFACE), str(FN_CORE), str(CURVES), "--curve", "core1",
        )
        assert code == 0
        total = [l for l in out.splitlines() if "TOTAL" in l][0]
        assert float(total.split("\t")[3]) == pytest.approx(0.016998, abs=5e-7)

    def test_breakdown_max_equals_total(self):
        code, out = run_cli(
            "--format", "rows", "extremal", str(SURFACE), str(FN_THIN), str(CURVES)
        )
        assert code == 0
        per_curve = {}
        for line in out.splitlines():
            if line.startswith("#"):
                continue
            label, component, kind, value = line.split("\t")
            per_curve.setdefault(label, {})[component] = float(value)
        for label, rows in per_curve.items():
            total = rows.pop("TOTAL")
            assert total == max(rows.values())

    def test_unknown_curve_selection(self):
        code, _ = run_cli(
            "extremal", str(SURFACE), str(FN_THIN), str(CURVES), "--curve", "nope"
        )
        assert code == 3


class TestCliDistance:
    def test_identical_points_give_zero(self):
        code, out = run_cli(
            "--family-b", "2", "distance", str(SURFACE), str(FN_THIN), str(FN_THIN)
        )
        assert code == 0
        assert "d_teich = 0\n" in out

    def test_symmetry_under_swap(self):
        args = ("--family-b", "3", "distance", str(SURFACE))
        _, forward = run_cli(*args, str(FN_THIN), str(FN_TWISTED))
        _, backward = run_cli(*args, str(FN_TWISTED), str(FN_THIN))
        assert forward == backward


class TestCliProduct:
    def test_twist_only_deformation(self):
        code, out = run_cli(
            "--format", "rows", "--family-b", "3",
            "product", str(SURFACE), str(FN_THIN), str(FN_TWISTED), "--gamma", "g1",
        )
        assert code == 0
        row = out.splitlines()[1].split("\t")
        # frozen: (1/2) arccosh(1 + 100/20000) for the twist-10 factor pair
        assert float(row[1]) == pytest.approx(0.04997919006934813, abs=1e-12)
        assert row[3] == "1"

    def test_gamma_must_be_internal(self):
        code, _ = run_cli(
            "product", str(SURFACE), str(FN_THIN), str(FN_TWISTED), "--gamma", "zz"
        )
        assert code == 3


class TestCliInstability:
    ARGS = (
        "instability", "--space", "supprod:2", "--delta", "0",
        "--ladder", "1,10,100,1000,10000",
    )

    def test_slope_one(self):
        code, out = run_cli("--format", "rows", "--budget", "60", *self.ARGS)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "#delta\tL\ts_lower\tslope"
        slope = float(lines[1].split("\t")[3])
        assert slope == pytest.approx(1.0, abs=0.05)

    def test_short_ladder_rejected(self):
        code, _ = run_cli(
            "instability", "--space", "supprod:2", "--delta", "0", "--ladder", "10"
        )
        assert code == 3

    def test_unknown_space_rejected(self):
        code, _ = run_cli(
            "instability", "--space", "what:3", "--delta", "0",
            "--ladder", "1,10,100,1000,10000",
        )
        assert code == 3


class TestConfigResolution:
    def test_config_file_and_flag_precedence(self, tmp_path):
        config = tmp_path / "run.cfg"
        config.write_text("eps1 = 0.2\nformat = rows\n")
        # flag overrides the file value of eps1; format comes from the file
        code, out = run_cli(
            "--config", str(config), "--eps1", "0.04",
            "collar", str(SURFACE), str(FN_CORE),
        )
        assert code == 0
        assert out.startswith("#kind")
        assert "thin" not in out.split("\n", 1)[1]  # 0.04 threshold: no thin curves

    def test_env_override(self, tmp_path, monkeypatch):
        monkeypatch.setenv("TEICHLEN_FORMAT", "rows")
        code, out = run_cli("validate", str(SURFACE))
        assert code == 0
        assert out.startswith("#curves")

    def test_boundary_length_bound_enforced(self, tmp_path):
        marking_path = DATA / "holed_torus.surf"
        fn = tmp_path / "big.fn"
        fn.write_text("[fn]\ng1 = 0.8 0.0\nboundary:b1 = 20.0\n")
        code, _ = run_cli("collar", str(marking_path), str(fn))
        assert code == 3
        code, _ = run_cli("--config", os.devnull, "collar",
                          str(marking_path), str(DATA / "holed_torus.fn"))
        assert code == 0
