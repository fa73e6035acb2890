"""Command-line interface: reports, exit codes, determinism, round trips."""

from __future__ import annotations

import json

import pytest

from golden import FIXTURES_DIR
from polyderive import cli
from polyderive.suites import SuiteResult

QUADRANGLE = str(FIXTURES_DIR / "quadrangle.json")
PENTAGON = str(FIXTURES_DIR / "pentagon.json")
HEXAGON = str(FIXTURES_DIR / "hexagon_regular.json")
STRONGLY_REGULAR = str(FIXTURES_DIR / "hexagon_strongly_regular.json")


def run_cli(capsys, *argv) -> tuple[int, str, str]:
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv) -> tuple[int, dict]:
    code, out, _err = run_cli(capsys, *argv)
    return code, json.loads(out)


class TestCheck:
    def test_quadrangle_is_regular(self, capsys):
        code, report = run_json(capsys, "check", QUADRANGLE)
        assert code == 0
        assert report["genericity"]["ok"]
        assert report["deltas"] == ["9", "-9", "9", "-9"]
        assert report["verdict"]["regular"]
        assert report["verdict"]["parity"] == "even"

    def test_pentagon_reports_alpha_squared(self, capsys):
        code, report = run_json(capsys, "check", PENTAGON)
        assert code == 0
        assert report["deltas"] == ["1", "2", "-4", "5", "-4"]
        assert report["verdict"]["alpha_squared"] == "8/5"

    def test_planar_square_gets_a_structured_diagnostic(self, capsys, tmp_path):
        path = tmp_path / "square.json"
        path.write_text(
            json.dumps(
                {"vertices": [["0", "0", "0"], ["1", "0", "0"], ["1", "1", "0"], ["0", "1", "0"]]}
            )
        )
        code, report = run_json(capsys, "check", str(path))
        assert code == 0
        assert report["genericity"] == {"ok": False, "index": 1, "kind": "coplanar_triple"}
        assert "deltas" not in report

    def test_malformed_json_is_a_usage_error(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"vertices": [[1, 2')
        code, out, err = run_cli(capsys, "check", str(path))
        assert code == 2
        assert out == ""
        assert "line" in err

    def test_missing_file_is_a_usage_error(self, capsys):
        code, _out, err = run_cli(capsys, "check", "/nonexistent/poly.json")
        assert code == 2
        assert "no such file" in err

    def test_missing_keys_are_a_usage_error(self, capsys, tmp_path):
        path = tmp_path / "empty.json"
        path.write_text("{}")
        code, _out, err = run_cli(capsys, "check", str(path))
        assert code == 2
        assert "vertices" in err

    def test_float_check_attaches_oracle_block(self, capsys):
        code, report = run_json(capsys, "check", QUADRANGLE, "--float-check")
        assert code == 0
        assert report["oracle_results"]["ok"]


class TestDerive:
    def test_hexagon_with_unit_scale(self, capsys):
        code, report = run_json(capsys, "derive", HEXAGON, "--alpha", "1")
        assert code == 0
        block = report["derived_analysis"]
        assert block["derived_deltas"][:3] == ["-32/9", "8", "4/3"]
        assert block["strongly_regular"]
        assert block["two_plane"]["offsets_equal"]

    def test_pentagon_uses_the_canonical_root(self, capsys):
        code, report = run_json(capsys, "derive", PENTAGON)
        assert code == 0
        system = report["support_system"]
        assert system["alpha"] == {"a": "0", "b": "1", "d": "8/5"}
        assert system["vectors"][0][2] == {"a": "0", "b": "5/8", "d": "8/5"}
        assert report["derived_analysis"]["planarity"]["planar"]

    def test_strongly_regular_hexagon_notes_the_type_change(self, capsys):
        code, report = run_json(capsys, "derive", STRONGLY_REGULAR, "--alpha", "1")
        assert code == 0
        block = report["derived_analysis"]
        assert block["derived_deltas"][:3] == ["-4/5", "1/8", "3/10"]
        assert block["input_strongly_regular"]
        assert block["type_matches_input"] is False

    def test_even_polygon_requires_alpha(self, capsys):
        code, report = run_json(capsys, "derive", HEXAGON)
        assert code == 1
        assert "--alpha" in report["error"]["message"]

    def test_odd_polygon_rejects_explicit_alpha(self, capsys):
        code, report = run_json(capsys, "derive", PENTAGON, "--alpha", "2")
        assert code == 1
        assert "negative-root" in report["error"]["message"]

    def test_irregular_polygon_cites_both_products(self, capsys, tmp_path):
        fixture_code, fixture = run_json(
            capsys, "generate", "--kind", "alt-sign", "--seed", "5"
        )
        assert fixture_code == 0
        path = tmp_path / "alt.json"
        path.write_text(json.dumps(fixture))
        code, report = run_json(capsys, "derive", str(path), "--alpha", "1")
        assert code == 1
        message = report["error"]["message"]
        assert "odd positions" in message and "even positions" in message

    def test_quadrangle_self_intersection_is_reported(self, capsys):
        code, report = run_json(capsys, "derive", QUADRANGLE, "--alpha", "1")
        assert code == 0
        block = report["derived_analysis"]
        assert block["planarity"]["planar"]
        assert block["area_vector"] == ["0", "0", "0"]
        assert block["self_intersecting"] is True


class TestAnalyze:
    def test_strongly_regular_hexagon_is_not_a_derivative(self, capsys):
        code, report = run_json(capsys, "analyze", STRONGLY_REGULAR)
        assert code == 0
        assert report["derivability_defect"] == ["7", "-7/2", "-7/2"]
        assert report["strongly_regular"] is True

    def test_triangle_gets_an_informational_note(self, capsys, tmp_path):
        path = tmp_path / "triangle.json"
        path.write_text(
            json.dumps({"vertices": [["0", "0", "0"], ["1", "0", "0"], ["0", "1", "0"]]})
        )
        code, report = run_json(capsys, "analyze", str(path))
        assert code == 0
        assert report["planarity"]["planar"]
        assert "note" in report

    def test_edge_payloads_are_accepted(self, capsys, tmp_path):
        path = tmp_path / "edges.json"
        path.write_text(
            json.dumps(
                {
                    "edges": [
                        ["1", "0", "0"],
                        ["0", "1", "0"],
                        ["0", "0", "1"],
                        ["2", "-1", "3"],
                        ["-1", "5", "2"],
                        ["-2", "-5", "-6"],
                    ]
                }
            )
        )
        code, report = run_json(capsys, "analyze", str(path))
        assert code == 0
        assert report["deltas"] == ["1", "2", "9", "15", "-20", "-6"]


class TestGenerate:
    def test_repeated_invocations_are_identical(self, capsys):
        args = ("generate", "--kind", "hexagon-lift", "--seed", "7")
        _code, first, _ = run_cli(capsys, *args)
        _code, second, _ = run_cli(capsys, *args)
        assert first == second

    def test_round_trip_through_check_and_derive(self, capsys, tmp_path):
        for kind in ("quad", "pentagon", "hexagon-lift", "alt-sign"):
            path = tmp_path / f"{kind}.json"
            code, _out, _err = run_cli(
                capsys, "generate", "--kind", kind, "--seed", "3", "--out", str(path)
            )
            assert code == 0
            check_code, report = run_json(capsys, "check", str(path))
            assert check_code == 0
            assert report["genericity"]["ok"]
        derive_code, report = run_json(capsys, "derive", str(tmp_path / "pentagon.json"))
        assert derive_code == 0
        assert report["derived_analysis"]["planarity"]["planar"]

    def test_lift_fixture_embeds_seed_and_system(self, capsys):
        code, fixture = run_json(capsys, "generate", "--kind", "hexagon-lift", "--seed", "9")
        assert code == 0
        assert fixture["seed"] == 9
        assert fixture["kind"] == "hexagon-lift"
        assert len(fixture["support_system"]["vectors"]) == 6

    def test_seed_env_default(self, capsys, monkeypatch):
        monkeypatch.setenv("POLYDERIVE_SEED", "21")
        code, fixture = run_json(capsys, "generate", "--kind", "quad")
        assert code == 0
        assert fixture["seed"] == 21


class TestVerify:
    def test_single_suite_passes(self, capsys):
        code, report = run_json(
            capsys, "verify", "--suite", "eq2", "--samples", "25", "--seed", "1"
        )
        assert code == 0
        assert report["passed"]
        assert report["suites"][0]["failures"] == 0

    def test_all_suites_small_run(self, capsys):
        code, report = run_json(
            capsys, "verify", "--suite", "all", "--samples", "3", "--seed", "2"
        )
        assert code == 0
        assert len(report["suites"]) == 8

    def test_property_failure_exits_one(self, capsys, monkeypatch):
        from polyderive import suites as suites_module

        def failing_suite(samples: int, seed: int) -> SuiteResult:
            return SuiteResult("eq2", samples, 1, {"failed": "injected"})

        monkeypatch.setitem(suites_module.SUITES, "eq2", failing_suite)
        code, report = run_json(
            capsys, "verify", "--suite", "eq2", "--samples", "5", "--seed", "1"
        )
        assert code == 1
        assert not report["passed"]
        assert report["suites"][0]["counterexample"] == {"failed": "injected"}

    def test_unknown_suite_is_a_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            cli.main(["verify", "--suite", "bogus"])
        assert excinfo.value.code == 2


class TestPlot:
    def test_polygon_file(self, capsys):
        code, out, _err = run_cli(capsys, "plot", QUADRANGLE)
        assert code == 0
        lines = out.strip().splitlines()
        assert sum(1 for line in lines if line.startswith("v ")) == 4
        assert sum(1 for line in lines if line.startswith("e ")) == 4
        assert "e 4 1" in lines

    def test_derive_report_gets_plane_tags(self, capsys, tmp_path):
        code, report = run_json(capsys, "derive", HEXAGON, "--alpha", "1")
        assert code == 0
        path = tmp_path / "report.json"
        path.write_text(json.dumps(report))
        plot_code, out, _err = run_cli(capsys, "plot", str(path))
        assert plot_code == 0
        assert "# planar false" in out
        assert "plane=1" in out and "plane=2" in out

    def test_quadrangle_derive_report_notes_planarity(self, capsys, tmp_path):
        code, report = run_json(capsys, "derive", QUADRANGLE, "--alpha", "1")
        assert code == 0
        path = tmp_path / "quad_report.json"
        path.write_text(json.dumps(report))
        plot_code, out, _err = run_cli(capsys, "plot", str(path))
        assert plot_code == 0
        lines = out.strip().splitlines()
        assert "# planar true" in out
        assert sum(1 for line in lines if line.startswith("v ")) == 4
        assert sum(1 for line in lines if line.startswith("e ")) == 4

    def test_triangle(self, capsys, tmp_path):
        path = tmp_path / "triangle.json"
        path.write_text(
            json.dumps({"vertices": [["0", "0", "0"], ["1", "0", "0"], ["0", "1", "0"]]})
        )
        code, out, _err = run_cli(capsys, "plot", str(path))
        assert code == 0
        lines = out.strip().splitlines()
        assert sum(1 for line in lines if line.startswith("v ")) == 3
        assert sum(1 for line in lines if line.startswith("e ")) == 3
