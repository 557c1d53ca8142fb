import json
import os

import pytest
from click.testing import CliRunner

from kanenobu_knots.app import Caps, InvariantReport, compute_invariant
from kanenobu_knots.config import settings
from kanenobu_knots.diagram import kanenobu_diagram, read_pd
from kanenobu_knots.diagram.pdfile import fixture_path
from kanenobu_knots.errors import CapExceededError
from kanenobu_knots.execution.executor import plan, run_check
from kanenobu_knots.kanenobu import jones_closed_form
from kanenobu_knots.kanenobu_cli import main

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")


@pytest.fixture
def runner():
    return CliRunner()


def test_gen_writes_a_valid_file(runner, tmp_path):
    out = tmp_path / "k.pd"
    result = runner.invoke(main, ["gen", "1", "-1", str(out)])
    assert result.exit_code == 0, result.output
    lines = out.read_text().splitlines()
    assert lines[0] == "pdcode v1"
    assert sum(1 for line in lines if line.startswith("X ")) == 10
    assert read_pd(str(out)).n == 10


def test_gen_base_point(runner, tmp_path):
    out = tmp_path / "base.pd"
    assert runner.invoke(main, ["gen", "0", "0", str(out)]).exit_code == 0
    assert read_pd(str(out)).n == 8


def test_invariants_table_for_base_point(runner):
    result = runner.invoke(main, ["invariants", "--kanenobu", "0", "0", "--format", "table", "--no-cache"])
    assert result.exit_code == 0, result.stderr
    assert "total dimension 26" in result.stdout
    assert "Exact(8)" in result.stdout


def test_invariants_json_for_figure_eight(runner):
    result = runner.invoke(main, ["invariants", "--pd", fixture_path("4_1"), "--no-cache"])
    assert result.exit_code == 0, result.stderr
    report = json.loads(result.stdout)
    assert report["breadth"] == 4
    assert report["lee_degrees"] == [0, 0]
    assert report["khovanov"] == [[-2, -5, 1], [-1, -1, 1], [0, -1, 1], [0, 1, 1], [1, 1, 1], [2, 5, 1]]
    assert all(report["checks"].values())
    assert "crossing_number" not in report
    assert "wall_time" not in report


@pytest.mark.parametrize("golden,args", [
    ("k00.json", ["--kanenobu", "0", "0"]),
    ("fig8.json", ["--pd", "4_1.pd"]),
])
def test_invariants_json_matches_golden(runner, monkeypatch, golden, args):
    monkeypatch.chdir(os.path.dirname(fixture_path("4_1")))
    result = runner.invoke(main, ["invariants", *args, "--format", "json", "--no-cache"])
    assert result.exit_code == 0, result.stderr
    with open(os.path.join(GOLDEN_DIR, golden), encoding="utf-8") as f:
        assert result.stdout == f.read()


def test_report_round_trips(runner):
    result = runner.invoke(main, ["invariants", "--pd", fixture_path("hopf"), "--no-cache"])
    report = InvariantReport.model_validate_json(result.stdout)
    assert report.components == 2
    assert report.model_dump_json(indent=2, exclude_none=True) == result.stdout.rstrip("\n")


def test_large_kanenobu_input_falls_back_to_closed_forms(runner):
    result = runner.invoke(main, ["invariants", "--kanenobu", "2", "3", "--max-crossings", "0"])
    assert result.exit_code == 0, result.stderr
    report = json.loads(result.stdout)
    assert report["crossing_number"] == {"exact": 13}
    assert set(report["sources"].values()) == {"closed-form"}
    assert report["deg_q"] == 11
    assert "lee_degrees" not in report


def test_cap_exceeded_exit_code(runner):
    result = runner.invoke(main, ["invariants", "--pd", fixture_path("8_8"), "--max-crossings", "4"])
    assert result.exit_code == 2
    assert "cap" in result.stderr


def test_parse_error_exit_code(runner, tmp_path):
    bad = tmp_path / "bad.pd"
    bad.write_text("pdcode v1\nX 1 2 3\n")
    result = runner.invoke(main, ["jones", "--pd", str(bad)])
    assert result.exit_code == 1
    assert "line 2" in result.stderr


def test_validation_error_exit_code(runner, tmp_path):
    bad = tmp_path / "bad.pd"
    bad.write_text("pdcode v1\nX 1 2 2 3 +\n")
    assert runner.invoke(main, ["khovanov", "--pd", str(bad)]).exit_code == 1


def test_single_invariant_commands(runner):
    jones = runner.invoke(main, ["jones", "--pd", fixture_path("4_1")])
    assert jones.exit_code == 0
    assert "breadth = 4" in jones.stdout
    qpoly = runner.invoke(main, ["qpoly", "--pd", fixture_path("4_1")])
    assert "deg Q = 3" in qpoly.stdout
    kh = runner.invoke(main, ["khovanov", "--kanenobu", "-1", "0", "--format", "json"])
    assert kh.exit_code == 0
    assert json.loads(kh.stdout)["source"] == "diagram"


def test_crossing_command(runner):
    result = runner.invoke(main, ["crossing", "3", "-2"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "Bounds(12, 13, conjectured=13)"
    assert runner.invoke(main, ["crossing", "2", "3"]).stdout.startswith("Exact(13)")


def test_verify_closed_suite(runner):
    result = runner.invoke(main, ["verify", "--suite", "closed", "--max", "2", "--summary"])
    assert result.exit_code == 0, result.stdout
    assert "25/25 checks passed" in result.stdout
    assert "❌" not in result.stdout


def test_verify_crossing_suite(runner):
    result = runner.invoke(main, ["verify", "--suite", "crossing", "--max", "3"])
    assert result.exit_code == 0, result.stdout


def test_verify_jones_suite_small_grid(runner):
    assert runner.invoke(main, ["verify", "--suite", "jones", "--max", "1"]).exit_code == 0


def test_step_records_follow_the_audit_shape():
    name, inputs = plan("crossing", 0)[0]
    record = run_check("step 1", name, inputs)
    assert record["status"] == "success"
    assert {"step_id", "action", "start_at", "end_at", "inputs", "outputs", "status"} <= set(record)
    assert record["start_at"] <= record["end_at"]


def test_kidwell_check_compares_degree_with_closed_form():
    record = run_check("step 1", "check_kidwell", {"p": 0, "q": 0})
    assert record["status"] == "success"
    assert record["outputs"]["deg_q"] == 6
    assert run_check("step 2", "check_kidwell", {"p": 1, "q": -1})["outputs"]["deg_q"] == 7


def test_zero_max_plans_only_the_base_point():
    for suite in ("structure", "lee", "crossing", "kidwell", "jones"):
        for _, inputs in plan(suite, 0):
            assert abs(inputs.get("p", 0)) + abs(inputs.get("q", 0)) == 0
            assert inputs.get("target") not in ("1", "-1", "K(1,0)")
    assert ("check_les", {"p": 1, "q": 0}) in plan("structure", 1)
    assert ("check_twist_resolution", {"p": -1}) in plan("structure", 1)


def test_failing_check_is_recorded_not_raised():
    record = run_check("step 1", "check_crossing", {"p": 3, "q": -2, "expected": "Exact(13)"})
    assert record["status"] == "failed"
    record = run_check("step 2", "check_lee", {"target": "no-such-fixture", "expected": []})
    assert record["status"] == "error"
    assert record["error"].startswith("KeyError")


def test_unknown_suite_is_rejected():
    with pytest.raises(ValueError):
        plan("nope")


def test_distinguish(runner):
    result = runner.invoke(main, ["distinguish", "--max", "1"])
    assert result.exit_code == 0
    assert "distinct Q" in result.stdout


def test_cached_reports_are_byte_identical(runner, tmp_path, monkeypatch):
    monkeypatch.setattr(settings, "CACHE_DIR", str(tmp_path / "cache"))
    args = ["invariants", "--pd", fixture_path("4_1")]
    first = runner.invoke(main, args)
    assert any((tmp_path / "cache").iterdir())
    second = runner.invoke(main, args)
    assert first.exit_code == second.exit_code == 0
    assert first.stdout == second.stdout


def test_compute_invariant_sources():
    d = kanenobu_diagram(1, 0)
    value, source = compute_invariant("jones", d, (1, 0))
    assert source == "diagram"
    assert value == jones_closed_form(1, 0).pairs()
    value, source = compute_invariant("jones", d, (1, 0), Caps.uniform(0))
    assert source == "closed-form"
    assert value == jones_closed_form(1, 0).pairs()
    with pytest.raises(CapExceededError):
        compute_invariant("khovanov", d, None, Caps.uniform(0))
