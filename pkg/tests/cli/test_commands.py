"""
Tests for the command-line surface.
"""

import json

import pytest
from click.testing import CliRunner

from main import main


@pytest.fixture
def run(temp_dir):
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, ["--cwd", str(temp_dir), *args])

    return invoke


def test_dump_module(run, temp_dir):
    """The generator matrices are written as JSON."""
    target = temp_dir / "module.json"
    result = run("dump-module", "--output", str(target))
    assert result.exit_code == 0
    data = json.loads(target.read_text())
    assert len(data["basis"]) == 15
    assert set(data["matrices"]) >= {"e0", "f0", "e1", "f1", "e2", "f2"}


def test_tropicalize(run):
    """A positive formula prints its piecewise-linear form."""
    result = run("tropicalize", "gamma2")
    assert result.exit_code == 0
    assert '"coordinates"' in result.output


def test_tropicalize_unknown_target(run):
    """Unknown names are a precondition failure."""
    assert run("tropicalize", "nope").exit_code == 3


def test_unknown_suite_is_usage_error(run):
    """Unknown suite names are rejected by click."""
    assert run("verify", "nosuch").exit_code == 2


def test_verify_module_is_deterministic(run, temp_dir):
    """Same seed and config give byte-identical reports."""
    first = temp_dir / "a.json"
    second = temp_dir / "b.json"
    assert run("verify", "module", "--seed", "3", "--output", str(first)).exit_code == 0
    assert run("verify", "module", "--seed", "3", "--output", str(second)).exit_code == 0
    assert first.read_bytes() == second.read_bytes()
    data = json.loads(first.read_text())
    assert data["passed"] is True
    assert data["suite"] == "module"
    assert data["config"]["seed"] == 3


def test_verify_verma_single_pair(run, temp_dir):
    """One Verma pair can be selected on its own."""
    target = temp_dir / "verma.json"
    result = run(
        "verify", "verma", "--pair", "0,2", "--variant", "paper",
        "--samples", "3", "--coeff-bound", "20", "--output", str(target),
    )
    assert result.exit_code == 0
    data = json.loads(target.read_text())
    assert data["passed"] is True
    assert [r["identity"] for r in data["reports"]] == ["verma.02.paper"]


def test_verify_bad_pair(run):
    """Only the three Verma pairs are accepted."""
    assert run("verify", "verma", "--pair", "1,1").exit_code == 2


def test_invalid_project_config(run, temp_dir):
    """Broken project configuration exits with the precondition code."""
    config_dir = temp_dir / ".g2crystal"
    config_dir.mkdir()
    (config_dir / "config.toml").write_text("samples = = 1\n", encoding="utf-8")
    assert run("dump-module").exit_code == 3


def test_explore_radius_zero(run, temp_dir):
    """Radius zero gives the seed alone."""
    target = temp_dir / "graph.json"
    result = run("explore", "--radius", "0", "--format", "json", "--output", str(target))
    assert result.exit_code == 0
    data = json.loads(target.read_text())
    assert len(data["nodes"]) == 1
    assert data["edges"] == []


def test_explore_dot(run, temp_dir):
    """DOT is the default export format."""
    target = temp_dir / "graph.dot"
    assert run("explore", "--radius", "1", "--output", str(target)).exit_code == 0
    assert target.read_text().startswith("digraph crystal {")


def test_explore_bad_seed_point(run):
    """A seed point needs six integers."""
    assert run("explore", "--seed-point", "1,2,3").exit_code == 2


def test_dump_formula_text(run, temp_dir):
    """Text output is the sympy rendering of the body."""
    target = temp_dir / "gamma2.txt"
    result = run("dump-formula", "gamma2", "--format", "text", "--output", str(target))
    assert result.exit_code == 0
    assert target.read_text().startswith("gamma2 = ")


def test_dump_formula_json(run, temp_dir):
    """JSON output is expression JSON over the x table."""
    target = temp_dir / "gamma2.json"
    assert run("dump-formula", "gamma2", "--output", str(target)).exit_code == 0
    assert json.loads(target.read_text())["vars"][0] == "x0"


def test_dump_formula_unknown(run):
    """Unknown formulas are a precondition failure."""
    assert run("dump-formula", "nope").exit_code == 3


def test_verify_theorem(run, temp_dir):
    """The theorem suite covers the pullbacks and passes."""
    target = temp_dir / "theorem.json"
    result = run("verify", "theorem", "--samples", "2", "--coeff-bound", "20", "--output", str(target))
    assert result.exit_code == 0
    data = json.loads(target.read_text())
    assert data["passed"] is True
    assert "theorem.pullbacks" in [r["identity"] for r in data["reports"]]


def test_verify_udcrystal_honours_ud_samples(run, temp_dir):
    """--ud-samples sets the number of integer points of the UD sweep."""
    target = temp_dir / "ud.json"
    result = run("verify", "udcrystal", "--ud-samples", "5", "--output", str(target))
    assert result.exit_code == 0
    data = json.loads(target.read_text())
    assert data["config"]["ud_samples"] == 5
    assert data["reports"]
    assert all(r["samples"] == 5 for r in data["reports"])


def test_verify_paper_variant_of_length6(run, temp_dir):
    """The paper variant of the length-6 relation passes from the command line."""
    target = temp_dir / "verma21.json"
    result = run(
        "verify", "verma", "--pair", "2,1", "--variant", "paper",
        "--samples", "2", "--coeff-bound", "20", "--output", str(target),
    )
    assert result.exit_code == 0
    assert json.loads(target.read_text())["reports"][0]["identity"] == "verma.21.paper"
