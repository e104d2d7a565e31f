"""
Test the command-line front end: output formats, filtering, stats, run logs
and exit codes.
"""

import json
import math
import sys
from io import StringIO
from pathlib import Path

import pytest

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

import cli
from cli import EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, CliRequest, main, parse_request


def run_cli(*argv):
    out, err = StringIO(), StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def csv_rows(text):
    lines = [line for line in text.strip().splitlines() if not line.startswith("#")]
    header = lines[0].split(",")
    return header, [dict(zip(header, line.split(","))) for line in lines[1:]]


def test_hermite_csv():
    code, out, err = run_cli("hermite", "--n", "3")
    assert code == EXIT_OK, err
    header, rows = csv_rows(out)
    assert header == ["i", "x", "w", "omega"]
    assert [r["i"] for r in rows] == ["1", "2", "3"]
    assert rows[1]["w"].startswith("1.18163590060367")
    assert float(rows[0]["x"]) == pytest.approx(-math.sqrt(1.5), rel=1e-15)


def test_laguerre_single_node():
    code, out, _ = run_cli("laguerre", "--n", "1")
    assert code == EXIT_OK
    _, rows = csv_rows(out)
    assert len(rows) == 1
    assert float(rows[0]["x"]) == pytest.approx(1.0, rel=1e-14)
    assert float(rows[0]["w"]) == pytest.approx(1.0, rel=1e-15)


def test_json_matches_csv():
    _, csv_out, _ = run_cli("laguerre", "--n", "6", "--alpha", "0.5")
    code, json_out, _ = run_cli("laguerre", "--n", "6", "--alpha", "0.5", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(json_out)
    _, rows = csv_rows(csv_out)
    assert payload["kind"] == "laguerre"
    assert payload["alpha"] == "0.5"
    assert payload["n"] == 6
    assert payload["digits"] == 16
    assert payload["normalized"] is False
    assert payload["nodes"] == [r["x"] for r in rows]
    assert payload["weights"] == [r["w"] for r in rows]
    assert payload["scaled_weights"] == [r["omega"] for r in rows]
    assert payload["indices"] == list(range(1, 7))


def test_unnormalized_and_normalized_laguerre_weights():
    _, raw, _ = run_cli("laguerre", "--n", "8", "--alpha", "3", "--format", "json")
    _, unit, _ = run_cli("laguerre", "--n", "8", "--alpha", "3", "--format", "json", "--normalized")
    raw_sum = math.fsum(float(w) for w in json.loads(raw)["weights"])
    unit_sum = math.fsum(float(w) for w in json.loads(unit)["weights"])
    assert raw_sum == pytest.approx(6.0, rel=1e-13)
    assert unit_sum == pytest.approx(1.0, rel=1e-13)
    assert json.loads(unit)["normalized"] is True


def test_threshold_drops_small_weights():
    _, full, _ = run_cli("hermite", "--n", "60")
    _, trimmed, _ = run_cli("hermite", "--n", "60", "--threshold", "1e-20")
    _, full_rows = csv_rows(full)
    _, kept = csv_rows(trimmed)
    assert len(full_rows) == 60
    assert 0 < len(kept) < 60
    assert all(float(r["w"]) >= 1e-20 for r in kept)
    # indices keep their position in the full rule
    assert kept[0]["i"] != "1"


def test_subsampled_large_laguerre_rule():
    code, out, _ = run_cli("laguerre", "--n", "1000", "--alpha", "0", "--threshold", "1e-30", "--stats")
    assert code == EXIT_OK
    _, rows = csv_rows(out)
    assert 0 < len(rows) < 1000
    comments = dict(line[2:].split("=") for line in out.splitlines() if line.startswith("#"))
    assert comments["nodes_computed"] == "1000"
    # convergence plus the one confirmation iteration per node
    assert float(comments["mean_iterations"]) <= 3.0


def test_stats_lines():
    code, out, _ = run_cli("hermite", "--n", "20", "--stats")
    assert code == EXIT_OK
    comments = [line for line in out.splitlines() if line.startswith("#")]
    assert comments[0] == "# nodes_computed=10"
    assert comments[1].startswith("# mean_iterations=")
    assert comments[2].startswith("# mean_terms=")

    _, json_out, _ = run_cli("hermite", "--n", "20", "--stats", "--format", "json")
    stats = json.loads(json_out)["stats"]
    assert len(stats["iterations"]) == 10
    assert stats["mean_iterations"] >= 1


def test_radau_rows_and_barycentric_column():
    code, out, _ = run_cli("radau-laguerre", "--n", "4", "--alpha", "0", "--barycentric")
    assert code == EXIT_OK
    header, rows = csv_rows(out)
    assert header == ["i", "x", "w", "omega", "v"]
    assert len(rows) == 5
    assert rows[0]["i"] == "0"
    assert float(rows[0]["x"]) == 0
    assert rows[0]["omega"] == ""
    # 1 / binom(5, 4)
    assert float(rows[0]["w"]) == pytest.approx(0.2, rel=1e-14)
    assert max(abs(float(r["v"])) for r in rows) == 1.0


def test_high_precision_output():
    code, out, _ = run_cli("hermite", "--n", "3", "--digits", "40", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    middle = payload["weights"][1]
    assert middle.startswith("1.1816359006036773515")
    assert len(middle.replace(".", "")) >= 39


def test_run_log(tmp_path):
    code, _, _ = run_cli("hermite", "--n", "5", "--run-log", str(tmp_path))
    assert code == EXIT_OK
    log_file = tmp_path / "rule_runs.log"
    record = json.loads(log_file.read_text(encoding="utf-8").split("\n\n")[0])
    assert record["kind"] == "hermite"
    assert record["n"] == 5
    assert record["metadata"]["family"] == "hermite"


@pytest.mark.parametrize("argv", [
    ["hermite", "--n", "0"],
    ["hermite", "--n", "5", "--digits", "4"],
    ["hermite", "--n", "5", "--alpha", "0.5"],
    ["laguerre", "--n", "5", "--alpha", "-1"],
    ["laguerre", "--n", "5", "--alpha", "x"],
    ["jacobi", "--n", "5"],
    ["hermite"],
    ["hermite", "--n", "5", "--threshold", "-1"],
])
def test_usage_errors(argv):
    code, out, err = run_cli(*argv)
    assert code == EXIT_USAGE
    assert out == ""
    assert err.startswith("error:")


def test_parse_request_defaults():
    request, level = parse_request(["laguerre", "--n", "7"])
    assert isinstance(request, CliRequest)
    assert request.alpha == 0
    assert request.digits == 16
    assert level is None
    request, level = parse_request(["hermite", "--n", "7", "--log-level", "DEBUG"])
    assert request.alpha is None
    assert level == "DEBUG"


def test_failures_after_validation_are_internal(monkeypatch):
    def fail(request):
        raise ValueError("sweep lost a node")

    monkeypatch.setattr(cli, "build_rule", fail)
    code, out, err = run_cli("laguerre", "--n", "5", "--alpha=-0.9")
    assert code == EXIT_INTERNAL
    assert out == ""
    assert err.startswith("internal error: sweep lost a node")


def test_alpha_near_minus_one_succeeds():
    code, out, err = run_cli("laguerre", "--n", "5", "--alpha=-0.9")
    assert code == EXIT_OK, err
    header, rows = csv_rows(out)
    assert len(rows) == 5
    assert all(float(r["x"]) > 0 for r in rows)


if __name__ == "__main__":
    print("=" * 70)
    print("TEST: Command-line interface")
    print("=" * 70)
    test_hermite_csv()
    test_laguerre_single_node()
    test_json_matches_csv()
    test_stats_lines()
    test_radau_rows_and_barycentric_column()
    test_alpha_near_minus_one_succeeds()
    print("✅ CLI tests passed")
