"""
Test the iteration budget script on a small grid.
"""

import json
import sys
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

import scripts.iteration_table as iteration_script
from gaussquad.core.errors import MaxIterationsExceeded
from gaussquad.utils.logging import RuleRunLogger
from scripts.iteration_table import failed_cells, iteration_table, print_table


def test_small_table(tmp_path, capsys):
    run_logger = RuleRunLogger(log_file="table.log", log_dir=str(tmp_path))
    table = iteration_table("hermite", [20, 200], [16, 24], run_logger=run_logger)
    assert set(table) == {(20, 16), (200, 16), (20, 24), (200, 24)}
    for iterations, terms, seconds in table.values():
        assert 1 <= iterations <= 3
        assert terms >= 20
        assert seconds >= 0

    records = [json.loads(chunk) for chunk in
               (tmp_path / "table.log").read_text(encoding="utf-8").split("\n\n") if chunk.strip()]
    assert len(records) == 4
    assert all(r["metadata"]["script"] == "iteration_table" for r in records)

    print_table("hermite", table, [20, 200], [16, 24])
    out = capsys.readouterr().out
    assert "D=24" in out
    assert "failed" not in out


def test_laguerre_table(tmp_path):
    table = iteration_table("laguerre", [30], [16], alpha="0.5",
                            run_logger=RuleRunLogger(log_file="table.log", log_dir=str(tmp_path)))
    iterations, _, _ = table[(30, 16)]
    assert 1.9 <= iterations <= 4


def test_failed_runs_are_marked(tmp_path, capsys, monkeypatch):
    real_build = iteration_script.build

    def build(family, n, digits, alpha):
        if n == 200:
            raise MaxIterationsExceeded("no convergence\nnear 3.1", point=3.1, iterations=41)
        return real_build(family, n, digits, alpha)

    monkeypatch.setattr(iteration_script, "build", build)
    table = iteration_table("hermite", [20, 200], [16],
                            run_logger=RuleRunLogger(log_file="table.log", log_dir=str(tmp_path)))
    assert failed_cells(table) == [(200, 16)]
    assert table[(200, 16)] == "MaxIterationsExceeded: no convergence near 3.1"
    assert len(table[(20, 16)]) == 3

    print_table("hermite", table, [20, 200], [16])
    lines = capsys.readouterr().out.splitlines()
    row = next(line for line in lines if line.split() and line.split()[0] == "200")
    assert row.split()[1] == "failed"
    assert "  n=200 D=16: MaxIterationsExceeded: no convergence near 3.1" in lines


if __name__ == "__main__":
    print("=" * 70)
    print("TEST: Iteration table")
    print("=" * 70)
    test_laguerre_table(Path("logs"))
    print("✅ Iteration table tests passed")
