"""End-to-end tests of the command-line interface."""

import json

import pytest

from boundedcode import cli

QUAD_WEIGHTS = "0.4\n0.3\n0.14\n# a comment\n\n0.06\n0.06\n0.02\n0.02\n"


@pytest.fixture
def weights_file(tmp_path):
    path = tmp_path / "weights.txt"
    path.write_text(QUAD_WEIGHTS)
    return str(path)


class TestSolve:
    def test_quadratic_fixture(self, weights_file, capsys):
        rc = cli.main([
            "solve", "--radix", "3", "--min-len", "1", "--max-len", "4",
            "--penalty", "quadratic", weights_file,
        ])
        out = capsys.readouterr().out
        assert rc == 0
        assert "lengths: 1,2,2,2,2,2,2" in out
        assert "codewords: 0,10,11,12,20,21,22" in out

    def test_json_format(self, weights_file, capsys):
        rc = cli.main([
            "solve", "--radix", "3", "--min-len", "1", "--max-len", "4",
            "--penalty", "quadratic", "--format", "json", weights_file,
        ])
        assert rc == 0
        data = json.loads(capsys.readouterr().out)
        assert data["lengths"] == [1, 2, 2, 2, 2, 2, 2]
        assert data["kraft"] == "1"
        assert data["cost"] == pytest.approx(0.6)

    def test_infeasible_exits_2(self, weights_file, capsys):
        rc = cli.main(["solve", "--radix", "3", "--max-len", "1", weights_file])
        assert rc == 2
        assert "error" in capsys.readouterr().err

    def test_missing_file_exits_1(self, capsys):
        rc = cli.main(["solve", "/nonexistent/weights.txt"])
        assert rc == 1

    def test_garbage_weights_exit_1(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("0.5\npotato\n")
        assert cli.main(["solve", str(path)]) == 1

    def test_fringe_mode(self, tmp_path, capsys):
        path = tmp_path / "units.txt"
        path.write_text("1\n" * 7)
        rc = cli.main(["solve", "--fringe", "1", "--radix", "3", str(path)])
        out = capsys.readouterr().out
        assert rc == 0
        assert "cost: 13.0" in out

    def test_solver_selection(self, weights_file, capsys):
        for name in ("package-merge", "linear-space"):
            rc = cli.main([
                "solve", "--radix", "3", "--min-len", "1", "--max-len", "4",
                "--penalty", "quadratic", "--solver", name, weights_file,
            ])
            assert rc == 0
            assert f"solver: {name}" in capsys.readouterr().out

    def test_output_is_deterministic(self, weights_file, capsys):
        args = ["solve", "--radix", "3", "--min-len", "1", "--max-len", "4",
                "--penalty", "quadratic", weights_file]
        cli.main(args)
        first = capsys.readouterr().out
        cli.main(args)
        assert capsys.readouterr().out == first

    def test_original_order_preserved(self, tmp_path, capsys):
        path = tmp_path / "w.txt"
        path.write_text("0.1\n0.9\n")  # light symbol listed first
        rc = cli.main(["solve", "--max-len", "2", "--format", "json", str(path)])
        assert rc == 0
        data = json.loads(capsys.readouterr().out)
        assert data["lengths"] == [2, 1] or data["lengths"] == [1, 1]


class TestBench:
    def test_small_bench_agrees(self, capsys):
        rc = cli.main(["bench", "--n", "9", "--all-penalties", "--count", "2",
                       "--spread", "4"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "DISAGREE" not in out
        assert "oracle" in out

    def test_zero_n_exits_1(self, capsys):
        assert cli.main(["bench", "--n", "0"]) == 1

    def test_midsize_bench(self, capsys):
        rc = cli.main(["bench", "--n", "500", "--count", "1", "--spread", "8"])
        assert rc == 0
