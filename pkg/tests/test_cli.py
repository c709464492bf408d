#!/usr/bin/env python3
"""Tests for the cgjlp command line: output and exit codes."""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))
import cgjlp
from findings import load_jsonl
from problems import PROBLEM_DIR


def problem(name: str) -> str:
    return str(PROBLEM_DIR / name)


class TestSolveCommand:
    """Single-problem runs."""

    def test_illustration_with_tableaux(self, capsys):
        """The worked illustration prints every labelled tableau and its solution."""
        code = cgjlp.main(['--input', problem('sec2.json'), '--trace', 'tableaux'])
        out = capsys.readouterr().out
        assert code == cgjlp.EXIT_OK
        assert 'status: optimal' in out
        assert 'iterations: 2' in out
        for label in ('[initial]', '[Z1]', '[P1]', '[Z2]', '[P2]'):
            assert label in out
        assert 'x = (5.0000, 5.0000)' in out
        assert 'y = (1.0000, 2.0000)' in out

    def test_klee_minty_with_oracle(self, capsys):
        """Klee-Minty n=3 solves in one iteration and agrees with the oracles."""
        code = cgjlp.main(['--input', problem('kleeminty3.txt'), '--oracle-check'])
        out = capsys.readouterr().out
        assert code == cgjlp.EXIT_OK
        assert '1\t6\t3' in out.splitlines()
        assert 'x = (0.0000, 0.0000, 10000.0000)' in out
        assert 'objective = 10000.0000' in out
        assert 'oracle check: consistent' in out
        assert 'certificate:' in out

    def test_unbounded_exits_1(self, capsys):
        """An unbounded problem reports no solution with exit code 1."""
        code = cgjlp.main(['--input', problem('example10.txt'), '--arithmetic', 'rational'])
        out = capsys.readouterr().out
        assert code == cgjlp.EXIT_NO_SOLUTION
        assert 'status: no_solution' in out
        assert '1\t4\tn. a.' in out.splitlines()

    def test_iteration_limit_exits_2(self, capsys):
        """Hitting the iteration limit exits with the findings code."""
        code = cgjlp.main(['--input', problem('sec2.txt'), '--max-iter', '1'])
        assert code == cgjlp.EXIT_FINDINGS
        assert 'status: iteration_limit' in capsys.readouterr().out

    def test_full_precision_rational(self, capsys):
        """Full precision prints exact fractions and no trace table."""
        code = cgjlp.main(['--input', problem('example06.txt'), '--arithmetic', 'rational',
                           '--precision', 'full', '--trace', 'none'])
        out = capsys.readouterr().out
        assert code == cgjlp.EXIT_OK
        assert 'x = (0, 2/7, 0, 0, 11/7)' in out
        assert 'objective = 57/7' in out
        assert 'itn\t' not in out

    def test_min_problem_reports_original_sense(self, tmp_path, capsys):
        """A min problem reports x and the objective in its own sense."""
        path = tmp_path / 'min.json'
        path.write_text('{"sense": "min", "objective": [1, 1],'
                        ' "constraints": [{"coeffs": [1, 1], "op": ">=", "rhs": 2}]}')
        code = cgjlp.main(['--input', str(path), '--arithmetic', 'rational'])
        out = capsys.readouterr().out
        assert code == cgjlp.EXIT_OK
        assert 'x = (2.0000, 0.0000)' in out
        assert 'objective = 2.0000' in out

    def test_findings_file_for_single_solve(self, tmp_path, capsys):
        """A consistent single solve writes an empty findings file."""
        out_file = tmp_path / 'findings.jsonl'
        code = cgjlp.main(['--input', problem('example05.txt'), '--oracle-check',
                           '--out', str(out_file)])
        capsys.readouterr()
        assert code == cgjlp.EXIT_OK
        assert load_jsonl(out_file) == []


class TestUsageErrors:
    """Exit 64 for bad flags and bad input."""

    def test_no_mode(self):
        """Neither --input nor --random-suite is a usage error."""
        with pytest.raises(SystemExit) as exc:
            cgjlp.main([])
        assert exc.value.code == cgjlp.EXIT_USAGE

    def test_both_modes(self):
        """--input and --random-suite together is a usage error."""
        with pytest.raises(SystemExit) as exc:
            cgjlp.main(['--input', problem('sec2.txt'), '--random-suite', '3'])
        assert exc.value.code == cgjlp.EXIT_USAGE

    def test_bad_choice(self):
        """An unknown arithmetic mode is rejected."""
        with pytest.raises(SystemExit) as exc:
            cgjlp.main(['--input', problem('sec2.txt'), '--arithmetic', 'decimal'])
        assert exc.value.code == cgjlp.EXIT_USAGE

    def test_bad_precision(self):
        """A precision that is neither an integer nor 'full' is rejected."""
        with pytest.raises(SystemExit) as exc:
            cgjlp.main(['--input', problem('sec2.txt'), '--precision', 'many'])
        assert exc.value.code == cgjlp.EXIT_USAGE

    def test_parse_error(self, tmp_path, capsys):
        """Parse errors report line and column and exit 64."""
        path = tmp_path / 'bad.txt'
        path.write_text("1 x\n1 1 | 4\n")
        assert cgjlp.main(['--input', str(path)]) == cgjlp.EXIT_USAGE
        assert 'line 1, column 3' in capsys.readouterr().err

    def test_float_overflow_in_input(self, tmp_path, capsys):
        """A coefficient too large for binary64 is an input error, not a crash."""
        path = tmp_path / 'big.json'
        path.write_text('{"objective": [1], "constraints": [{"coeffs": [1], "rhs": 1e400}]}')
        assert cgjlp.main(['--input', str(path)]) == cgjlp.EXIT_USAGE
        assert 'out of float range' in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        """A missing input file exits 64."""
        assert cgjlp.main(['--input', str(tmp_path / 'none.txt')]) == cgjlp.EXIT_USAGE

    def test_negative_tolerance(self):
        """A negative tolerance is a usage error."""
        assert cgjlp.main(['--input', problem('sec2.txt'), '--tol', '-1']) == cgjlp.EXIT_USAGE


class TestRandomSuiteCommand:
    """Batch mode."""

    def test_suite_writes_findings(self, tmp_path, capsys):
        """The suite prints its summary and writes the findings file."""
        out_file = tmp_path / 'findings.jsonl'
        code = cgjlp.main(['--random-suite', '5', '--seed', '3', '--kmax', '3', '--nmax', '3',
                           '--arithmetic', 'rational', '--oracle-check', '--out', str(out_file)])
        out = capsys.readouterr().out
        assert 'pass rate' in out
        assert out_file.exists()
        records = load_jsonl(out_file)
        assert code == (cgjlp.EXIT_OK if not records else cgjlp.EXIT_FINDINGS)

    def test_suite_is_reproducible(self, tmp_path, capsys):
        """The same seed writes the same findings twice."""
        args = ['--random-suite', '4', '--seed', '8', '--kmax', '3', '--nmax', '3', '--oracle-check']
        first, second = tmp_path / 'a.jsonl', tmp_path / 'b.jsonl'
        code_a = cgjlp.main(args + ['--out', str(first)])
        code_b = cgjlp.main(args + ['--out', str(second)])
        capsys.readouterr()
        assert code_a == code_b
        assert first.read_text() == second.read_text()


class TestConfiguration:
    """config.yaml and environment overrides."""

    def test_config_from_environment(self, tmp_path, monkeypatch, capsys):
        """CGJLP_CONFIG selects the config file."""
        config = tmp_path / 'config.yaml'
        config.write_text("solver:\n  arithmetic: rational\noutput:\n  precision: full\n")
        monkeypatch.setenv('CGJLP_CONFIG', str(config))
        code = cgjlp.main(['--input', problem('sec2.txt')])
        assert code == cgjlp.EXIT_OK
        assert 'x = (5, 5)' in capsys.readouterr().out

    def test_flag_beats_config(self, tmp_path, capsys):
        """Command-line flags override config values."""
        config = tmp_path / 'config.yaml'
        config.write_text("output:\n  precision: full\n")
        cgjlp.main(['--config', str(config), '--input', problem('sec2.txt'),
                    '--arithmetic', 'rational', '--precision', '2'])
        assert 'x = (5.00, 5.00)' in capsys.readouterr().out

    def test_missing_config_uses_defaults(self, tmp_path, capsys):
        """A missing config file falls back to defaults."""
        code = cgjlp.main(['--config', str(tmp_path / 'nope.yaml'), '--input', problem('sec2.txt')])
        assert code == cgjlp.EXIT_OK
        assert 'x = (5.0000, 5.0000)' in capsys.readouterr().out

    def test_load_config(self):
        """The bundled config file loads."""
        config = cgjlp.load_config(cgjlp.DEFAULT_CONFIG)
        assert config['solver']['arithmetic'] == 'float'
        assert config['suite']['seed'] == 42
