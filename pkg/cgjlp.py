#!/usr/bin/env python3
"""
cgjlp - Linear programs solved by complementary Gauss-Jordan pivoting.

Reads a problem file (paper-text or JSON), solves it on the combined
primal-dual system and prints x, y, the objective and the pivot trace.
With --random-suite it instead solves a batch of seeded random instances,
checks each one against the reference oracles and writes the findings.

Exit codes: 0 solved (and consistent), 1 no solution, 2 findings or
iteration limit, 3 breakdown, 64 usage or input error.
"""

import argparse
import logging
import os
import sys
from pathlib import Path

import yaml
from dotenv import load_dotenv

from engine.solver import SolveOutcome, SolverConfig, solve
from errors import LPError, ValidationError
from findings import FindingsCollector
from ingest.problem_file import ProblemFormat, load_problem
from model.problem import LinearProgram, fold_back, fold_objective, normalize
from modes import Arithmetic, OutcomeKind, TraceLevel
from oracle.cross_check import OracleConfig, cross_check
from oracle.random_suite import SuiteConfig, run_suite
from oracle.report import FindingsReport
from tableau.snapshot import format_scalar, format_vector

EXIT_OK = 0
EXIT_NO_SOLUTION = 1
EXIT_FINDINGS = 2
EXIT_BREAKDOWN = 3
EXIT_USAGE = 64

DEFAULT_CONFIG = Path(__file__).parent / 'config' / 'config.yaml'
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger('cgjlp')


def setup_logging(level: str = 'WARNING', log_file: str | None = None):
    """Logs go to stderr, plus a file when configured.

    Falls back to data/cgjlp.log next to this script when the configured
    file cannot be created.
    """
    handlers = [logging.StreamHandler(sys.stderr)]

    if log_file:
        for log_path in (Path(log_file), Path(__file__).parent / 'data' / 'cgjlp.log'):
            try:
                log_path.parent.mkdir(parents=True, exist_ok=True)
                handlers.append(logging.FileHandler(log_path))
                break
            except PermissionError:
                continue

    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.WARNING),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )


def load_config(config_path: str | Path) -> dict:
    """Load configuration from YAML file."""
    config_file = Path(config_path)
    if not config_file.exists():
        logger.warning(f"Config file {config_path} not found, using defaults")
        return {}

    with open(config_file) as f:
        return yaml.safe_load(f) or {}


class UsageParser(argparse.ArgumentParser):
    """ArgumentParser that exits with 64 on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _precision(value: str) -> int | str:
    if value == 'full':
        return value
    try:
        digits = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'full', got {value!r}") from None
    if digits < 0:
        raise argparse.ArgumentTypeError(f"precision must be non-negative, got {digits}")
    return digits


def build_parser() -> argparse.ArgumentParser:
    parser = UsageParser(prog='cgjlp', description='Complementary Gauss-Jordan pivoting LP solver')
    parser.add_argument('--config', '-c', default=None,
                        help='Path to config file (default: $CGJLP_CONFIG or config/config.yaml)')
    parser.add_argument('--log-level', default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help='Log level (default: $CGJLP_LOG_LEVEL or config)')

    solver = parser.add_argument_group('solver')
    solver.add_argument('--input', '-i', help='Problem file to solve')
    solver.add_argument('--format', choices=[f.value for f in ProblemFormat],
                        help='Input format (default: by extension)')
    solver.add_argument('--arithmetic', choices=[a.value for a in Arithmetic],
                        help='Scalar arithmetic')
    solver.add_argument('--tol', type=float, help='Zero tolerance in float mode')
    solver.add_argument('--max-iter', type=int, help='Iteration limit (default: k+n)')
    solver.add_argument('--trace', choices=[t.value for t in TraceLevel], help='Trace detail')
    solver.add_argument('--precision', type=_precision,
                        help="Decimals in printed numbers, or 'full'")
    solver.add_argument('--certificate', action='store_true',
                        help='Print the optimality certificate residuals')

    check = parser.add_argument_group('verification')
    check.add_argument('--oracle-check', action='store_true',
                       help='Cross-check results against the reference oracles')
    check.add_argument('--random-suite', type=int, metavar='COUNT',
                       help='Solve COUNT seeded random instances instead of --input')
    check.add_argument('--seed', type=int, help='Base seed of the random suite')
    check.add_argument('--kmax', type=int, help='Largest number of constraints')
    check.add_argument('--nmax', type=int, help='Largest number of variables')
    check.add_argument('--workers', type=int, help='Threads used by the random suite')
    check.add_argument('--out', help='Findings file (JSON lines)')
    return parser


def solver_config(args, config: dict) -> SolverConfig:
    """Merge flags over config.yaml into a SolverConfig."""
    section = config.get('solver', {}) or {}
    oracle = config.get('oracle', {}) or {}
    output = config.get('output', {}) or {}

    arithmetic = Arithmetic(args.arithmetic or section.get('arithmetic', 'float'))
    exact = arithmetic is Arithmetic.RATIONAL
    if exact and args.tol is not None:
        logger.warning("--tol is ignored in rational arithmetic")
    epsilon = None if exact else (args.tol if args.tol is not None else section.get('epsilon'))
    max_iterations = args.max_iter if args.max_iter is not None else section.get('max_iterations')
    precision = args.precision if args.precision is not None else output.get('precision', 4)

    return SolverConfig(
        arithmetic=arithmetic,
        epsilon=epsilon,
        max_iterations=max_iterations,
        trace_level=args.trace or section.get('trace', 'columns'),
        certificate_tol=None if exact else oracle.get('certificate_tol_float'),
        snapshot_precision=precision,
    )


def format_outcome(lp: LinearProgram, outcome: SolveOutcome, cfg: SolverConfig,
                   show_certificate: bool = False) -> str:
    """Human-readable report of one solve."""
    p = cfg.snapshot_precision
    lines = [f"status: {outcome.kind.value}"]

    if outcome.kind is OutcomeKind.OPTIMAL:
        lines.append(f"x = {format_vector(fold_back(outcome.x, lp.mapping), p)}")
        lines.append(f"y = {format_vector(outcome.y, p)}")
        value = fold_objective(outcome.objective(lp), lp.mapping)
        dual = fold_objective(outcome.dual_objective(lp), lp.mapping)
        lines.append(f"objective = {format_scalar(value, p)}")
        lines.append(f"dual objective = {format_scalar(dual, p)}")
    elif outcome.kind is OutcomeKind.NO_SOLUTION:
        lines.append("no optimal solution: the problem is infeasible or unbounded")
    else:
        lines.append(f"reason: {outcome.reason}")
    lines.append(f"iterations: {outcome.iterations}")

    reversals = outcome.trace.reversals
    if reversals:
        lines.append(f"reversals: {len(reversals)}")
    for note in outcome.trace.notes:
        lines.append(f"note: iteration {note.iteration} {note.category}: {note.detail}")

    if cfg.trace_level is not TraceLevel.NONE:
        lines.append('')
        lines.append(outcome.trace.to_table().rstrip('\n'))
    if cfg.trace_level is TraceLevel.TABLEAUX:
        for label, text in outcome.trace.snapshots:
            lines.append('')
            lines.append(f"[{label}]")
            lines.append(text.rstrip('\n'))

    if show_certificate and outcome.certificate is not None:
        lines.append('')
        lines.append('certificate:')
        for name, value in outcome.certificate.as_dict().items():
            shown = value if isinstance(value, bool) else f"{value:.3e}"
            lines.append(f"  {name}: {shown}")
    return '\n'.join(lines) + '\n'


def exit_code(outcome: SolveOutcome, findings: list) -> int:
    if outcome.kind is OutcomeKind.BREAKDOWN:
        return EXIT_BREAKDOWN
    if findings or outcome.kind is OutcomeKind.ITERATION_LIMIT:
        return EXIT_FINDINGS
    if outcome.kind is OutcomeKind.NO_SOLUTION:
        return EXIT_NO_SOLUTION
    return EXIT_OK


def run_single(args, config: dict, cfg: SolverConfig) -> int:
    try:
        problem_file = load_problem(args.input, args.format)
        lp = normalize(problem_file.problem, cfg.arithmetic, cfg.epsilon)
    except LPError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    outcome = solve(lp, cfg)
    print(format_outcome(lp, outcome, cfg, args.certificate or args.oracle_check), end='')

    findings = []
    if args.oracle_check:
        findings = cross_check(lp, outcome, OracleConfig.from_config(config),
                               instance=str(args.input))
        if findings:
            print()
            for f in findings:
                print(f"finding: {f.category.value} {f.details}")
        else:
            print("oracle check: consistent")
    if args.out:
        collector = FindingsCollector()
        collector.extend(findings)
        collector.write_jsonl(Path(args.out))
    return exit_code(outcome, findings)


def run_random_suite(args, config: dict, cfg: SolverConfig) -> int:
    suite = SuiteConfig.from_config(config)
    suite.count = args.random_suite
    suite.oracle_check = args.oracle_check
    if args.seed is not None:
        suite.seed = args.seed
    if args.kmax is not None:
        suite.kmax = args.kmax
        suite.kmin = min(suite.kmin, args.kmax)
    if args.nmax is not None:
        suite.nmax = args.nmax
        suite.nmin = min(suite.nmin, args.nmax)
    if args.workers is not None:
        suite.workers = args.workers

    result = run_suite(suite, cfg, OracleConfig.from_config(config))
    report = FindingsReport(result.findings, suite.count, [r.outcome for r in result.reports])
    print(report.format_table(), end='')

    out = args.out or (config.get('output', {}) or {}).get('findings_file', 'data/findings.jsonl')
    if result.collector.write_jsonl(Path(out)):
        print(f"findings written to {out}")
    return EXIT_OK if result.clean else EXIT_FINDINGS


def main(argv: list[str] | None = None) -> int:
    load_dotenv()
    parser = build_parser()
    args = parser.parse_args(argv)

    config = load_config(args.config or os.environ.get('CGJLP_CONFIG') or DEFAULT_CONFIG)
    log_config = config.get('logging', {}) or {}
    setup_logging(args.log_level or os.environ.get('CGJLP_LOG_LEVEL') or log_config.get('level', 'WARNING'),
                  log_config.get('file'))

    if (args.input is None) == (args.random_suite is None):
        parser.error("exactly one of --input or --random-suite is required")
    if args.random_suite is not None and args.random_suite < 1:
        parser.error(f"--random-suite needs a positive count, got {args.random_suite}")

    try:
        cfg = solver_config(args, config)
    except (ValidationError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.random_suite is not None:
        return run_random_suite(args, config, cfg)
    return run_single(args, config, cfg)


if __name__ == '__main__':
    sys.exit(main())
