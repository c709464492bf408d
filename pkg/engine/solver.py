"""
Solve loop: initialize, then alternate MinorP and MajorP instances until
the tableau shows a solution, shows that none exists, or the iteration
limit is reached.
"""

import logging
from dataclasses import dataclass, field

from errors import LPError, ValidationError
from engine.pivoting import Terminal, TerminalKind, run_majorp, run_minorp
from engine.trace import SolveTrace, TraceRow
from model.eq_system import build_eq
from model.problem import LinearProgram
from model.scalars import ScalarField
from modes import Arithmetic, OutcomeKind, Phase, TraceLevel
from oracle.certificate import CertificateReport, check_certificate
from tableau.core import EqTableau, StopKind, initialize
from tableau.snapshot import format_matrix

logger = logging.getLogger('cgjlp.engine')


@dataclass
class SolverConfig:
    arithmetic: Arithmetic = Arithmetic.FLOAT
    epsilon: object = None
    max_iterations: int | None = None
    trace_level: TraceLevel = TraceLevel.COLUMNS
    certificate_tol: object = None
    snapshot_precision: int | str = 4

    def __post_init__(self):
        self.arithmetic = Arithmetic(self.arithmetic)
        self.trace_level = TraceLevel(self.trace_level)
        if self.max_iterations is not None and self.max_iterations < 1:
            raise ValidationError(f"max_iterations must be >= 1, got {self.max_iterations}")
        # validates epsilon as a side effect
        self.field

    @property
    def field(self) -> ScalarField:
        return ScalarField(self.arithmetic, self.epsilon)

    @classmethod
    def from_config(cls, config: dict) -> 'SolverConfig':
        """Build from the ``solver`` section of config.yaml."""
        solver = config.get('solver', {}) or {}
        oracle = config.get('oracle', {}) or {}
        arithmetic = Arithmetic(solver.get('arithmetic', 'float'))
        exact = arithmetic is Arithmetic.RATIONAL
        return cls(
            arithmetic=arithmetic,
            epsilon=None if exact else solver.get('epsilon'),
            max_iterations=solver.get('max_iterations'),
            trace_level=solver.get('trace', 'columns'),
            certificate_tol=None if exact else oracle.get('certificate_tol_float'),
        )


@dataclass
class SolveOutcome:
    kind: OutcomeKind
    trace: SolveTrace
    x: list | None = None
    y: list | None = None
    z: list | None = None
    reason: str = ''
    certificate: CertificateReport | None = None
    tableau: EqTableau | None = field(default=None, repr=False)

    @property
    def iterations(self) -> int:
        return self.trace.iterations

    @property
    def optimal(self) -> bool:
        return self.kind is OutcomeKind.OPTIMAL

    def objective(self, lp: LinearProgram):
        """Primal value f^T x in the normalized (max) sense."""
        if self.x is None:
            return None
        return lp.objective(self.x)

    def dual_objective(self, lp: LinearProgram):
        if self.y is None:
            return None
        return sum((bi * yi for bi, yi in zip(lp.b, self.y)), lp.field.zero)


def extract_solution(tab: EqTableau) -> tuple[list, list, list]:
    """Read z off the basic columns; y = z[1..k], x = z[k+1..k+n]."""
    z = [tab.field.zero] * tab.num_columns
    for row in range(1, tab.size + 1):
        col = tab.basic_column(row)
        if not tab.is_unit_column(col, row):
            raise LPError(f"basis inconsistent: column {col} is not the unit column of row {row}")
        z[col - 1] = tab.q[row - 1]
    y = z[:tab.k]
    x = z[tab.k:tab.size]
    return z, x, y


class _Solve:
    """State of one run of the solve loop."""

    def __init__(self, lp: LinearProgram, cfg: SolverConfig):
        self.lp = lp.with_field(cfg.field)
        self.cfg = cfg
        self.tab = initialize(build_eq(self.lp))
        self.trace = SolveTrace(self.lp.k, self.lp.n)
        self.limit = cfg.max_iterations or self.lp.k + self.lp.n
        self._snapshot('initial')

    def _snapshot(self, label: str):
        if self.cfg.trace_level is TraceLevel.TABLEAUX:
            self.trace.snapshots.append((label, format_matrix(self.tab.T, self.cfg.snapshot_precision)))

    def _outcome(self, kind: OutcomeKind, reason: str = '', **kwargs) -> SolveOutcome:
        self.trace.notes = list(self.tab.notes)
        if kind is OutcomeKind.BREAKDOWN:
            logger.error(f"Breakdown after {self.trace.iterations} iterations: {reason}")
        return SolveOutcome(kind, self.trace, reason=reason, tableau=self.tab, **kwargs)

    def _run_instance(self, row: TraceRow, phase: Phase):
        """Run one instance and file its pivots under ``phase`` in the trace row."""
        before = len(self.tab.pivot_log)
        runner = run_minorp if phase is Phase.MINORP else run_majorp
        result = runner(self.tab, self.cfg)
        pivots = self.tab.pivot_log[before:]
        target = row.minorp if phase is Phase.MINORP else row.majorp
        target.extend(pivots)
        prefix = 'Z' if phase is Phase.MINORP else 'P'
        for i, _ in enumerate(pivots):
            self._snapshot(f"{prefix}{row.iteration}" + "'" * i)
        return result

    def _terminal(self, result: Terminal) -> SolveOutcome | None:
        if result.kind is TerminalKind.SOLVED:
            return self._solved()
        if result.kind is TerminalKind.NO_SOLUTION:
            return self._outcome(OutcomeKind.NO_SOLUTION)
        return self._outcome(OutcomeKind.BREAKDOWN, result.reason)

    def _solved(self) -> SolveOutcome:
        try:
            z, x, y = extract_solution(self.tab)
        except LPError as e:
            return self._outcome(OutcomeKind.BREAKDOWN, str(e))
        tol = self.cfg.certificate_tol
        report = check_certificate(self.lp, x, y, z, tol)
        if not report.passed:
            return self._outcome(OutcomeKind.BREAKDOWN,
                                 f"certificate rejected: {', '.join(report.failures())}",
                                 x=x, y=y, z=z, certificate=report)
        logger.info(f"Solved in {self.trace.iterations} iterations")
        return self._outcome(OutcomeKind.OPTIMAL, x=x, y=y, z=z, certificate=report)

    def run(self) -> SolveOutcome:
        tab = self.tab
        fld = tab.field
        while True:
            status = tab.check_stop()
            if status.kind is StopKind.SOLVED:
                return self._solved()
            if status.kind is StopKind.NO_SOLUTION:
                return self._outcome(OutcomeKind.NO_SOLUTION)

            iteration = self.trace.iterations + 1
            if iteration > self.limit:
                logger.warning(f"Iteration limit {self.limit} reached (k+n = {tab.size})")
                return self._outcome(OutcomeKind.ITERATION_LIMIT,
                                     f"more than {self.limit} iterations")
            tab.iteration = iteration
            row = self.trace.start_iteration(iteration)

            if fld.is_zero(tab.q_last):
                result = self._run_instance(row, Phase.MINORP)
                if isinstance(result, Terminal):
                    return self._terminal(result)
                status = tab.check_stop()
                if status.kind is StopKind.SOLVED:
                    return self._solved()
                if status.kind is StopKind.NO_SOLUTION:
                    return self._outcome(OutcomeKind.NO_SOLUTION)

            if not fld.is_zero(tab.q_last):
                result = self._run_instance(row, Phase.MAJORP)
                if isinstance(result, Terminal):
                    return self._terminal(result)


def solve(lp: LinearProgram, cfg: SolverConfig | None = None) -> SolveOutcome:
    """Run complementary pivoting on ``lp``.

    Every failure inside the loop is reported as a Breakdown outcome;
    nothing raised by the tableau escapes.
    """
    cfg = cfg or SolverConfig()
    logger.info(f"Solving {lp.k}x{lp.n} LP in {cfg.arithmetic.value} arithmetic")
    run = _Solve(lp, cfg)
    try:
        return run.run()
    except LPError as e:
        return run._outcome(OutcomeKind.BREAKDOWN, str(e))
