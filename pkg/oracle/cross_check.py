"""Compare solver outcomes against the reference oracles."""
import logging
from dataclasses import dataclass, field

from errors import OracleSizeError
from engine.solver import SolveOutcome
from findings import Finding
from model.problem import LinearProgram
from modes import FindingCategory, OutcomeKind
from oracle.enumeration import DEFAULT_MAX_SIZE as ENUMERATION_MAX_SIZE, enumeration_solve
from oracle.simplex import DEFAULT_MAX_SIZE as SIMPLEX_MAX_SIZE, OracleResult, OracleStatus, simplex_solve

logger = logging.getLogger('cgjlp.oracle')

DEFAULT_VALUE_TOL = 1e-6


@dataclass
class OracleConfig:
    simplex_max_size: int = SIMPLEX_MAX_SIZE
    enumeration_max_size: int = ENUMERATION_MAX_SIZE
    value_tol: float = DEFAULT_VALUE_TOL

    @classmethod
    def from_config(cls, config: dict) -> 'OracleConfig':
        oracle = config.get('oracle', {}) or {}
        return cls(
            simplex_max_size=oracle.get('simplex_max_size', SIMPLEX_MAX_SIZE),
            enumeration_max_size=oracle.get('enumeration_max_size', ENUMERATION_MAX_SIZE),
            value_tol=oracle.get('value_tol', DEFAULT_VALUE_TOL),
        )


@dataclass
class OracleVerdict:
    """Combined answer of every oracle that accepted the instance."""
    result: OracleResult
    votes: list[OracleResult] = field(default_factory=list)
    disagreement: str = ''

    @property
    def agreed(self) -> bool:
        return not self.disagreement


def _same_value(lp: LinearProgram, a, b, tol) -> bool:
    if lp.field.exact:
        return a == b
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def oracle_solve(lp: LinearProgram, cfg: OracleConfig | None = None) -> OracleVerdict:
    """Solve with the simplex oracle and, when small enough, basis enumeration.

    Raises OracleSizeError when neither oracle accepts the instance.
    """
    cfg = cfg or OracleConfig()
    votes = []
    for solver, limit in ((simplex_solve, cfg.simplex_max_size),
                          (enumeration_solve, cfg.enumeration_max_size)):
        try:
            votes.append(solver(lp, limit))
        except OracleSizeError as e:
            logger.debug(f"Oracle skipped: {e}")
    if not votes:
        raise OracleSizeError(f"no oracle accepts k+n = {lp.k + lp.n}")

    verdict = OracleVerdict(votes[0], votes)
    for other in votes[1:]:
        if other.status is not votes[0].status:
            verdict.disagreement = (f"{votes[0].method} says {votes[0].status.value}, "
                                    f"{other.method} says {other.status.value}")
        elif other.optimal and not _same_value(lp, votes[0].value, other.value, cfg.value_tol):
            verdict.disagreement = (f"{votes[0].method} value {votes[0].value}, "
                                    f"{other.method} value {other.value}")
    if verdict.disagreement:
        logger.warning(f"Oracles disagree: {verdict.disagreement}")
    return verdict


def cross_check(lp: LinearProgram, outcome: SolveOutcome, cfg: OracleConfig | None = None,
                instance: str = 'input', seed: int | None = None,
                oracle: bool = True) -> list[Finding]:
    """Findings for one solve; an empty list means the outcome checks out.

    ``lp`` must be in the arithmetic the solve used. With ``oracle=False``
    only the solve itself is inspected (breakdowns, iteration bound, ratios).
    """
    cfg = cfg or OracleConfig()
    findings = []

    def report(category: FindingCategory, check: str, **details):
        findings.append(Finding(instance, category, {'check': check, **details}, seed))

    size = lp.k + lp.n
    if outcome.kind is OutcomeKind.BREAKDOWN:
        report(FindingCategory.BREAKDOWN, 'breakdown', reason=outcome.reason,
               iterations=outcome.iterations)
    if outcome.kind is OutcomeKind.ITERATION_LIMIT or outcome.iterations > size:
        report(FindingCategory.ITERATION_BOUND, 'bound', iterations=outcome.iterations,
               bound=size, outcome=outcome.kind.value)

    ratio_notes = [n for n in outcome.trace.notes
                   if n.category == FindingCategory.RATIO_VIOLATION.value]
    if ratio_notes:
        report(FindingCategory.RATIO_VIOLATION, 'claim4',
               states=[{'iteration': n.iteration, 'ratios': n.detail} for n in ratio_notes])

    if not oracle:
        return findings

    try:
        verdict = oracle_solve(lp, cfg)
    except OracleSizeError as e:
        report(FindingCategory.UNVERIFIED, 'size', reason=str(e))
        return findings

    if not verdict.agreed:
        report(FindingCategory.ORACLE_DISAGREEMENT, 'oracles', reason=verdict.disagreement)

    expected = verdict.result
    if outcome.kind is OutcomeKind.OPTIMAL:
        if not expected.optimal:
            report(FindingCategory.ORACLE_DISAGREEMENT, 'status',
                   solver='optimal', oracle=expected.status.value)
        else:
            value = lp.objective(outcome.x)
            if not _same_value(lp, lp.field.scalar(value), expected.value, cfg.value_tol):
                report(FindingCategory.ORACLE_DISAGREEMENT, 'value',
                       solver=value, oracle=expected.value)
    elif outcome.kind is OutcomeKind.NO_SOLUTION:
        if expected.status is OracleStatus.OPTIMAL:
            report(FindingCategory.ORACLE_DISAGREEMENT, 'status',
                   solver='no_solution', oracle='optimal', value=expected.value)

    for f in findings:
        logger.warning(f"{instance}: {f.category.value} ({f.details.get('check')})")
    return findings
