"""
Seeded random LP instances and the batch runner that checks them.

Instance i of a suite with base seed S draws its data from
numpy.random.default_rng(S * 1_000_003 + i), so any single instance can
be regenerated from the seed recorded in its findings.
"""

import dataclasses
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from errors import LPError
from engine.solver import SolverConfig, solve
from findings import Finding, FindingsCollector
from model.problem import LinearProgram
from model.scalars import ScalarField
from modes import Arithmetic, FindingCategory
from oracle.cross_check import OracleConfig, cross_check

logger = logging.getLogger('cgjlp.suite')

SEED_STRIDE = 1_000_003


@dataclass
class SuiteConfig:
    count: int = 200
    seed: int = 42
    kmin: int = 2
    kmax: int = 5
    nmin: int = 2
    nmax: int = 5
    entry_low: int = -9
    entry_high: int = 9
    iteration_allowance: int = 3
    workers: int = 1
    oracle_check: bool = True

    @classmethod
    def from_config(cls, config: dict) -> 'SuiteConfig':
        suite = config.get('suite', {}) or {}
        low, high = suite.get('entry_range', [-9, 9])
        return cls(
            count=suite.get('count', 200),
            seed=suite.get('seed', 42),
            kmin=suite.get('kmin', 2),
            kmax=suite.get('kmax', 5),
            nmin=suite.get('nmin', 2),
            nmax=suite.get('nmax', 5),
            entry_low=low,
            entry_high=high,
            iteration_allowance=suite.get('iteration_allowance', 3),
            workers=suite.get('workers', 1),
        )


def instance_seed(base_seed: int, index: int) -> int:
    return base_seed * SEED_STRIDE + index


def generate_instance(seed: int, cfg: SuiteConfig | None = None) -> LinearProgram:
    """Dense integer LP; rows of A that come out all zero are redrawn."""
    cfg = cfg or SuiteConfig()
    rng = np.random.default_rng(seed)
    k = int(rng.integers(cfg.kmin, cfg.kmax + 1))
    n = int(rng.integers(cfg.nmin, cfg.nmax + 1))
    high = cfg.entry_high + 1
    A = rng.integers(cfg.entry_low, high, size=(k, n))
    for i in range(k):
        while not A[i].any():
            A[i] = rng.integers(cfg.entry_low, high, size=n)
    b = rng.integers(cfg.entry_low, high, size=k)
    f = rng.integers(cfg.entry_low, high, size=n)
    return LinearProgram(f.tolist(), A.tolist(), b.tolist(), ScalarField(Arithmetic.RATIONAL))


@dataclass
class InstanceReport:
    name: str
    seed: int
    k: int
    n: int
    outcome: str
    iterations: int
    findings: list[Finding] = field(default_factory=list)


@dataclass
class SuiteResult:
    reports: list[InstanceReport]
    collector: FindingsCollector
    elapsed: float

    @property
    def findings(self) -> list[Finding]:
        return self.collector.findings

    @property
    def clean(self) -> bool:
        return len(self.collector) == 0


def run_instance(index: int, suite: SuiteConfig, solver: SolverConfig,
                 oracle: OracleConfig) -> InstanceReport:
    seed = instance_seed(suite.seed, index)
    name = f"random-{index:04d}"
    lp = generate_instance(seed, suite).with_field(solver.field)
    cfg = solver
    if solver.max_iterations is None:
        cfg = dataclasses.replace(solver, max_iterations=suite.iteration_allowance * (lp.k + lp.n))
    try:
        outcome = solve(lp, cfg)
        findings = cross_check(lp, outcome, oracle, name, seed, oracle=suite.oracle_check)
        return InstanceReport(name, seed, lp.k, lp.n, outcome.kind.value, outcome.iterations, findings)
    except LPError as e:
        logger.error(f"{name}: {e}")
        finding = Finding(name, FindingCategory.BREAKDOWN, {'check': 'exception', 'reason': str(e)}, seed)
        return InstanceReport(name, seed, lp.k, lp.n, 'error', 0, [finding])


def run_suite(suite: SuiteConfig, solver: SolverConfig | None = None,
              oracle: OracleConfig | None = None) -> SuiteResult:
    """Solve and check ``suite.count`` instances; findings come back in instance order."""
    solver = solver or SolverConfig()
    oracle = oracle or OracleConfig()
    start = time.monotonic()
    logger.info(f"Random suite: {suite.count} instances, seed {suite.seed}, "
                f"k in {suite.kmin}..{suite.kmax}, n in {suite.nmin}..{suite.nmax}")

    def work(index: int) -> InstanceReport:
        return run_instance(index, suite, solver, oracle)

    with ThreadPoolExecutor(max_workers=max(1, suite.workers)) as pool:
        reports = list(pool.map(work, range(suite.count)))

    collector = FindingsCollector()
    for report in reports:
        collector.extend(report.findings)
    elapsed = time.monotonic() - start
    logger.info(f"Random suite done in {elapsed:.2f}s: {len(collector)} findings")
    return SuiteResult(reports, collector, elapsed)
