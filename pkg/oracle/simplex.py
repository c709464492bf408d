"""
Reference solver: two-phase tableau simplex with Bland's rule.

Works over the same scalars as the LinearProgram it is given, so in
rational mode every answer is exact.
"""

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from errors import OracleSizeError
from model.problem import LinearProgram

logger = logging.getLogger('cgjlp.oracle')

DEFAULT_MAX_SIZE = 20


class OracleStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass
class OracleResult:
    status: OracleStatus
    method: str
    x: list | None = None
    y: list | None = None
    value: object = None

    @property
    def optimal(self) -> bool:
        return self.status is OracleStatus.OPTIMAL


class BlandSimplex:
    """Tableau simplex on max f^T x, Ax + s = b, x, s >= 0.

    Phase 1 uses a single artificial column a (Ax + s - a*1 = b) and
    maximizes -a. Entering and leaving variables follow Bland's
    smallest-index rule.
    """

    def __init__(self, lp: LinearProgram, max_size: int = DEFAULT_MAX_SIZE):
        if lp.k + lp.n > max_size:
            raise OracleSizeError(f"simplex oracle limited to k+n <= {max_size}, got {lp.k + lp.n}")
        self.lp = lp
        self.fld = lp.field
        k, n = lp.k, lp.n
        self.k, self.n = k, n
        self.art = n + k
        self.width = n + k + 1
        T = self.fld.zeros((k, self.width + 1))
        T[:, :n] = lp.A
        T[:, n:n + k] = self.fld.identity(k)
        for i in range(k):
            T[i, self.art] = -self.fld.one
        T[:, -1] = lp.b
        self.T = T
        self.basis = [n + i for i in range(k)]
        self.pivots = 0

    def _pivot(self, r: int, c: int):
        T = self.T
        T[r, :] = T[r, :] / T[r, c]
        for i in range(self.k):
            if i != r and T[i, c] != 0:
                T[i, :] = T[i, :] - T[i, c] * T[r, :]
        self.basis[r] = c
        self.pivots += 1

    def _reduced_costs(self, cost: np.ndarray) -> np.ndarray:
        cb = np.array([cost[j] for j in self.basis], dtype=cost.dtype)
        return cost - cb.dot(self.T[:, :self.width])

    def _optimize(self, cost: np.ndarray, allowed: list[int]) -> bool:
        """Bland's rule primal simplex; False when the objective is unbounded."""
        fld = self.fld
        while True:
            reduced = self._reduced_costs(cost)
            entering = next((j for j in allowed if fld.is_positive(reduced[j])), None)
            if entering is None:
                return True
            rows = [(self.T[i, -1] / self.T[i, entering], self.basis[i], i)
                    for i in range(self.k) if fld.is_positive(self.T[i, entering])]
            if not rows:
                return False
            _, _, leave = min(rows)
            self._pivot(leave, entering)

    def _phase_one(self) -> bool:
        """Drive the artificial column to zero; False when infeasible."""
        fld = self.fld
        rhs = self.T[:, -1]
        worst = min(range(self.k), key=lambda i: (rhs[i], i))
        if not fld.is_negative(rhs[worst]):
            return True
        self._pivot(worst, self.art)
        cost = fld.zeros(self.width)
        cost[self.art] = -fld.one
        self._optimize(cost, list(range(self.width)))

        if self.art in self.basis:
            r = self.basis.index(self.art)
            if fld.is_positive(self.T[r, -1]):
                return False
            col = next(j for j in range(self.art) if not fld.is_zero(self.T[r, j]))
            self._pivot(r, col)
        return True

    def solve(self) -> OracleResult:
        fld = self.fld
        lp = self.lp
        if not self._phase_one():
            logger.debug(f"Simplex oracle: infeasible after {self.pivots} pivots")
            return OracleResult(OracleStatus.INFEASIBLE, 'simplex')

        cost = fld.zeros(self.width)
        cost[:self.n] = lp.f
        if not self._optimize(cost, list(range(self.art))):
            logger.debug(f"Simplex oracle: unbounded after {self.pivots} pivots")
            return OracleResult(OracleStatus.UNBOUNDED, 'simplex')

        values = [fld.zero] * self.width
        for i, j in enumerate(self.basis):
            values[j] = self.T[i, -1]
        x = values[:self.n]
        reduced = self._reduced_costs(cost)
        y = [-reduced[self.n + i] for i in range(self.k)]
        value = lp.objective(x)
        logger.debug(f"Simplex oracle: optimal value {value} after {self.pivots} pivots")
        return OracleResult(OracleStatus.OPTIMAL, 'simplex', x, y, value)


def simplex_solve(lp: LinearProgram, max_size: int = DEFAULT_MAX_SIZE) -> OracleResult:
    return BlandSimplex(lp, max_size).solve()
