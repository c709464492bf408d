"""Exhaustive basis enumeration: a second, independent vote for small LPs."""
import logging
from itertools import combinations

import numpy as np

from errors import OracleSizeError
from model.problem import LinearProgram
from model.scalars import ScalarField
from oracle.simplex import OracleResult, OracleStatus

logger = logging.getLogger('cgjlp.oracle')

DEFAULT_MAX_SIZE = 12


def solve_square(B: np.ndarray, rhs: np.ndarray, fld: ScalarField) -> list | None:
    """Solve B w = rhs by Gauss-Jordan elimination; None when B is singular."""
    m = B.shape[0]
    aug = np.hstack([B, rhs.reshape(-1, 1)]).astype(B.dtype)
    for c in range(m):
        r = max(range(c, m), key=lambda i: abs(aug[i, c]))
        if fld.is_zero(aug[r, c]):
            return None
        if r != c:
            aug[[c, r]] = aug[[r, c]]
        aug[c, :] = aug[c, :] / aug[c, c]
        for i in range(m):
            if i != c and aug[i, c] != 0:
                aug[i, :] = aug[i, :] - aug[i, c] * aug[c, :]
    return list(aug[:, -1])


def basic_feasible_solutions(E: np.ndarray, rhs: np.ndarray, fld: ScalarField):
    """Yield every nonnegative basic solution of E w = rhs, w >= 0.

    E is m x N with full row rank; bases are visited in lexicographic
    order of their column sets.
    """
    m, N = E.shape
    for cols in combinations(range(N), m):
        w_b = solve_square(E[:, list(cols)], rhs, fld)
        if w_b is None or any(fld.is_negative(v) for v in w_b):
            continue
        w = [fld.zero] * N
        for j, v in zip(cols, w_b):
            w[j] = v
        yield w


class BasisEnumeration:
    """Best vertex of the primal and of the dual, found by brute force.

    The primal is Ax + s = b over (x, s) >= 0. Boundedness is decided on
    the dual side: A^T y - v = f over (y, v) >= 0 has a basic feasible
    solution exactly when the dual is feasible.
    """

    def __init__(self, lp: LinearProgram, max_size: int = DEFAULT_MAX_SIZE):
        if lp.k + lp.n > max_size:
            raise OracleSizeError(f"enumeration oracle limited to k+n <= {max_size}, got {lp.k + lp.n}")
        self.lp = lp

    def solve(self) -> OracleResult:
        lp = self.lp
        fld = lp.field
        k, n = lp.k, lp.n

        primal = np.hstack([lp.A, fld.identity(k)])
        best_x, best_value, count = None, None, 0
        for w in basic_feasible_solutions(primal, lp.b, fld):
            count += 1
            x = w[:n]
            value = lp.objective(x)
            if best_value is None or value > best_value + fld.epsilon:
                best_x, best_value = x, value
        if best_x is None:
            logger.debug("Enumeration oracle: no primal vertex, infeasible")
            return OracleResult(OracleStatus.INFEASIBLE, 'enumeration')

        dual = np.hstack([lp.A.T, -fld.identity(n)])
        best_y, best_dual = None, None
        for w in basic_feasible_solutions(dual, lp.f, fld):
            y = w[:k]
            value = sum((bi * yi for bi, yi in zip(lp.b, y)), fld.zero)
            if best_dual is None or value < best_dual - fld.epsilon:
                best_y, best_dual = y, value
        if best_y is None:
            logger.debug("Enumeration oracle: dual infeasible, primal unbounded")
            return OracleResult(OracleStatus.UNBOUNDED, 'enumeration')

        logger.debug(f"Enumeration oracle: optimal value {best_value} over {count} primal vertices")
        return OracleResult(OracleStatus.OPTIMAL, 'enumeration', best_x, best_y, best_value)


def enumeration_solve(lp: LinearProgram, max_size: int = DEFAULT_MAX_SIZE) -> OracleResult:
    return BasisEnumeration(lp, max_size).solve()
