"""The primal-dual system Mz = q built from a LinearProgram."""
import logging
from dataclasses import dataclass

import numpy as np

from model.problem import LinearProgram
from model.scalars import ScalarField

logger = logging.getLogger('cgjlp.model')


@dataclass
class EqSystem:
    """M is (k+n+1) x 2(k+n), q has k+n+1 entries.

    Column layout of z: y (k duals), x (n primals), primal slacks (k),
    dual slacks (n). Column j and column k+n+j form a complementary pair.
    """
    M: np.ndarray
    q: np.ndarray
    k: int
    n: int
    field: ScalarField

    @property
    def size(self) -> int:
        return self.k + self.n

    def skew_block(self) -> np.ndarray:
        """Columns 1..k+n of M with q appended as the last column."""
        return np.hstack([self.M[:, :self.size], self.q.reshape(-1, 1)])

    def is_skew_symmetric(self) -> bool:
        S = self.skew_block()
        return all(self.field.is_zero(S[i, j] + S[j, i])
                   for i in range(S.shape[0]) for j in range(S.shape[1]))


def build_eq(lp: LinearProgram) -> EqSystem:
    """Assemble the block system

        [  0    A   I_k  0  ]        [  b ]
        [ -A^T  0   0   I_n ]  z  =  [ -f ]
        [ -b^T  f^T 0    0  ]        [  0 ]
    """
    k, n = lp.k, lp.n
    size = k + n
    fld = lp.field

    M = fld.zeros((size + 1, 2 * size))
    M[:k, k:size] = lp.A
    M[:k, size:size + k] = fld.identity(k)
    M[k:size, :k] = -lp.A.T
    M[k:size, size + k:] = fld.identity(n)
    M[size, :k] = -lp.b
    M[size, k:size] = lp.f

    q = fld.zeros(size + 1)
    q[:k] = lp.b
    q[k:size] = -lp.f

    logger.debug(f"Built Eq system: k={k}, n={n}, M is {M.shape[0]}x{M.shape[1]}")
    return EqSystem(M, q, k, n, fld)
