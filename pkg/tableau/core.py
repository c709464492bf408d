"""
The live [M q] tableau and the operations that pivot it.

Rows and columns are numbered from 1 in every public method, matching
the column numbers reported in solve traces. Row k+n+1 is the "last row";
its sign is handled through ``last_row_negated`` rather than by
rewriting the stored entries.
"""

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from errors import IndexRangeError, LPError, NotFixableError, ZeroPivotError
from model.eq_system import EqSystem
from model.scalars import ScalarField
from modes import Phase

logger = logging.getLogger('cgjlp.tableau')


class StopKind(str, Enum):
    CONTINUE = "continue"
    SOLVED = "solved"
    NO_SOLUTION = "no_solution"


@dataclass(frozen=True)
class StopStatus:
    kind: StopKind
    evidence_row: int | None = None

    @property
    def terminal(self) -> bool:
        return self.kind is not StopKind.CONTINUE


@dataclass
class PivotRecord:
    iteration: int
    phase: Phase | None
    column: int
    pivot_row: int
    pre_q_last_sign: int
    row_fixed: bool = False
    reversal: bool = False


@dataclass
class Note:
    """Something worth reporting that did not stop the solve."""
    iteration: int
    category: str
    detail: str


class EqTableau:
    """Augmented matrix [M q] with basis and complement bookkeeping."""

    def __init__(self, T: np.ndarray, k: int, n: int, field: ScalarField):
        self.T = T
        self.k = k
        self.n = n
        self.field = field
        self.basic_of_row: list[int | None] = [None] * (k + n)
        self.majorp_history: list[int] = []
        self.last_row_negated = False
        self.pivot_log: list[PivotRecord] = []
        self.notes: list[Note] = []
        self.iteration = 0

    # -- shape -------------------------------------------------------------

    @property
    def size(self) -> int:
        return self.k + self.n

    @property
    def num_columns(self) -> int:
        return 2 * self.size

    @property
    def q(self) -> np.ndarray:
        return self.T[:, -1]

    @property
    def M(self) -> np.ndarray:
        return self.T[:, :-1]

    @property
    def q_last(self):
        return self.T[self.size, -1]

    def last_row(self, oriented: bool = True) -> np.ndarray:
        """Row k+n+1 over the M columns, sign-adjusted when ``oriented``."""
        row = self.T[self.size, :-1]
        if oriented and self.last_row_negated:
            return -row
        return row.copy()

    def copy(self) -> 'EqTableau':
        other = EqTableau(self.T.copy(), self.k, self.n, self.field)
        other.basic_of_row = list(self.basic_of_row)
        other.majorp_history = list(self.majorp_history)
        other.last_row_negated = self.last_row_negated
        other.iteration = self.iteration
        return other

    # -- complements -------------------------------------------------------

    def _check_column(self, j: int):
        if not 1 <= j <= self.num_columns:
            raise IndexRangeError(f"column {j} outside 1..{self.num_columns}")

    def complement_column(self, j: int) -> int:
        self._check_column(j)
        return j + self.size if j <= self.size else j - self.size

    def complement_row(self, j: int) -> int:
        self._check_column(j)
        return j if j <= self.size else j - self.size

    def basic_column(self, row: int) -> int:
        """Column currently basic in ``row``; the identity column if none was pivoted in."""
        col = self.basic_of_row[row - 1]
        return col if col is not None else row + self.size

    # -- pivoting ----------------------------------------------------------

    def gj_pivot(self, row: int, col: int, phase: Phase | None = None) -> PivotRecord:
        """Gauss-Jordan pivot on (row, col)."""
        self._check_column(col)
        if not 1 <= row <= self.size + 1:
            raise IndexRangeError(f"row {row} outside 1..{self.size + 1}")
        r, c = row - 1, col - 1
        T = self.T
        pivot = T[r, c]
        if self.field.is_zero(pivot):
            raise ZeroPivotError(row, col)

        pre_sign = self.field.sign(self.q_last)
        T[r, :] = T[r, :] / pivot
        for i in range(T.shape[0]):
            if i != r and T[i, c] != 0:
                T[i, :] = T[i, :] - T[i, c] * T[r, :]
        if not self.field.exact:
            T[:, c] = 0.0
            T[r, c] = 1.0

        if row <= self.size:
            self.basic_of_row[r] = col
        record = PivotRecord(self.iteration, phase, col, row, pre_sign)
        self.pivot_log.append(record)
        logger.debug(f"itn {self.iteration} {phase.value if phase else 'GJ'}: "
                     f"pivot column {col} at row {row}")
        return record

    def complementary_pivot(self, col: int, phase: Phase | None = None) -> PivotRecord:
        """Pivot at (complement_row(col), col), row-fixing first if the entry is zero."""
        row = self.complement_row(col)
        fixed = False
        if self.field.is_zero(self.T[row - 1, col - 1]):
            try:
                fixed = self.row_fix_for_pivot(col)
            except NotFixableError as e:
                raise ZeroPivotError(row, col, 'row-fix impossible') from e
        record = self.gj_pivot(row, col, phase)
        record.row_fixed = fixed
        if self.complement_column(col) in self.majorp_history:
            record.reversal = True
            logger.info(f"itn {self.iteration}: column {col} reverses earlier "
                        f"MajorP selection {self.complement_column(col)}")
        return record

    def row_fix_for_pivot(self, col: int) -> bool:
        """Add the last row to row complement_row(col) when the pivot entry is zero.

        Returns False (and leaves the tableau alone) when the entry is
        already nonzero.
        """
        row = self.complement_row(col)
        r, c = row - 1, col - 1
        if not self.field.is_zero(self.T[r, c]):
            return False
        if self.field.is_zero(self.T[self.size, c]):
            raise NotFixableError(row, col)
        self.T[r, :] = self.T[r, :] + self.T[self.size, :]
        logger.debug(f"itn {self.iteration}: added last row to row {row} "
                     f"to enable pivot in column {col}")
        return True

    # -- tests -------------------------------------------------------------

    def check_stop(self) -> StopStatus:
        fld = self.field
        q = self.q
        q_last = self.q_last
        if fld.is_zero(q_last) and not any(fld.is_negative(v) for v in q[:self.size]):
            return StopStatus(StopKind.SOLVED)
        if not fld.is_zero(q_last):
            row = self.T[self.size, :-1]
            if q_last < 0:
                row = -row
            if not any(fld.is_positive(v) for v in row):
                return StopStatus(StopKind.NO_SOLUTION, evidence_row=self.size + 1)
        return StopStatus(StopKind.CONTINUE)

    def claim4_ratios(self) -> list[tuple[int, object]]:
        """Last-row to q ratios over rows with nonzero q.

        For row i the numerator is the last-row entry in column i, or in
        column k+n+i when the former is zero. Rows where both are zero
        are skipped.
        """
        fld = self.field
        if not fld.is_zero(self.q_last):
            raise LPError(f"ratios need q_{self.size + 1} = 0, got {self.q_last}")
        last = self.T[self.size]
        ratios = []
        for i in range(1, self.size + 1):
            qi = self.T[i - 1, -1]
            if fld.is_zero(qi):
                continue
            num = last[i - 1]
            if fld.is_zero(num):
                num = last[i - 1 + self.size]
            if fld.is_zero(num):
                logger.debug(f"itn {self.iteration}: no ratio for row {i}")
                continue
            ratios.append((i, num / qi))
        return ratios

    def is_unit_column(self, col: int, row: int) -> bool:
        fld = self.field
        column = self.T[:, col - 1]
        return all(fld.is_zero(v - (1 if i == row - 1 else 0)) for i, v in enumerate(column))


def initialize(eq: EqSystem) -> EqTableau:
    """Add the last row of [M q] to every other row."""
    T = np.hstack([eq.M, eq.q.reshape(-1, 1)])
    size = eq.size
    T[:size, :] = T[:size, :] + T[size, :]
    logger.debug(f"Initialized {T.shape[0]}x{T.shape[1]} tableau")
    return EqTableau(T, eq.k, eq.n, eq.field)
