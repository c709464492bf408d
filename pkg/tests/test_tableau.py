#!/usr/bin/env python3
"""Tests for the [M q] tableau: initialization, pivots, row-fix, stop tests and ratios.

Expected tableaux are the worked illustration (max -x1 + x2,
x1 + x2 <= 10, -x1 <= -5) and the small LP max 2x1 + x2,
x1 + x2 <= 5, x1 <= 2 used to show the constant-ratio property.
"""

import logging
import sys
from fractions import Fraction as F
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))
from errors import IndexRangeError, LPError, NotFixableError, ZeroPivotError
from model.eq_system import build_eq
from model.problem import LinearProgram
from model.scalars import ScalarField
from modes import Arithmetic, Phase
from problems import load_example
from tableau.core import EqTableau, StopKind, initialize
from tableau.snapshot import (
    format_matrix, format_scalar, format_vector, max_abs_difference, parse_matrix,
)

RATIONAL = ScalarField(Arithmetic.RATIONAL)

SEC2_INITIAL = [
    [-10, 5, 0, 2, 1, 0, 0, 0, 10],
    [-10, 5, -2, 1, 0, 1, 0, 0, -5],
    [-11, 6, -1, 1, 0, 0, 1, 0, 1],
    [-11, 5, -1, 1, 0, 0, 0, 1, -1],
    [-10, 5, -1, 1, 0, 0, 0, 0, 0],
]
SEC2_SOLUTION = [1, 2, 5, 5, 0, 0, 0, 0]

CLAIM_INITIAL = [
    [-5, -2, 3, 2, 1, 0, 0, 0, 5],
    [-5, -2, 3, 1, 0, 1, 0, 0, 2],
    [-6, -3, 2, 1, 0, 0, 1, 0, -2],
    [-6, -2, 2, 1, 0, 0, 0, 1, -1],
    [-5, -2, 2, 1, 0, 0, 0, 0, 0],
]
CLAIM_SOLUTION = [1, 1, 2, 3, 0, 0, 0, 0]


def sec2_tableau() -> EqTableau:
    return initialize(build_eq(load_example('sec2')))


def claim_tableau() -> EqTableau:
    return initialize(build_eq(load_example('appendix_a')))


def satisfies(tab: EqTableau, z) -> bool:
    """T[:, :-1] z == T[:, -1] exactly."""
    z = np.array([F(v) for v in z], dtype=object)
    return all(lhs == rhs for lhs, rhs in zip(tab.M.dot(z), tab.q))


class TestInitialize:
    """Adding the last row to every other row."""

    def test_numerical_illustration(self):
        """Initial tableau of the worked illustration."""
        tab = sec2_tableau()
        assert tab.T.tolist() == SEC2_INITIAL
        assert tab.basic_of_row == [None] * 4
        assert tab.majorp_history == []

    def test_claim_lp(self):
        """Initial tableau of the constant-ratio LP."""
        assert claim_tableau().T.tolist() == CLAIM_INITIAL

    def test_preprocessing_lp(self):
        """Initial rows of the preprocessing LP."""
        tab = initialize(build_eq(load_example('preprocessing')))
        assert list(tab.T[0]) == [-10, 1, 3, 0, 1, 0, 0, 0, 10]
        assert list(tab.T[4]) == [-10, 1, 2, -1, 0, 0, 0, 0, 0]

    def test_zero_last_row_is_identity_transformation(self):
        """A zero last row leaves M unchanged."""
        lp = LinearProgram([0], [[1]], [0], RATIONAL)
        eq = build_eq(lp)
        tab = initialize(eq)
        assert tab.M.tolist() == eq.M.tolist()

    def test_initial_basis_reads_identity_columns(self):
        """With no pivots, each row reads its identity column."""
        tab = sec2_tableau()
        assert [tab.basic_column(r) for r in range(1, 5)] == [5, 6, 7, 8]
        assert all(tab.is_unit_column(r + 4, r) for r in range(1, 5))


class TestComplements:
    """Column pairing j <-> j +/- (k+n)."""

    def test_pairs(self):
        """Columns pair with j +/- (k+n)."""
        tab = sec2_tableau()
        assert tab.complement_column(1) == 5
        assert tab.complement_column(5) == 1
        assert tab.complement_column(8) == 4
        assert tab.complement_row(7) == 3
        assert tab.complement_row(2) == 2

    def test_out_of_range(self):
        """Column indices outside 1..2(k+n) are rejected."""
        tab = sec2_tableau()
        with pytest.raises(IndexRangeError):
            tab.complement_column(0)
        with pytest.raises(IndexRangeError):
            tab.complement_column(9)


class TestPivoting:
    """The worked sequence: initial -> Z1 -> P1 -> Z2 -> P2."""

    def test_z1(self):
        """The first MinorP pivot gives Z1."""
        tab = sec2_tableau()
        record = tab.complementary_pivot(4, Phase.MINORP)
        assert (record.column, record.pivot_row) == (4, 4)
        assert not record.row_fixed
        assert list(tab.T[4]) == [1, 0, 0, 0, 0, 0, 0, -1, 1]
        assert list(tab.q) == [12, -4, 2, -1, 1]
        assert tab.basic_of_row[3] == 4

    def test_p1(self):
        """The first MajorP pivot gives P1."""
        tab = sec2_tableau()
        tab.complementary_pivot(4, Phase.MINORP)
        tab.complementary_pivot(1, Phase.MAJORP)
        assert list(tab.T[0]) == [1, F(-5, 12), F(1, 6), 0, F(1, 12), 0, 0, F(-1, 6), 1]
        assert list(tab.T[4]) == [0, F(5, 12), F(-1, 6), 0, F(-1, 12), 0, 0, F(-5, 6), 0]

    def test_z2_and_p2(self):
        """The second iteration reaches the solved tableau."""
        tab = sec2_tableau()
        for col in (4, 1, 2):
            tab.complementary_pivot(col)
        assert list(tab.T[1]) == [0, 1, F(-14, 5), 0, F(-1, 5), F(12, 5), 0, -2, -12]
        assert list(tab.T[4]) == [0, 0, 1, 0, 0, -1, 0, 0, 5]
        tab.complementary_pivot(3)
        assert list(tab.q) == [1, 2, 5, 5, 0]
        assert tab.check_stop().kind is StopKind.SOLVED

    def test_row_equivalence_preserved(self):
        """Every state keeps the solution of the original system."""
        tab = sec2_tableau()
        assert satisfies(tab, SEC2_SOLUTION)
        for col in (4, 1, 2, 3):
            tab.complementary_pivot(col)
            assert satisfies(tab, SEC2_SOLUTION)

    def test_pivot_on_unit_column_is_idempotent(self):
        """Pivoting on a unit column changes nothing."""
        tab = sec2_tableau()
        before = tab.T.copy()
        tab.gj_pivot(1, 5)
        assert tab.T.tolist() == before.tolist()

    def test_zero_pivot(self):
        """A zero pivot entry is an error."""
        tab = sec2_tableau()
        with pytest.raises(ZeroPivotError):
            tab.gj_pivot(1, 3)

    def test_float_pivot_column_is_exact_unit(self):
        """Float pivots leave an exact unit column."""
        lp = load_example('example01', Arithmetic.FLOAT)
        tab = initialize(build_eq(lp))
        tab.complementary_pivot(7)
        column = tab.T[:, 6]
        assert column[6] == 1.0
        assert np.count_nonzero(column) == 1

    def test_pivot_log(self):
        """Each pivot is logged with its phase and q_last sign."""
        tab = sec2_tableau()
        tab.iteration = 1
        tab.complementary_pivot(4, Phase.MINORP)
        tab.complementary_pivot(1, Phase.MAJORP)
        assert [(p.iteration, p.phase, p.column) for p in tab.pivot_log] == [
            (1, Phase.MINORP, 4), (1, Phase.MAJORP, 1)]
        assert tab.pivot_log[0].pre_q_last_sign == 0
        assert tab.pivot_log[1].pre_q_last_sign == 1

    def test_reversal_flag(self):
        """Pivoting the complement of a MajorP pick flags a reversal."""
        tab = sec2_tableau()
        tab.majorp_history.append(1)
        record = tab.complementary_pivot(5)
        assert record.reversal

    def test_reversal_logged_at_info(self, caplog):
        """Reversals are routine: logged at INFO, never as warnings."""
        caplog.set_level(logging.DEBUG, logger='cgjlp.tableau')
        tab = sec2_tableau()
        tab.majorp_history.append(1)
        tab.complementary_pivot(5)
        reversals = [r for r in caplog.records if 'reverses earlier' in r.getMessage()]
        assert [r.levelno for r in reversals] == [logging.INFO]
        assert not [r for r in caplog.records if r.levelno >= logging.WARNING]


class TestRowFix:
    """Adding the last row when the complementary pivot entry is zero."""

    def test_fix_after_two_pivots(self):
        """Row-fix makes the zero pivot entry nonzero."""
        tab = claim_tableau()
        tab.complementary_pivot(4)
        tab.complementary_pivot(1)
        assert tab.T[2, 2] == 0
        assert tab.T[4, 2] == F(1, 7)
        assert tab.row_fix_for_pivot(3)
        assert tab.T[2, 2] == F(1, 7)

    def test_nonzero_entry_left_alone(self):
        """Row-fix does nothing when the entry is nonzero."""
        tab = claim_tableau()
        before = tab.T.copy()
        assert not tab.row_fix_for_pivot(4)
        assert tab.T.tolist() == before.tolist()

    def test_not_fixable(self):
        """A zero last-row entry cannot be fixed."""
        tab = EqTableau(RATIONAL.zeros((3, 5)), 1, 1, RATIONAL)
        with pytest.raises(NotFixableError):
            tab.row_fix_for_pivot(1)
        with pytest.raises(ZeroPivotError):
            tab.complementary_pivot(1)

    def test_complementary_pivot_fixes_automatically(self):
        """complementary_pivot row-fixes on its own."""
        tab = claim_tableau()
        tab.complementary_pivot(4)
        tab.complementary_pivot(1)
        record = tab.complementary_pivot(3)
        assert record.row_fixed
        assert satisfies(tab, CLAIM_SOLUTION)


class TestCheckStop:
    """Solved / NoSolution / Continue."""

    def test_initial_continues(self):
        """The initial tableau is not terminal."""
        assert sec2_tableau().check_stop().kind is StopKind.CONTINUE

    def test_z1_continues(self):
        """Z1 is not terminal."""
        tab = sec2_tableau()
        tab.complementary_pivot(4)
        status = tab.check_stop()
        assert status.kind is StopKind.CONTINUE
        assert not status.terminal

    def test_no_positive_last_row_entry(self):
        """A last row with no positive entry means no solution."""
        T = RATIONAL.zeros((5, 9))
        T[4, 0], T[4, 1], T[4, 8] = -1, -2, 3
        status = EqTableau(T, 2, 2, RATIONAL).check_stop()
        assert status.kind is StopKind.NO_SOLUTION
        assert status.evidence_row == 5
        assert status.terminal

    def test_negative_q_last_uses_negated_row(self):
        """With negative q_last the negated row decides."""
        T = RATIONAL.zeros((5, 9))
        T[4, 0], T[4, 8] = 1, -3
        assert EqTableau(T, 2, 2, RATIONAL).check_stop().kind is StopKind.NO_SOLUTION
        T[4, 0] = -1
        assert EqTableau(T, 2, 2, RATIONAL).check_stop().kind is StopKind.CONTINUE

    def test_nonnegative_q_with_nonzero_last_is_not_solved(self):
        """Nonnegative q is not solved while q_last is nonzero."""
        T = RATIONAL.zeros((3, 5))
        T[2, 0], T[2, 4] = 1, 1
        assert EqTableau(T, 1, 1, RATIONAL).check_stop().kind is StopKind.CONTINUE


class TestClaim4Ratios:
    """Last-row / q ratios along the constant-ratio illustration.

    The final ratio is -1/10 here; the printed illustration scales its
    last row by 10 and shows -1.
    """

    def test_initial_ratios(self):
        """All initial ratios are -1."""
        ratios = claim_tableau().claim4_ratios()
        assert [i for i, _ in ratios] == [1, 2, 3, 4]
        assert all(r == -1 for _, r in ratios)

    def test_after_two_pivots(self):
        """After two pivots every ratio is -1/7."""
        tab = claim_tableau()
        tab.complementary_pivot(4)
        tab.complementary_pivot(1)
        ratios = tab.claim4_ratios()
        assert len(ratios) == 4
        assert all(r == F(-1, 7) for _, r in ratios)

    def test_final_tableau(self):
        """The final tableau keeps equal ratios."""
        tab = claim_tableau()
        for col in (4, 1, 3, 2):
            tab.complementary_pivot(col)
        assert list(tab.T[4]) == [0, 0, 0, 0, F(-1, 10), F(-1, 10), F(-1, 5), F(-3, 10), 0]
        assert list(tab.q[:4]) == [1, 1, 2, 3]
        ratios = tab.claim4_ratios()
        assert len(ratios) == 4
        assert all(r == F(-1, 10) for _, r in ratios)

    def test_needs_zero_q_last(self):
        """Ratios need q_last = 0."""
        tab = sec2_tableau()
        tab.complementary_pivot(4)
        with pytest.raises(LPError):
            tab.claim4_ratios()


class TestSnapshots:
    """Four-decimal dumps of tableaux."""

    def test_format_scalar(self):
        """Scalars print at four decimals or exactly."""
        assert format_scalar(F(5, 12)) == "0.4167"
        assert format_scalar(F(-1, 10 ** 6)) == "0.0000"
        assert format_scalar(F(5, 12), 'full') == "5/12"
        assert format_scalar(0.5, 'full') == "0.5"

    def test_format_vector(self):
        """Vectors print as tuples."""
        assert format_vector([F(1), F(-1, 2)]) == "(1.0000, -0.5000)"

    def test_dump_reads_back(self):
        """A dumped tableau parses back within print precision."""
        tab = sec2_tableau()
        for col in (4, 1):
            tab.complementary_pivot(col)
        text = format_matrix(tab.T)
        assert max_abs_difference(tab.T, parse_matrix(text)) < 5e-5
        assert max_abs_difference(tab.T, parse_matrix("# P1\n" + text)) < 5e-5
