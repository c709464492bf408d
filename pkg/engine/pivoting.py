"""
MinorP, MajorP and finalizing pivots.

Each instance returns either the PivotRecord of the pivot that stands as
its selection, or a Terminal when the instance ended the solve.
"""

import logging
from dataclasses import dataclass
from enum import Enum

from errors import SignInconsistencyError, ZeroPivotError
from engine.candidates import CandidateList, build_candidates
from modes import FindingCategory, Ordering, Phase
from tableau.core import EqTableau, Note, PivotRecord, StopKind

logger = logging.getLogger('cgjlp.engine')


class TerminalKind(str, Enum):
    SOLVED = "solved"
    NO_SOLUTION = "no_solution"
    BREAKDOWN = "breakdown"


@dataclass(frozen=True)
class Terminal:
    kind: TerminalKind
    reason: str = ''


FINALIZE_EXHAUSTED = 'finalize-exhausted'


def _note(tab: EqTableau, category: FindingCategory | str, detail: str):
    tab.notes.append(Note(tab.iteration, str(getattr(category, 'value', category)), detail))


def _orient_minorp(tab: EqTableau) -> None:
    """Set the last-row sign so rows with negative q see positive last-row entries.

    All ratios should share one value. Unequal values of one sign are
    noted and the solve goes on; mixed signs are a breakdown in float
    mode, and in rational mode are noted and resolved by the first row
    with negative q.
    """
    fld = tab.field
    ratios = tab.claim4_ratios()
    if not ratios:
        raise SignInconsistencyError("no last-row ratio available at a MinorP state")

    values = [r for _, r in ratios]
    if any(not fld.same_value(values[0], v) for v in values[1:]):
        detail = ', '.join(f"row {i}: {r}" for i, r in ratios)
        logger.warning(f"itn {tab.iteration}: unequal last-row ratios ({detail})")
        _note(tab, FindingCategory.RATIO_VIOLATION, detail)

    signs = {fld.sign(v) for v in values} - {0}
    if len(signs) > 1:
        if not fld.exact:
            raise SignInconsistencyError(
                f"mixed ratio signs at iteration {tab.iteration}: {ratios}")
        negative_rows = [i for i in range(1, tab.size + 1) if fld.is_negative(tab.q[i - 1])]
        by_row = dict(ratios)
        anchor = next((by_row[i] for i in negative_rows if i in by_row), None)
        if anchor is None:
            raise SignInconsistencyError(
                f"mixed ratio signs and no ratio on a negative row: {ratios}")
        _note(tab, FindingCategory.RATIO_VIOLATION, f"mixed ratio signs: {ratios}")
        tab.last_row_negated = anchor > 0
        return
    tab.last_row_negated = values[0] > 0


def _select(tab: EqTableau, candidates: CandidateList, phase: Phase) -> int | None:
    """First candidate that is not the complement of a MajorP selection."""
    while not candidates.exhausted:
        col = candidates.next()
        if tab.complement_column(col) in tab.majorp_history:
            logger.debug(f"itn {tab.iteration} {phase.value}: skip column {col}, "
                         f"complement of MajorP selection {tab.complement_column(col)}")
            continue
        return col
    return None


def run_minorp(tab: EqTableau, cfg=None) -> PivotRecord | Terminal:
    """One MinorP instance: q_last = 0 and some q_i < 0."""
    try:
        _orient_minorp(tab)
    except SignInconsistencyError as e:
        return Terminal(TerminalKind.BREAKDOWN, str(e))

    candidates = build_candidates(tab, Ordering.ASCENDING)
    if not len(candidates):
        return Terminal(TerminalKind.BREAKDOWN, 'MinorP found no column with positive last-row entry')

    col = _select(tab, candidates, Phase.MINORP)
    if col is None:
        return run_finalize(tab, candidates, cfg, Phase.MINORP)
    return tab.complementary_pivot(col, Phase.MINORP)


def run_majorp(tab: EqTableau, cfg=None) -> PivotRecord | Terminal:
    """One MajorP instance: q_last != 0."""
    tab.last_row_negated = tab.q_last < 0
    candidates = build_candidates(tab, Ordering.DESCENDING)
    if not len(candidates):
        return Terminal(TerminalKind.NO_SOLUTION)

    col = _select(tab, candidates, Phase.MAJORP)
    if col is None:
        return run_finalize(tab, candidates, cfg, Phase.MAJORP)
    tab.majorp_history.append(col)
    record = tab.complementary_pivot(col, Phase.MAJORP)
    if not tab.field.is_zero(tab.q_last):
        logger.warning(f"itn {tab.iteration}: q_last = {tab.q_last} after MajorP pivot")
        _note(tab, 'majorp-residual', f"q_last = {tab.q_last} after column {col}")
    return record


def run_finalize(tab: EqTableau, candidates: CandidateList, cfg=None,
                 instance: Phase = Phase.MAJORP) -> PivotRecord | Terminal:
    """Pivot the listed columns in order until one ends the solve.

    A pivot that moves the tableau into the other instance type (q_last
    turning nonzero after MinorP, or zero after MajorP) hands control
    back to the solve loop as that instance's selection.
    """
    columns = list(candidates)
    logger.info(f"itn {tab.iteration} {instance.value}: finalizing over columns {columns}")
    for col in columns:
        try:
            record = tab.complementary_pivot(col, Phase.FINALIZE)
        except ZeroPivotError as e:
            logger.warning(f"itn {tab.iteration}: finalize skips column {col}: {e}")
            _note(tab, 'finalize-skip', f"column {col}: {e}")
            continue
        if instance is Phase.MAJORP:
            tab.majorp_history.append(col)

        status = tab.check_stop()
        if status.kind is StopKind.SOLVED:
            return Terminal(TerminalKind.SOLVED)
        if status.kind is StopKind.NO_SOLUTION:
            return Terminal(TerminalKind.NO_SOLUTION)

        q_last_zero = tab.field.is_zero(tab.q_last)
        if (instance is Phase.MINORP) != q_last_zero:
            return record
    return Terminal(TerminalKind.BREAKDOWN, FINALIZE_EXHAUSTED)
