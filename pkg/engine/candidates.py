"""Candidate column lists for MinorP and MajorP instances."""
from dataclasses import dataclass

from modes import Ordering
from tableau.core import EqTableau


@dataclass
class CandidateList:
    """Columns with a positive (oriented) last-row entry, in selection order.

    Columns 1..k+n come before columns k+n+1..2(k+n). Within each tier the
    entries are sorted by value in ``ordering``; equal values go to the
    lower column index.
    """
    columns: list[int]
    ordering: Ordering
    cursor: int = 0

    def __len__(self) -> int:
        return len(self.columns)

    def __iter__(self):
        return iter(self.columns)

    @property
    def exhausted(self) -> bool:
        return self.cursor >= len(self.columns)

    def next(self) -> int | None:
        if self.exhausted:
            return None
        col = self.columns[self.cursor]
        self.cursor += 1
        return col


def build_candidates(tab: EqTableau, ordering: Ordering) -> CandidateList:
    row = tab.last_row(oriented=True)
    positive = [(j, row[j - 1]) for j in range(1, tab.num_columns + 1)
                if tab.field.is_positive(row[j - 1])]

    if ordering is Ordering.DESCENDING:
        def key(item):
            return (-item[1], item[0])
    else:
        def key(item):
            return (item[1], item[0])

    low = sorted((c for c in positive if c[0] <= tab.size), key=key)
    high = sorted((c for c in positive if c[0] > tab.size), key=key)
    return CandidateList([j for j, _ in low + high], ordering)
