"""Per-iteration trace of a solve, exported like the identified-columns tables."""
from dataclasses import dataclass, field

from modes import Phase
from tableau.core import Note, PivotRecord

NOT_AVAILABLE = 'n. a.'
HEADER = ('itn', 'minorp_col', 'majorp_col')


@dataclass
class TraceRow:
    iteration: int
    minorp: list[PivotRecord] = field(default_factory=list)
    majorp: list[PivotRecord] = field(default_factory=list)

    @staticmethod
    def _cell(records: list[PivotRecord]) -> str:
        if not records:
            return NOT_AVAILABLE
        return ','.join(str(r.column) for r in records)

    @property
    def minorp_col(self) -> int | None:
        return self.minorp[-1].column if self.minorp else None

    @property
    def majorp_col(self) -> int | None:
        return self.majorp[-1].column if self.majorp else None

    def cells(self) -> tuple[str, str, str]:
        return str(self.iteration), self._cell(self.minorp), self._cell(self.majorp)


@dataclass
class SolveTrace:
    k: int
    n: int
    rows: list[TraceRow] = field(default_factory=list)
    notes: list[Note] = field(default_factory=list)
    snapshots: list[tuple[str, str]] = field(default_factory=list)

    def start_iteration(self, iteration: int) -> TraceRow:
        row = TraceRow(iteration)
        self.rows.append(row)
        return row

    @property
    def iterations(self) -> int:
        return len(self.rows)

    def column_pairs(self) -> list[tuple[int | None, int | None]]:
        """(MinorP column, MajorP column) per iteration; None where no pivot ran."""
        return [(r.minorp_col, r.majorp_col) for r in self.rows]

    @property
    def pivots(self) -> list[PivotRecord]:
        return [p for r in self.rows for p in r.minorp + r.majorp]

    @property
    def reversals(self) -> list[PivotRecord]:
        return [p for p in self.pivots if p.reversal]

    @property
    def finalize_pivots(self) -> list[PivotRecord]:
        return [p for p in self.pivots if p.phase is Phase.FINALIZE]

    def to_table(self) -> str:
        lines = ['\t'.join(HEADER)]
        lines.extend('\t'.join(r.cells()) for r in self.rows)
        return '\n'.join(lines) + '\n'
