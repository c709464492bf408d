"""Exception hierarchy shared by every package."""


class LPError(Exception):
    """Root of all solver errors."""


class ValidationError(LPError):
    """Problem data is malformed or dimensions do not agree."""


class ParseError(LPError):
    """Input text could not be parsed.

    Paper-text errors carry a 1-based line and column; JSON errors carry
    the field path that failed (e.g. ``constraints[1].op``).
    """

    def __init__(self, message: str, line: int | None = None,
                 column: int | None = None, path: str | None = None):
        self.line = line
        self.column = column
        self.path = path
        where = ''
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else '')
        elif path:
            where = path
        super().__init__(f"{where}: {message}" if where else message)


class IndexRangeError(LPError):
    """Column or row index outside the tableau."""


class ZeroPivotError(LPError):
    def __init__(self, row: int, col: int, detail: str = ''):
        self.row = row
        self.col = col
        msg = f"zero pivot at row {row}, column {col}"
        super().__init__(f"{msg} ({detail})" if detail else msg)


class NotFixableError(LPError):
    """Pivot entry and last-row entry are both zero."""

    def __init__(self, row: int, col: int):
        self.row = row
        self.col = col
        super().__init__(f"row-fix impossible at row {row}, column {col}: "
                         f"last-row entry is zero")


class SignInconsistencyError(LPError):
    """Last-row ratios disagree in sign."""


class OracleSizeError(LPError):
    """Instance is larger than the reference oracle accepts."""
