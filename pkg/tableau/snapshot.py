"""Plain-text tableau dumps: one row per line, fixed decimals."""
from fractions import Fraction

import numpy as np


def format_scalar(value, precision: int | str = 4) -> str:
    """Format one entry. ``precision='full'`` prints fractions or repr floats."""
    if precision == 'full':
        if isinstance(value, Fraction):
            return str(value)
        return repr(float(value))
    text = f"{float(value):.{int(precision)}f}"
    if float(text) == 0:
        text = f"{0.0:.{int(precision)}f}"
    return text


def format_vector(values, precision: int | str = 4) -> str:
    return '(' + ', '.join(format_scalar(v, precision) for v in values) + ')'


def format_matrix(T: np.ndarray, precision: int | str = 4) -> str:
    cells = [[format_scalar(v, precision) for v in row] for row in T]
    width = max(len(c) for row in cells for c in row)
    return '\n'.join(' '.join(c.rjust(width) for c in row) for row in cells) + '\n'


def parse_matrix(text: str) -> list[list[float]]:
    """Read a dump back as floats; blank lines and ``#`` comments are ignored."""
    rows = []
    for line in text.splitlines():
        line = line.split('#', 1)[0].strip()
        if line:
            rows.append([float(Fraction(tok)) for tok in line.split()])
    return rows


def max_abs_difference(T: np.ndarray, expected: list[list[float]]) -> float:
    """Largest entrywise gap between a tableau and a parsed dump."""
    if len(expected) != T.shape[0] or any(len(r) != T.shape[1] for r in expected):
        raise ValueError(f"shape mismatch: tableau {T.shape}, dump has {len(expected)} rows")
    return max(abs(float(T[i, j]) - expected[i][j])
               for i in range(T.shape[0]) for j in range(T.shape[1]))
