"""
Paper-text problem format.

Mirrors the (f^T / A | b) block used to print examples:

    # optional comments
    sense: max            optional, default max
    free: 2 3             optional, 1-based indices of free variables
    2 7 6 4               objective row
    1 1 0.83 0.5 | 65     constraint rows, rhs after '|'
    1 3 1 0 | = 9         optional relation before the rhs (<=, =, >=)

Numbers may be integers, decimals or ratios such as 1/3.
"""

import logging
import re

from errors import ParseError, ValidationError
from model.problem import Constraint, Domain, GeneralProblem, Relation, Sense
from model.scalars import format_exact, parse_scalar

logger = logging.getLogger('cgjlp.ingest')

_TOKEN = re.compile(r'\S+')
_HEADER = re.compile(r'^\s*(sense|free)\s*:(.*)$', re.IGNORECASE)


def _tokens(text: str, offset: int = 0) -> list[tuple[str, int]]:
    """Whitespace-separated tokens with their 1-based column."""
    return [(m.group(), m.start() + offset + 1) for m in _TOKEN.finditer(text)]


def _number(token: str, line: int, column: int):
    try:
        return parse_scalar(token)
    except ValidationError:
        raise ParseError(f"not a number: {token!r}", line, column) from None


def parse_paper_text(data: bytes | str) -> GeneralProblem:
    if isinstance(data, bytes):
        try:
            data = data.decode('utf-8')
        except UnicodeDecodeError as e:
            raise ParseError(f"input is not UTF-8: {e}") from e

    sense = Sense.MAX
    free: list[tuple[int, int, int]] = []
    objective = None
    constraints = []
    objective_line = None

    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.split('#', 1)[0].rstrip()
        if not line.strip():
            continue

        header = _HEADER.match(line)
        if header:
            key, value = header.group(1).lower(), header.group(2)
            if objective is not None:
                raise ParseError(f"'{key}:' must come before the objective row", lineno, 1)
            if key == 'sense':
                try:
                    sense = Sense(value.strip().lower())
                except ValueError:
                    raise ParseError(f"sense must be max or min, got {value.strip()!r}",
                                     lineno, header.start(2) + 1) from None
            else:
                for tok, col in _tokens(value, header.start(2)):
                    if not tok.isdigit() or int(tok) < 1:
                        raise ParseError(f"free variable index must be a positive integer, got {tok!r}",
                                         lineno, col)
                    free.append((int(tok), lineno, col))
            continue

        bars = [i for i, ch in enumerate(line) if ch == '|']
        if len(bars) > 1:
            raise ParseError("ragged row: more than one '|' separator", lineno, bars[1] + 1)

        if objective is None:
            if bars:
                raise ParseError("objective row takes no right-hand side", lineno, bars[0] + 1)
            objective = [_number(tok, lineno, col) for tok, col in _tokens(line)]
            objective_line = lineno
            continue

        if not bars:
            raise ParseError("constraint row needs '|' before its right-hand side", lineno, len(line) + 1)
        left = _tokens(line[:bars[0]])
        right = _tokens(line[bars[0] + 1:], bars[0] + 1)
        if len(left) != len(objective):
            column = left[len(objective)][1] if len(left) > len(objective) else bars[0] + 1
            raise ParseError(f"ragged row: {len(left)} coefficients, objective has {len(objective)}",
                             lineno, column)
        coeffs = [_number(tok, lineno, col) for tok, col in left]
        relation = Relation.LE
        if len(right) == 2:
            tok, col = right[0]
            try:
                relation = Relation.parse(tok)
            except ValidationError:
                raise ParseError(f"unknown relation {tok!r}", lineno, col) from None
        elif len(right) != 1:
            column = right[2][1] if len(right) > 2 else bars[0] + 1
            raise ParseError("expected '[relation] rhs' after '|'", lineno, column)
        rhs_tok, rhs_col = right[-1]
        constraints.append(Constraint(tuple(coeffs), relation, _number(rhs_tok, lineno, rhs_col)))

    if objective is None:
        raise ParseError("no objective row found")
    if not objective:
        raise ParseError("objective row is empty", objective_line, 1)
    if not constraints:
        raise ParseError("no constraint rows found", objective_line, 1)

    domains = [Domain.NONNEGATIVE] * len(objective)
    for index, lineno, col in free:
        if index > len(objective):
            raise ParseError(f"free variable {index} out of range 1..{len(objective)}", lineno, col)
        domains[index - 1] = Domain.FREE

    problem = GeneralProblem(sense, tuple(objective), tuple(constraints), tuple(domains))
    logger.debug(f"Parsed paper-text problem: {len(constraints)} constraints, {len(objective)} variables")
    return problem


def serialize_paper_text(gp: GeneralProblem) -> str:
    lines = [f"sense: {gp.sense.value}"]
    free = [str(j + 1) for j, d in enumerate(gp.variable_domains) if d is Domain.FREE]
    if free:
        lines.append(f"free: {' '.join(free)}")
    lines.append(' '.join(format_exact(v) for v in gp.objective))
    for c in gp.constraints:
        relation = '' if c.relation is Relation.LE else f"{c.relation.value} "
        lines.append(f"{' '.join(format_exact(v) for v in c.coeffs)} | {relation}{format_exact(c.rhs)}")
    return '\n'.join(lines) + '\n'
