"""
JSON problem format.

    {"sense": "max",
     "objective": [-1, 1],
     "constraints": [{"coeffs": [1, 1], "op": "<=", "rhs": 10}],
     "variables": ["nonnegative", "free"]}

``sense``, ``op`` and ``variables`` are optional (max, <=, all
nonnegative). Numbers may be JSON numbers or strings such as "1/3";
decimal literals are read exactly from their text.
"""

import json
import logging

from errors import ParseError, ValidationError
from model.problem import Constraint, Domain, GeneralProblem, Relation, Sense
from model.scalars import format_exact, parse_scalar

logger = logging.getLogger('cgjlp.ingest')


def _reject_constant(name: str):
    raise ParseError(f"non-finite number {name} not allowed")


def _number(value, path: str):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ParseError(f"expected a number, got {type(value).__name__}", path=path)
    try:
        return parse_scalar(value)
    except ValidationError:
        raise ParseError(f"not a number: {value!r}", path=path) from None


def _vector(value, path: str, length: int | None = None) -> list:
    if not isinstance(value, list):
        raise ParseError("expected an array", path=path)
    if not value:
        raise ParseError("array must not be empty", path=path)
    if length is not None and len(value) != length:
        raise ParseError(f"expected {length} entries, got {len(value)}", path=path)
    return [_number(v, f"{path}[{i}]") for i, v in enumerate(value)]


def parse_json(data: bytes | str) -> GeneralProblem:
    try:
        doc = json.loads(data, parse_float=str, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from e
    except UnicodeDecodeError as e:
        raise ParseError(f"input is not UTF-8: {e}") from e

    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", path='$')

    try:
        sense = Sense(str(doc.get('sense', 'max')).lower())
    except ValueError:
        raise ParseError(f"must be 'max' or 'min', got {doc.get('sense')!r}", path='sense') from None

    if 'objective' not in doc:
        raise ParseError("missing field", path='objective')
    objective = _vector(doc['objective'], 'objective')

    if 'constraints' not in doc:
        raise ParseError("missing field", path='constraints')
    rows = doc['constraints']
    if not isinstance(rows, list):
        raise ParseError("expected an array", path='constraints')
    if not rows:
        raise ParseError("array must not be empty", path='constraints')

    constraints = []
    for i, row in enumerate(rows):
        path = f"constraints[{i}]"
        if not isinstance(row, dict):
            raise ParseError("expected an object", path=path)
        if 'coeffs' not in row:
            raise ParseError("missing field", path=f"{path}.coeffs")
        if 'rhs' not in row:
            raise ParseError("missing field", path=f"{path}.rhs")
        coeffs = _vector(row['coeffs'], f"{path}.coeffs", len(objective))
        try:
            relation = Relation.parse(str(row.get('op', '<=')))
        except ValidationError:
            raise ParseError(f"unknown relation {row.get('op')!r}", path=f"{path}.op") from None
        constraints.append(Constraint(tuple(coeffs), relation, _number(row['rhs'], f"{path}.rhs")))

    domains = doc.get('variables')
    if domains is None:
        domains = [Domain.NONNEGATIVE.value] * len(objective)
    if not isinstance(domains, list) or len(domains) != len(objective):
        raise ParseError(f"expected {len(objective)} variable domains", path='variables')
    parsed_domains = []
    for j, d in enumerate(domains):
        try:
            parsed_domains.append(Domain(d))
        except ValueError:
            raise ParseError(f"must be 'nonnegative' or 'free', got {d!r}",
                             path=f"variables[{j}]") from None

    problem = GeneralProblem(sense, tuple(objective), tuple(constraints), tuple(parsed_domains))
    logger.debug(f"Parsed JSON problem: {len(constraints)} constraints, {len(objective)} variables")
    return problem


def _json_number(value):
    return value.numerator if value.denominator == 1 else format_exact(value)


def serialize_json(gp: GeneralProblem) -> str:
    doc = {
        'sense': gp.sense.value,
        'objective': [_json_number(v) for v in gp.objective],
        'constraints': [
            {'coeffs': [_json_number(v) for v in c.coeffs],
             'op': c.relation.value,
             'rhs': _json_number(c.rhs)}
            for c in gp.constraints
        ],
    }
    if any(d is Domain.FREE for d in gp.variable_domains):
        doc['variables'] = [d.value for d in gp.variable_domains]
    return json.dumps(doc, indent=2) + '\n'
