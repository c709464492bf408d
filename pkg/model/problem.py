"""
Problem representation and normalization to symmetric form.

A GeneralProblem is what users write: min or max, any mix of <=, =, >=
rows, free or nonnegative variables. normalize() turns it into a
LinearProgram (max f^T x, Ax <= b, x >= 0) and keeps a VariableMapping so
solutions can be folded back to the original variables.
"""

import logging
import dataclasses
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

import numpy as np

from errors import ValidationError
from modes import Arithmetic
from model.scalars import ScalarField, parse_scalar

logger = logging.getLogger('cgjlp.model')


class Sense(str, Enum):
    MAX = "max"
    MIN = "min"


class Relation(str, Enum):
    LE = "<="
    EQ = "="
    GE = ">="

    @classmethod
    def parse(cls, token: str) -> 'Relation':
        aliases = {'<=': cls.LE, '≤': cls.LE, '=': cls.EQ, '==': cls.EQ,
                   '>=': cls.GE, '≥': cls.GE}
        try:
            return aliases[token.strip()]
        except KeyError:
            raise ValidationError(f"unknown relation {token!r}") from None


class Domain(str, Enum):
    NONNEGATIVE = "nonnegative"
    FREE = "free"


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple
    relation: Relation
    rhs: Fraction


@dataclass(frozen=True)
class GeneralProblem:
    """An LP as written in an input file.

    All numbers are held as exact fractions of what was written; the
    arithmetic mode is chosen later, at normalization.
    """
    sense: Sense
    objective: tuple
    constraints: tuple
    variable_domains: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'sense', Sense(self.sense))
        objective = tuple(parse_scalar(v) for v in self.objective)
        if not objective:
            raise ValidationError("problem has no variables")
        if not self.constraints:
            raise ValidationError("problem has no constraints")
        n0 = len(objective)
        rows = []
        for i, c in enumerate(self.constraints):
            coeffs = tuple(parse_scalar(v) for v in c.coeffs)
            if len(coeffs) != n0:
                raise ValidationError(
                    f"constraint {i + 1} has {len(coeffs)} coefficients, expected {n0}")
            rows.append(Constraint(coeffs, Relation(c.relation), parse_scalar(c.rhs)))
        domains = tuple(Domain(d) for d in self.variable_domains) or (Domain.NONNEGATIVE,) * n0
        if len(domains) != n0:
            raise ValidationError(f"{len(domains)} variable domains given for {n0} variables")
        object.__setattr__(self, 'objective', objective)
        object.__setattr__(self, 'constraints', tuple(rows))
        object.__setattr__(self, 'variable_domains', domains)

    @property
    def num_variables(self) -> int:
        return len(self.objective)

    @property
    def is_symmetric_form(self) -> bool:
        return (self.sense is Sense.MAX
                and all(c.relation is Relation.LE for c in self.constraints)
                and all(d is Domain.NONNEGATIVE for d in self.variable_domains))


@dataclass(frozen=True)
class VariableMapping:
    """How normalized columns map back to original variables.

    ``columns[c] = (j, s)`` says normalized column c contributes s * x_c
    to original variable j.
    """
    columns: tuple
    num_original: int
    objective_sign: int = 1

    @classmethod
    def identity(cls, n: int) -> 'VariableMapping':
        return cls(tuple((j, 1) for j in range(n)), n, 1)

    @property
    def is_identity(self) -> bool:
        return (self.objective_sign == 1 and self.num_original == len(self.columns)
                and all(col == (j, 1) for j, col in enumerate(self.columns)))


@dataclass
class LinearProgram:
    """max f^T x subject to Ax <= b, x >= 0."""
    f: np.ndarray
    A: np.ndarray
    b: np.ndarray
    field: ScalarField = dataclasses.field(default_factory=ScalarField)
    mapping: VariableMapping | None = None

    def __post_init__(self):
        A = np.asarray(self.A, dtype=object)
        if A.ndim != 2:
            raise ValidationError("A must be a matrix")
        k, n = A.shape
        if k < 1 or n < 1:
            raise ValidationError(f"A must be at least 1x1, got {k}x{n}")
        f = np.asarray(self.f, dtype=object).reshape(-1)
        b = np.asarray(self.b, dtype=object).reshape(-1)
        if len(f) != n:
            raise ValidationError(f"f has length {len(f)}, A has {n} columns")
        if len(b) != k:
            raise ValidationError(f"b has length {len(b)}, A has {k} rows")
        self.f = self.field.array(f)
        self.A = self.field.array(A)
        self.b = self.field.array(b)
        if self.mapping is None:
            self.mapping = VariableMapping.identity(n)

    @classmethod
    def from_rows(cls, f: Sequence, A: Sequence[Sequence], b: Sequence,
                  arithmetic: Arithmetic = Arithmetic.FLOAT,
                  epsilon=None) -> 'LinearProgram':
        widths = {len(row) for row in A}
        if len(widths) > 1:
            raise ValidationError(f"ragged constraint matrix: row lengths {sorted(widths)}")
        return cls(f, A, b, ScalarField(arithmetic, epsilon))

    @property
    def k(self) -> int:
        return self.A.shape[0]

    @property
    def n(self) -> int:
        return self.A.shape[1]

    def with_field(self, field: ScalarField) -> 'LinearProgram':
        """Same data in another arithmetic mode."""
        if field == self.field:
            return self
        return LinearProgram(self.f, self.A, self.b, field, self.mapping)

    def objective(self, x):
        return sum((fj * xj for fj, xj in zip(self.f, x)), self.field.zero)


def normalize(gp: GeneralProblem, arithmetic: Arithmetic = Arithmetic.RATIONAL,
              epsilon=None) -> LinearProgram:
    """Convert a GeneralProblem to symmetric (max, <=, x >= 0) form.

    Minimization negates the objective, ``>=`` rows are negated, ``=`` rows
    become the adjacent pair (row, -row) and each free variable becomes
    the difference of two nonnegative columns placed side by side.
    """
    columns = []
    for j, dom in enumerate(gp.variable_domains):
        columns.append((j, 1))
        if dom is Domain.FREE:
            columns.append((j, -1))

    def expand(coeffs):
        return [s * coeffs[j] for j, s in columns]

    objective_sign = 1 if gp.sense is Sense.MAX else -1
    f = [objective_sign * v for v in expand(gp.objective)]
    A, b = [], []
    for c in gp.constraints:
        row = expand(c.coeffs)
        if c.relation is Relation.LE:
            A.append(row)
            b.append(c.rhs)
        elif c.relation is Relation.GE:
            A.append([-v for v in row])
            b.append(-c.rhs)
        else:
            A.append(row)
            b.append(c.rhs)
            A.append([-v for v in row])
            b.append(-c.rhs)

    mapping = VariableMapping(tuple(columns), gp.num_variables, objective_sign)
    lp = LinearProgram(f, A, b, ScalarField(arithmetic, epsilon), mapping)
    if not gp.is_symmetric_form:
        logger.debug(f"Normalized {len(gp.constraints)}x{gp.num_variables} problem "
                     f"to {lp.k}x{lp.n} symmetric form")
    return lp


def fold_back(x, mapping: VariableMapping) -> list:
    """Recombine split free variables into the original variables."""
    if len(x) != len(mapping.columns):
        raise ValidationError(
            f"solution has length {len(x)}, mapping expects {len(mapping.columns)}")
    out = [0] * mapping.num_original
    for value, (j, s) in zip(x, mapping.columns):
        out[j] = out[j] + s * value
    return out


def fold_objective(value, mapping: VariableMapping):
    """Objective value in the original sense (min problems negate back)."""
    return mapping.objective_sign * value


def lift(x_original, mapping: VariableMapping) -> list:
    """Image of an original-space point in the normalized variables."""
    if len(x_original) != mapping.num_original:
        raise ValidationError(
            f"point has length {len(x_original)}, problem has {mapping.num_original} variables")
    out = []
    for j, s in mapping.columns:
        v = x_original[j]
        out.append(max(s * v, 0 * v))
    return out
