"""Shared enum definitions for the complementary pivoting solver."""
from enum import Enum


class Arithmetic(str, Enum):
    """Scalar mode used for every tableau entry.

    FLOAT: binary64 with an absolute zero tolerance
    RATIONAL: exact fractions, zero means zero
    """
    FLOAT = "float"
    RATIONAL = "rational"


class TraceLevel(str, Enum):
    NONE = "none"
    COLUMNS = "columns"
    TABLEAUX = "tableaux"


class Phase(str, Enum):
    """Pivoting instance a pivot belongs to."""
    MINORP = "MinorP"
    MAJORP = "MajorP"
    FINALIZE = "Finalize"


class Ordering(str, Enum):
    ASCENDING = "ascending"
    DESCENDING = "descending"


class OutcomeKind(str, Enum):
    OPTIMAL = "optimal"
    NO_SOLUTION = "no_solution"
    ITERATION_LIMIT = "iteration_limit"
    BREAKDOWN = "breakdown"


class FindingCategory(str, Enum):
    ITERATION_BOUND = "iteration-bound-exceeded"
    ORACLE_DISAGREEMENT = "oracle-disagreement"
    BREAKDOWN = "breakdown"
    RATIO_VIOLATION = "ratio-violation"
    UNVERIFIED = "unverified"
