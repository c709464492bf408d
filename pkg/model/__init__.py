"""Problem model: scalars, LP forms and the Eq system."""
from .scalars import ScalarField, format_exact, parse_scalar
from .problem import (
    Constraint, Domain, GeneralProblem, LinearProgram, Relation, Sense,
    VariableMapping, fold_back, fold_objective, lift, normalize,
)
from .eq_system import EqSystem, build_eq

__all__ = [
    'ScalarField', 'format_exact', 'parse_scalar',
    'Constraint', 'Domain', 'GeneralProblem', 'LinearProgram', 'Relation', 'Sense',
    'VariableMapping', 'fold_back', 'fold_objective', 'lift', 'normalize',
    'EqSystem', 'build_eq',
]
