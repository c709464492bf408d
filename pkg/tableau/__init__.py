"""Tableau state and pivot operations."""
from .core import EqTableau, Note, PivotRecord, StopKind, StopStatus, initialize
from .snapshot import format_matrix, format_scalar, format_vector

__all__ = ['EqTableau', 'Note', 'PivotRecord', 'StopKind', 'StopStatus', 'initialize',
           'format_matrix', 'format_scalar', 'format_vector']
