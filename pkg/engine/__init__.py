"""Pivot engine: candidate lists, MinorP/MajorP instances and the solve loop."""
from .candidates import CandidateList, build_candidates
from .pivoting import Terminal, TerminalKind, run_finalize, run_majorp, run_minorp
from .solver import SolveOutcome, SolverConfig, extract_solution, solve
from .trace import SolveTrace, TraceRow

__all__ = [
    'CandidateList', 'build_candidates',
    'Terminal', 'TerminalKind', 'run_finalize', 'run_majorp', 'run_minorp',
    'SolveOutcome', 'SolverConfig', 'extract_solution', 'solve',
    'SolveTrace', 'TraceRow',
]
