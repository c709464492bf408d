"""Bundled example problems and the Klee-Minty family."""
from pathlib import Path

from ingest.problem_file import load_problem
from model.problem import GeneralProblem, LinearProgram, normalize
from model.scalars import ScalarField
from modes import Arithmetic

PROBLEM_DIR = Path(__file__).parent


def example_path(name: str) -> Path:
    """Path of a bundled problem; ``name`` may omit the extension."""
    path = PROBLEM_DIR / name
    if path.suffix:
        return path
    for suffix in ('.txt', '.json'):
        if path.with_suffix(suffix).exists():
            return path.with_suffix(suffix)
    raise FileNotFoundError(f"no bundled problem named {name!r}")


def load_general(name: str) -> GeneralProblem:
    return load_problem(example_path(name)).problem


def load_example(name: str, arithmetic: Arithmetic = Arithmetic.RATIONAL) -> LinearProgram:
    return normalize(load_general(name), arithmetic)


def klee_minty(n: int, arithmetic: Arithmetic = Arithmetic.RATIONAL) -> LinearProgram:
    """max sum 10^(n-j) x_j  s.t.  2 sum_{j<i} 10^(i-j) x_j + x_i <= 100^(i-1).

    Entries of b reach 10^(2(n-1)); use rational arithmetic for n >= 6.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    f = [10 ** (n - j) for j in range(1, n + 1)]
    A = [[2 * 10 ** (i - j) if j < i else (1 if j == i else 0) for j in range(1, n + 1)]
         for i in range(1, n + 1)]
    b = [100 ** (i - 1) for i in range(1, n + 1)]
    return LinearProgram(f, A, b, ScalarField(arithmetic))
