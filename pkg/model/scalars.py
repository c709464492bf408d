"""Scalar modes: binary64 floats with a zero tolerance, or exact fractions."""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from errors import ValidationError
from modes import Arithmetic

logger = logging.getLogger('cgjlp.model')

DEFAULT_FLOAT_EPSILON = 1e-9
RATIO_REL_TOL = 1e-9


def parse_scalar(value: Any) -> Fraction:
    """Exact value of a number as written.

    Accepts ints, finite floats (read through their shortest decimal form),
    decimal strings such as ``"0.83"`` or ``"1e-3"`` and ratios like ``"1/3"``.
    """
    if isinstance(value, bool):
        raise ValidationError(f"not a number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, (float, np.floating)):
        if not math.isfinite(value):
            raise ValidationError(f"non-finite value: {value!r}")
        return Fraction(repr(float(value)))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValidationError(f"not a number: {value!r}") from e
    raise ValidationError(f"not a number: {value!r}")


def to_float(value: Fraction) -> float:
    """Nearest binary64 value; values outside its range are rejected."""
    try:
        out = float(value)
    except OverflowError as e:
        raise ValidationError(f"value out of float range: {format_exact(value)[:40]}") from e
    if not math.isfinite(out):
        raise ValidationError(f"value out of float range: {value}")
    return out


def format_exact(value: Fraction) -> str:
    """Shortest exact text for a fraction: integer, terminating decimal or p/q."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    places = max(twos, fives)
    scaled = abs(value.numerator) * 10 ** places // value.denominator
    digits = str(scaled).rjust(places + 1, '0')
    sign = '-' if value < 0 else ''
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


@dataclass(frozen=True)
class ScalarField:
    """Arithmetic used for every entry of a tableau.

    In float mode a value counts as zero when its magnitude is at most
    ``epsilon``. In rational mode ``epsilon`` defaults to exact zero.
    """
    arithmetic: Arithmetic = Arithmetic.FLOAT
    epsilon: Any = None

    def __post_init__(self):
        arithmetic = Arithmetic(self.arithmetic)
        eps = self.epsilon
        if eps is None:
            eps = DEFAULT_FLOAT_EPSILON if arithmetic is Arithmetic.FLOAT else 0
        eps = to_float(parse_scalar(eps)) if arithmetic is Arithmetic.FLOAT else parse_scalar(eps)
        if eps < 0:
            raise ValidationError(f"epsilon must be non-negative, got {eps}")
        object.__setattr__(self, 'arithmetic', arithmetic)
        object.__setattr__(self, 'epsilon', eps)

    @property
    def exact(self) -> bool:
        return self.arithmetic is Arithmetic.RATIONAL

    @property
    def dtype(self):
        return object if self.exact else np.float64

    @property
    def zero(self):
        return Fraction(0) if self.exact else 0.0

    @property
    def one(self):
        return Fraction(1) if self.exact else 1.0

    def scalar(self, value: Any):
        if self.exact:
            return parse_scalar(value)
        if isinstance(value, (int, float, np.integer, np.floating)) and not isinstance(value, bool):
            if not math.isfinite(value):
                raise ValidationError(f"non-finite value: {value!r}")
            return float(value)
        return to_float(parse_scalar(value))

    def array(self, values) -> np.ndarray:
        data = np.asarray(values, dtype=object)
        out = np.empty(data.shape, dtype=self.dtype)
        for idx, v in np.ndenumerate(data):
            out[idx] = self.scalar(v)
        return out

    def zeros(self, shape) -> np.ndarray:
        if self.exact:
            return np.full(shape, Fraction(0), dtype=object)
        return np.zeros(shape, dtype=np.float64)

    def identity(self, size: int) -> np.ndarray:
        out = self.zeros((size, size))
        for i in range(size):
            out[i, i] = self.one
        return out

    def is_zero(self, x) -> bool:
        return abs(x) <= self.epsilon

    def is_positive(self, x) -> bool:
        return x > self.epsilon

    def is_negative(self, x) -> bool:
        return x < -self.epsilon

    def sign(self, x) -> int:
        if self.is_zero(x):
            return 0
        return 1 if x > 0 else -1

    def same_value(self, a, b) -> bool:
        """Equality used for ratio comparisons."""
        if self.exact:
            return a == b
        return math.isclose(a, b, rel_tol=RATIO_REL_TOL, abs_tol=self.epsilon)
