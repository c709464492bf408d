"""Optimality certificates: feasibility, duality gap and complementarity residuals."""
import logging
from dataclasses import asdict, dataclass

import numpy as np

from errors import ValidationError
from model.problem import LinearProgram

logger = logging.getLogger('cgjlp.oracle')

DEFAULT_FLOAT_TOL = 1e-6


@dataclass(frozen=True)
class CertificateReport:
    primal_residual: float
    primal_negativity: float
    dual_residual: float
    dual_negativity: float
    duality_gap: float
    complementarity: float
    system_residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return not self.failures()

    def failures(self) -> list[str]:
        return [name for name, value in self.residuals().items() if value > self.tol]

    def residuals(self) -> dict:
        out = asdict(self)
        out.pop('tol')
        return out

    def as_dict(self) -> dict:
        out = {name: float(v) for name, v in self.residuals().items()}
        out['tol'] = float(self.tol)
        out['passed'] = self.passed
        return out


def default_tolerance(lp: LinearProgram):
    return lp.field.zero if lp.field.exact else DEFAULT_FLOAT_TOL


def _max0(values, zero):
    return max([zero, *values])


def check_certificate(lp: LinearProgram, x, y, z=None, tol=None) -> CertificateReport:
    """Residuals of a claimed primal-dual pair (x, y).

    When ``z`` is given it is checked against the Eq system as well
    (Mz = q and z >= 0), and complementarity is read from it; otherwise
    z is assembled from x, y and their slacks.
    """
    fld = lp.field
    k, n = lp.k, lp.n
    if len(x) != n:
        raise ValidationError(f"x has length {len(x)}, expected {n}")
    if len(y) != k:
        raise ValidationError(f"y has length {len(y)}, expected {k}")
    x = fld.array(list(x))
    y = fld.array(list(y))
    zero = fld.zero
    if tol is None:
        tol = default_tolerance(lp)

    Ax = lp.A.dot(x)
    ATy = lp.A.T.dot(y)
    u = lp.b - Ax
    v = ATy - lp.f
    primal_value = lp.f.dot(x)
    dual_value = lp.b.dot(y)

    system_residual = zero
    if z is None:
        z = np.concatenate([y, x, u, v])
    else:
        if len(z) != 2 * (k + n):
            raise ValidationError(f"z has length {len(z)}, expected {2 * (k + n)}")
        z = fld.array(list(z))
        zy, zx, zu, zv = z[:k], z[k:k + n], z[k + n:2 * k + n], z[2 * k + n:]
        gaps = [abs(a - b) for a, b in zip(zy, y)]
        gaps += [abs(a - b) for a, b in zip(zx, x)]
        gaps += [abs(a - b) for a, b in zip(zu, u)]
        gaps += [abs(a - b) for a, b in zip(zv, v)]
        gaps += [-value for value in z]
        system_residual = _max0(gaps, zero)

    size = k + n
    report = CertificateReport(
        primal_residual=_max0(-u, zero),
        primal_negativity=_max0(-x, zero),
        dual_residual=_max0(-v, zero),
        dual_negativity=_max0(-y, zero),
        duality_gap=abs(primal_value - dual_value),
        complementarity=max(abs(z[j] * z[size + j]) for j in range(size)),
        system_residual=system_residual,
        tol=tol,
    )
    if not report.passed:
        logger.debug(f"Certificate rejected: {report.failures()}")
    return report
