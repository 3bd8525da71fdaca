"""Jacobian ranks of equation systems and of the exponential chart"""
import logging
from typing import Optional

import numpy as np
from scipy.linalg import expm

from discvar.core.config import settings
from discvar.features.groebner.domain.entities import PolySystem
from discvar.features.numgeo.constants import EXP_V_RANK_TOL, FD_STEP
from discvar.features.numgeo.domain.entities import SymMatrixN
from discvar.features.numgeo.exceptions import DimensionMismatchError
from discvar.features.numgeo.service.rank import rank_with_tol
from discvar.features.poly.service import CompiledSystem

logger = logging.getLogger(__name__)


def system_jacobian(system: PolySystem, X: SymMatrixN, compiled: Optional[CompiledSystem] = None):
    """(Jacobian rows per member, tolerance scale per member) at X"""
    point = X.to_point()
    missing = [v for v in system.context.variables if v not in point]
    if missing:
        raise DimensionMismatchError(
            f"Variables {', '.join(missing)} are not entries of a {X.n}x{X.n} matrix"
        )
    compiled = compiled or CompiledSystem(list(system), system.context.variables)
    values = np.array([point[v] for v in system.context.variables])
    return compiled.jacobian(values), compiled.tolerance_scale(values)[0]


def jacobian_rank_at(
    system: PolySystem,
    X: SymMatrixN,
    tol: Optional[float] = None,
    compiled: Optional[CompiledSystem] = None,
) -> int:
    """
    Rank of the partial derivatives of all members at X.

    Pivots below tol * max|entry| or below tol * (largest member scale) do
    not count; the second threshold keeps rounding noise at points where
    every gradient vanishes from registering as rank.
    """
    tol = settings.RANK_TOL if tol is None else tol
    jac, scales = system_jacobian(system, X, compiled)
    floor = tol * float(np.max(scales)) if len(scales) else 0.0
    if not jac.size:
        return 0
    return rank_with_tol(jac, tol, floor=floor)


def _rotation_generators():
    """Infinitesimal rotations about e1 and e2, normalized so d/du (2,3) = b - a"""
    about_e1 = np.zeros((3, 3))
    about_e1[1, 2], about_e1[2, 1] = 1.0, -1.0
    about_e2 = np.zeros((3, 3))
    about_e2[0, 2], about_e2[2, 0] = 1.0, -1.0
    return about_e1, about_e2


def exp_v_jacobian(D: SymMatrixN, step: float = FD_STEP) -> np.ndarray:
    """
    Central differences of A -> exp(A) D exp(A)^T at A = 0 along the two generators.

    Shape (6, 2): upper-triangle coordinates by direction.
    """
    if D.n != 3:
        raise DimensionMismatchError("The exponential chart is built for n = 3", 3, D.n)

    def chart(A: np.ndarray) -> np.ndarray:
        g = expm(A)
        return SymMatrixN.from_array(g @ D.array @ g.T).flatten_upper()

    columns = [(chart(step * V) - chart(-step * V)) / (2.0 * step) for V in _rotation_generators()]
    return np.column_stack(columns)


def exp_v_rank_check(D: SymMatrixN, tol: float = EXP_V_RANK_TOL) -> int:
    """Rank of the exponential chart at zero; 2 for diag(a, a, b) with a != b"""
    jac = exp_v_jacobian(D)
    rank = rank_with_tol(jac.T, tol, floor=tol)
    logger.debug(f"exp_V Jacobian rank {rank}")
    return rank
