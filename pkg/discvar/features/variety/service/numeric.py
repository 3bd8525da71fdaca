"""Numeric vanishing of exact systems on sampled matrices"""
import logging
from itertools import combinations_with_replacement
from typing import Optional

import numpy as np
from sympy.polys.rings import PolyElement

from discvar.core.config import settings
from discvar.features.groebner.domain.entities import PolySystem
from discvar.features.numgeo.domain.entities import SymMatrixN
from discvar.features.numgeo.service import conjugate_batch, random_so_batch
from discvar.features.numgeo.service.linalg import Seed
from discvar.features.poly.domain.entities import PolyContext
from discvar.features.poly.service import CompiledSystem
from discvar.shared.constants import matrix_variables

logger = logging.getLogger(__name__)


def compile_for(system: PolySystem, n: int) -> CompiledSystem:
    """Columns follow the upper-triangle layout x11, x12, ..., xnn"""
    return CompiledSystem(list(system), matrix_variables(n))


def _upper(points: np.ndarray) -> np.ndarray:
    rows, cols = np.triu_indices(points.shape[1])
    return points[:, rows, cols]


def relative_residuals(system: PolySystem, points: np.ndarray) -> np.ndarray:
    """|p(X)| / scale(p, X) for points of shape (count, n, n); shape (count, members)"""
    points = np.asarray(points, dtype=float)
    if not len(system) or not len(points):
        return np.zeros((len(points), len(system)))
    return compile_for(system, points.shape[1]).relative_residuals(_upper(points))


def max_residual(system: PolySystem, points: np.ndarray) -> float:
    residuals = relative_residuals(system, points)
    return float(np.max(residuals)) if residuals.size else 0.0


def discriminant_points(n: int, count: int, seed: Seed = None) -> np.ndarray:
    """
    g diag(lam, lam, mu_1, ..., mu_{n-2}) g^T with standard normal values
    and Haar-random g; shape (count, n, n).
    """
    rng = np.random.default_rng(settings.SEED if seed is None else seed)
    values = rng.standard_normal((count, n - 1))
    diagonals = np.zeros((count, n, n))
    for t in range(count):
        diagonals[t] = np.diag(np.concatenate([[values[t, 0]], values[t]]))
    rotations = random_so_batch(n, count, rng)
    out = rotations @ diagonals @ np.swapaxes(rotations, 1, 2)
    return (out + np.swapaxes(out, 1, 2)) / 2.0


def orbit_points(D: SymMatrixN, count: int, seed: Seed = None) -> np.ndarray:
    rotations = random_so_batch(D.n, count, settings.SEED if seed is None else seed)
    return conjugate_batch(rotations, D)


def scalar_points(n: int, count: int, seed: Seed = None) -> np.ndarray:
    rng = np.random.default_rng(settings.SEED if seed is None else seed)
    return np.array([np.eye(n) * s for s in rng.standard_normal(count)])


def trace_shift_residual(system: PolySystem, X: SymMatrixN, s: float) -> float:
    """Largest relative residual of the system at X + s I"""
    return max_residual(system, (X.array + s * np.eye(X.n))[None, :, :])


def fixed_quadratic_form(n: int, context: Optional[PolyContext] = None) -> PolyElement:
    """
    A fixed quadratic form in the entries with small nonzero integer coefficients.

    No nonzero quadratic form vanishes on the discriminant variety, so this
    one must be visibly nonzero on its samples.
    """
    ctx = context or PolyContext(tuple(matrix_variables(n)))
    names = matrix_variables(n)
    gens = ctx.gens()
    form = ctx.zero
    for a, b in combinations_with_replacement(range(len(names)), 2):
        coefficient = (7 * a + 3 * b) % 5 - 2
        if coefficient:
            form += gens[names[a]] * gens[names[b]] * coefficient
    return form


def max_form_ratio(p: PolyElement, points: np.ndarray) -> float:
    """max |p(X)| / (coefficient scale * max(1, |X|)^degree) over the points"""
    compiled = CompiledSystem([p], matrix_variables(points.shape[1]))
    upper = _upper(np.asarray(points, dtype=float))
    values = np.abs(compiled.values(upper)[:, 0])
    magnitude = np.maximum(1.0, np.max(np.abs(upper), axis=1)) ** compiled.degrees[0]
    return float(np.max(values / (compiled.scales[0] / max(len(p), 1) * magnitude)))
