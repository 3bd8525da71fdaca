"""Eigensolver, s-metric, rotations and conjugation"""
import logging
import math
from typing import List, Union

import numpy as np

from discvar.features.numgeo.constants import (
    AXIS_NORM_TOL,
    EMBEDDING_DIAGONAL,
    JACOBI_MAX_SWEEPS,
    JACOBI_OFF_TOL,
)
from discvar.features.numgeo.domain.entities import EigenMultiset, RotationOp, SymMatrixN
from discvar.features.numgeo.exceptions import AxisError, DimensionMismatchError

logger = logging.getLogger(__name__)

Seed = Union[int, np.random.Generator, np.random.SeedSequence, None]


def _off_norm(a: np.ndarray) -> float:
    return float(np.sqrt(np.sum(a ** 2) - np.sum(np.diag(a) ** 2)))


def jacobi_eigs(S: SymMatrixN):
    """
    Cyclic Jacobi rotations until the off-diagonal part is negligible.

    Returns the sorted eigenvalues and g in SO(n) with g^T S g diagonal.
    When the accumulated eigenvectors have determinant -1 the first one
    changes sign.
    """
    a = S.array.copy()
    n = S.n
    v = np.eye(n)
    scale = float(np.sqrt(np.sum(a ** 2)))
    sweeps = 0
    while scale > 0.0 and sweeps < JACOBI_MAX_SWEEPS and _off_norm(a) > JACOBI_OFF_TOL * scale:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q

                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        sweeps += 1

    if sweeps == JACOBI_MAX_SWEEPS:
        logger.warning(f"Jacobi stopped after {sweeps} sweeps, off-diagonal norm {_off_norm(a):.3e}")
    values = np.diag(a)
    order = np.argsort(values, kind="stable")
    v = v[:, order]
    if np.linalg.det(v) < 0:
        v[:, 0] = -v[:, 0]
    return EigenMultiset(tuple(values[order])), RotationOp(v)


def s_quad(X: SymMatrixN) -> float:
    """Sum of squares of all entries"""
    return float(np.sum(X.array ** 2))


def s_inner(X: SymMatrixN, Y: SymMatrixN) -> float:
    """Inner product whose square norm is s_quad / 2, matching s_dist"""
    if X.n != Y.n:
        raise DimensionMismatchError("Matrix sizes differ", X.n, Y.n)
    return float(np.sum(X.array * Y.array)) / 2.0


def s_dist(X: SymMatrixN, Y: SymMatrixN) -> float:
    """sqrt(s_quad(X - Y) / 2); a diagonal swap of lambda and mu is at distance |lambda - mu|"""
    return math.sqrt(s_quad(X - Y) / 2.0)


def _rng(seed: Seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_so_batch(n: int, count: int, seed: Seed = None) -> np.ndarray:
    """
    count Haar-distributed rotations, shape (count, n, n).

    QR of Gaussian matrices with the signs of R's diagonal moved into Q;
    a negative determinant is fixed by flipping the first column. The
    first k rotations of a batch only depend on the first k draws.
    """
    if n < 2:
        raise DimensionMismatchError(f"Rotations need n >= 2, got {n}", 2, n)
    if count == 0:
        return np.zeros((0, n, n))
    gaussian = _rng(seed).standard_normal((count, n, n))
    q, r = np.linalg.qr(gaussian)
    signs = np.sign(np.diagonal(r, axis1=1, axis2=2))
    signs[signs == 0] = 1.0
    q = q * signs[:, None, :]
    negative = np.linalg.det(q) < 0
    q[negative, :, 0] = -q[negative, :, 0]
    return q


def random_so(n: int, seed: Seed = None) -> RotationOp:
    return RotationOp(random_so_batch(n, 1, seed)[0])


def conjugate(g: RotationOp, X: SymMatrixN) -> SymMatrixN:
    """g X g^T"""
    if g.n != X.n:
        raise DimensionMismatchError("Rotation and matrix sizes differ", X.n, g.n)
    return SymMatrixN.from_array(g.matrix @ X.array @ g.matrix.T)


def conjugate_batch(rotations: np.ndarray, X: SymMatrixN) -> np.ndarray:
    out = rotations @ X.array @ np.swapaxes(rotations, 1, 2)
    return (out + np.swapaxes(out, 1, 2)) / 2.0


def _unit_axis(axis, tol: float = AXIS_NORM_TOL) -> np.ndarray:
    l = np.asarray(axis, dtype=float)
    if l.shape != (3,):
        raise DimensionMismatchError("Axis must be a 3-vector", 3, l.size)
    norm = float(np.linalg.norm(l))
    if abs(norm - 1.0) > tol:
        raise AxisError(f"Axis must have unit length, got norm {norm}", norm)
    return l


def _skew(l: np.ndarray) -> np.ndarray:
    return np.array([
        [0.0, -l[2], l[1]],
        [l[2], 0.0, -l[0]],
        [-l[1], l[0], 0.0],
    ])


def _active_rotation(l: np.ndarray, angle: float) -> np.ndarray:
    """Rodrigues: I + sin(a) K + (1 - cos(a)) K^2"""
    K = _skew(l)
    return np.eye(3) + math.sin(angle) * K + (1.0 - math.cos(angle)) * (K @ K)


def rotation_axis_angle(axis, phi: float) -> RotationOp:
    """
    Change of frame by the angle phi about a unit axis (n = 3).

    The matrix turns vectors by -phi, so conjugating diag(1, 1, -2) about e1
    gives (2, 3) = -3 cos(phi) sin(phi).
    """
    return RotationOp(_active_rotation(_unit_axis(axis), -phi))


def canonical_axis(l) -> np.ndarray:
    """Unit vector with its first non-negligible coordinate positive"""
    l = np.asarray(l, dtype=float)
    if l.shape != (3,):
        raise DimensionMismatchError("Axis must be a 3-vector", 3, l.size)
    norm = float(np.linalg.norm(l))
    if norm == 0.0:
        raise AxisError("Axis must be nonzero", norm)
    l = l / norm
    for x in l:
        if abs(x) > 1e-12:
            return -l if x < 0 else l
    return l


def proj_plane_embed(l) -> SymMatrixN:
    """
    The point of Orbit(diag(1, 1, -2)) whose -2 eigenvector is the line of l.

    Computed as R D R^T with R the rotation carrying e3 to l along the great
    circle; l and -l give the same point and e3 gives D itself.
    """
    D = SymMatrixN.diag(EMBEDDING_DIAGONAL)
    l = canonical_axis(l)
    e3 = np.array([0.0, 0.0, 1.0])
    axis = np.cross(e3, l)
    sin_angle = float(np.linalg.norm(axis))
    if sin_angle == 0.0:
        return D
    angle = math.atan2(sin_angle, float(l @ e3))
    R = _active_rotation(axis / sin_angle, angle)
    return SymMatrixN.from_array(R @ D.array @ R.T)


def antisymmetric_basis(n: int) -> List[np.ndarray]:
    """E_ij - E_ji for i < j"""
    basis = []
    for i in range(n):
        for j in range(i + 1, n):
            A = np.zeros((n, n))
            A[i, j] = 1.0
            A[j, i] = -1.0
            basis.append(A)
    return basis


def commutator(A: np.ndarray, D: SymMatrixN) -> SymMatrixN:
    """[A, D] = A D - D A; symmetric for antisymmetric A"""
    return SymMatrixN.from_array(A @ D.array - D.array @ A)


def tangent_basis(D: SymMatrixN) -> List[SymMatrixN]:
    """Tangent directions of Orbit(D) at D, one per basis element of so(n)"""
    return [commutator(A, D) for A in antisymmetric_basis(D.n)]

