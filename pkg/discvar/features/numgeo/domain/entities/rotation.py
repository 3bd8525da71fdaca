"""Rotations of R^n"""
import numpy as np

from discvar.features.numgeo.constants import ORTHOGONALITY_TOL
from discvar.features.numgeo.exceptions import DimensionMismatchError, NotARotationError


class RotationOp:
    """An element of SO(n); g^T g = I and det g = 1 are checked on construction"""

    __slots__ = ("matrix",)

    def __init__(self, matrix, tol: float = ORTHOGONALITY_TOL):
        g = np.array(matrix, dtype=float)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise DimensionMismatchError(f"Expected a square matrix, got shape {g.shape}")
        n = g.shape[0]
        if np.max(np.abs(g.T @ g - np.eye(n))) > tol:
            raise NotARotationError("Matrix is not orthogonal")
        if abs(np.linalg.det(g) - 1.0) > tol:
            raise NotARotationError("Orthogonal matrix with determinant -1")
        g.setflags(write=False)
        self.matrix = g

    @classmethod
    def identity(cls, n: int) -> "RotationOp":
        return cls(np.eye(n))

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def __matmul__(self, other: "RotationOp") -> "RotationOp":
        if other.n != self.n:
            raise DimensionMismatchError("Rotation sizes differ", self.n, other.n)
        return RotationOp(self.matrix @ other.matrix)

    def inverse(self) -> "RotationOp":
        return RotationOp(self.matrix.T)

    def apply(self, v) -> np.ndarray:
        return self.matrix @ np.asarray(v, dtype=float)

    def __repr__(self) -> str:
        return f"RotationOp({self.matrix.tolist()})"
