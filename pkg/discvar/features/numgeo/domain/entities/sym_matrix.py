"""Dense symmetric matrices in double precision"""
from typing import Dict, Iterable, Mapping, Sequence

import numpy as np

from discvar.features.numgeo.exceptions import DimensionMismatchError
from discvar.shared.constants import matrix_variable


def upper_indices(n: int):
    """Row and column indices of the upper triangle in the order x11, x12, ..., xnn"""
    return np.triu_indices(n)


class SymMatrixN:
    """
    Symmetric n x n matrix.

    The array is mirrored from its upper triangle on construction and is
    read-only afterwards, so entries (i, j) and (j, i) are bitwise equal.
    """

    __slots__ = ("array",)

    def __init__(self, array: np.ndarray):
        a = np.array(array, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionMismatchError(f"Expected a square matrix, got shape {a.shape}")
        upper = np.triu(a)
        a = upper + np.triu(a, 1).T
        a.setflags(write=False)
        self.array = a

    @classmethod
    def from_array(cls, array) -> "SymMatrixN":
        """Symmetrize (A + A^T) / 2"""
        a = np.asarray(array, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionMismatchError(f"Expected a square matrix, got shape {a.shape}")
        return cls((a + a.T) / 2.0)

    @classmethod
    def from_upper(cls, values: Sequence[float], n: int) -> "SymMatrixN":
        values = np.asarray(values, dtype=float)
        expected = n * (n + 1) // 2
        if values.shape != (expected,):
            raise DimensionMismatchError(f"Need {expected} upper-triangle values", expected, values.size)
        a = np.zeros((n, n))
        a[upper_indices(n)] = values
        return cls(a)

    @classmethod
    def from_point(cls, point: Mapping[str, float], n: int) -> "SymMatrixN":
        return cls.from_upper(
            [point[matrix_variable(i + 1, j + 1)] for i, j in zip(*upper_indices(n))],
            n,
        )

    @classmethod
    def diag(cls, values: Iterable[float]) -> "SymMatrixN":
        return cls(np.diag(np.asarray(list(values), dtype=float)))

    @classmethod
    def scalar(cls, n: int, value: float) -> "SymMatrixN":
        return cls(np.eye(n) * value)

    @property
    def n(self) -> int:
        return self.array.shape[0]

    def __getitem__(self, index):
        return self.array[index]

    def flatten_upper(self) -> np.ndarray:
        """[X(i, j) | i <= j] row by row"""
        return self.array[upper_indices(self.n)].copy()

    def to_point(self) -> Dict[str, float]:
        """Values of the matrix variables x_ij"""
        return {
            matrix_variable(i + 1, j + 1): float(self.array[i, j])
            for i, j in zip(*upper_indices(self.n))
        }

    def trace(self) -> float:
        return float(np.trace(self.array))

    def is_diagonal(self, tol: float = 0.0) -> bool:
        off = self.array - np.diag(np.diag(self.array))
        return bool(np.all(np.abs(off) <= tol))

    def _check(self, other: "SymMatrixN") -> None:
        if other.n != self.n:
            raise DimensionMismatchError("Matrix sizes differ", self.n, other.n)

    def __add__(self, other: "SymMatrixN") -> "SymMatrixN":
        self._check(other)
        return SymMatrixN(self.array + other.array)

    def __sub__(self, other: "SymMatrixN") -> "SymMatrixN":
        self._check(other)
        return SymMatrixN(self.array - other.array)

    def scale(self, factor: float) -> "SymMatrixN":
        return SymMatrixN(self.array * factor)

    def allclose(self, other: "SymMatrixN", atol: float = 1e-12) -> bool:
        self._check(other)
        return bool(np.allclose(self.array, other.array, rtol=0.0, atol=atol))

    def __repr__(self) -> str:
        return f"SymMatrixN({self.array.tolist()})"
