"""Numeric geometry exceptions"""
from typing import Optional

from discvar.shared.errors import UsageError


class NumgeoException(Exception):
    """Base exception for numgeo feature"""
    pass


class DimensionMismatchError(NumgeoException, UsageError):
    """Matrices, rotations or vectors of different sizes"""
    def __init__(self, message: str, expected: Optional[int] = None, actual: Optional[int] = None):
        self.message = message
        self.expected = expected
        self.actual = actual
        super().__init__(self.message)


class AxisError(NumgeoException, UsageError):
    """Rotation axis is zero or not of unit length"""
    def __init__(self, message: str, norm: Optional[float] = None):
        self.message = message
        self.norm = norm
        super().__init__(self.message)


class InvalidEigenvaluesError(NumgeoException, UsageError):
    """Eigenvalue list that cannot be parsed or is empty"""
    def __init__(self, message: str, text: Optional[str] = None):
        self.message = message
        self.text = text
        super().__init__(self.message)


class NotARotationError(NumgeoException):
    """Matrix is not orthogonal with determinant one"""
    pass
