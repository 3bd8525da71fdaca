"""Symbolic form exceptions"""
from typing import Optional, Tuple

from discvar.shared.errors import UsageError


class SymformException(Exception):
    """Base exception for symform feature"""
    pass


class MatrixShapeError(SymformException, UsageError):
    """An operation got matrices of incompatible or non-square shape"""
    def __init__(self, message: str, shape: Optional[Tuple[int, int]] = None):
        self.message = message
        self.shape = shape
        super().__init__(self.message)


class MatrixSizeError(SymformException, UsageError):
    """Matrix size outside the supported range"""
    def __init__(self, message: str, n: Optional[int] = None):
        self.message = message
        self.n = n
        super().__init__(self.message)


class DegreeError(SymformException, UsageError):
    """Univariate input of unusable degree, e.g. a zero polynomial in a resultant"""
    pass


class UnknownParametrizationError(SymformException, UsageError):
    """Parametrization name not recognized"""
    pass
