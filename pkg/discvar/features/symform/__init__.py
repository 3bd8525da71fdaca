"""Symbolic matrix constructions: generic matrices, characteristic polynomials, discriminants"""
from discvar.features.symform.constants import Parametrization
from discvar.features.symform.domain.entities import GenericSetup, PolyMatrix, UnivariatePoly
from discvar.features.symform.exceptions import (
    SymformException,
    MatrixShapeError,
    MatrixSizeError,
    DegreeError,
    UnknownParametrizationError,
)

__all__ = [
    "Parametrization",
    "GenericSetup",
    "PolyMatrix",
    "UnivariatePoly",
    "SymformException",
    "MatrixShapeError",
    "MatrixSizeError",
    "DegreeError",
    "UnknownParametrizationError",
]
