"""Symform services"""
from discvar.features.symform.service.matrix_ops import (
    transpose,
    matmul,
    trace,
    determinant,
    bareiss_det,
    is_symmetric,
    outer,
    to_context,
)
from discvar.features.symform.service.generic import generic_symmetric, build_generic, elimination_form
from discvar.features.symform.service.charpoly import (
    char_poly,
    sylvester_matrix,
    sylvester_resultant,
    discriminant_of,
    discriminant,
    discriminant_degrees,
    DiscriminantDegrees,
)

__all__ = [
    "transpose",
    "matmul",
    "trace",
    "determinant",
    "bareiss_det",
    "is_symmetric",
    "outer",
    "to_context",
    "generic_symmetric",
    "build_generic",
    "elimination_form",
    "char_poly",
    "sylvester_matrix",
    "sylvester_resultant",
    "discriminant_of",
    "discriminant",
    "discriminant_degrees",
    "DiscriminantDegrees",
]
