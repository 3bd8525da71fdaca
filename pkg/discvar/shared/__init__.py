"""Shared utilities and base classes"""

from discvar.shared.constants import (
    SCHEMA_VERSION,
    PARAMETER_NAME,
    matrix_variable,
    matrix_variables,
    frame_variable,
    eigen_variables,
)
from discvar.shared.errors import UsageError

__all__ = [
    "SCHEMA_VERSION",
    "PARAMETER_NAME",
    "matrix_variable",
    "matrix_variables",
    "frame_variable",
    "eigen_variables",
    "UsageError",
]
