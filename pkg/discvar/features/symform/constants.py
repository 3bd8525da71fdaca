"""Symbolic form constants"""
from enum import Enum


class Parametrization(str, Enum):
    """How the generic matrix with a double eigenvalue is written down"""
    COLUMNS = "columns"
    ORTHOGONAL = "orthogonal"


# Smallest matrix size handled by build_generic
MIN_GENERIC_SIZE = 3

# Determinants up to this size are expanded by cofactors
COFACTOR_MAX_SIZE = 3
