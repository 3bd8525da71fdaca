"""Numeric geometry constants"""
from enum import Enum
from fractions import Fraction

# Cyclic Jacobi termination
JACOBI_MAX_SWEEPS = 100
JACOBI_OFF_TOL = 1e-12

# Rotations and orthogonality checks
ORTHOGONALITY_TOL = 1e-10
AXIS_NORM_TOL = 1e-12

# Finite differences for the exponential chart
FD_STEP = 1e-6
EXP_V_RANK_TOL = 1e-5

# Angular grid over the circumference family, per axis
CIRCUMFERENCE_GRID = 64

# The orbit point of the projective-plane embedding
EMBEDDING_DIAGONAL = (1.0, 1.0, -2.0)

# Entries of the 45 degree rotations of diag(1, 1, -2) used by the singularity witness
WITNESS_A = Fraction(-1, 2)
WITNESS_B = Fraction(-3, 2)
# Largest entry gap allowed between a listed witness matrix and its construction
WITNESS_DEVIATION_TOL = 1e-12


class SpectrumKind(str, Enum):
    """Position of an eigenvalue multiset relative to the discriminant variety"""
    SIMPLE = "simple"        # n distinct values, not on the variety
    MAXIMAL = "maximal"      # n - 1 distinct values
    NARROWED = "narrowed"    # between 2 and n - 2 distinct values
    SCALAR = "scalar"        # one value
