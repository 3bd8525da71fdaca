"""Shared constants for the application"""

from typing import List

# Version of every JSON document emitted by the CLI
SCHEMA_VERSION = 1

# Name of the rational-function parameter of 1-orbit systems
PARAMETER_NAME = "k"

# Eigenvalue variables of the generic diagonal matrix
LAMBDA_NAME = "lam"
MU_PREFIX = "mu"

# Fresh variable of the Rabinowitsch extension
RABINOWITSCH_NAME = "t_rab"

# Variable of characteristic polynomials
CHARPOLY_NAME = "t"


def matrix_variable(i: int, j: int) -> str:
    """Name of the (i, j) entry of the generic symmetric matrix, 1-based, i <= j"""
    if i > j:
        i, j = j, i
    return f"x{i}{j}"


def matrix_variables(n: int) -> List[str]:
    """Upper-triangle variables x11 > x12 > ... > x1n > x22 > ... > xnn"""
    return [matrix_variable(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def frame_variable(i: int, j: int) -> str:
    """Entry (i, j) of the generic change matrix Y, 1-based"""
    return f"y{i}{j}"


def eigen_variables(n: int) -> List[str]:
    """lam, mu1, ..., mu_{n-2}"""
    return [LAMBDA_NAME] + [f"{MU_PREFIX}{i}" for i in range(1, n - 1)]
