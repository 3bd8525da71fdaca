"""Numeric and exact ranks by row elimination"""
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from discvar.core.config import settings
from discvar.features.numgeo.domain.entities import StaircaseTrace
from discvar.features.numgeo.exceptions import DimensionMismatchError


def rank_with_tol(vectors: Sequence[Sequence[float]], tol: Optional[float] = None, floor: float = 0.0) -> int:
    """
    Numerical rank by Gaussian elimination with partial pivoting.

    A pivot counts when it exceeds max(tol * max|entry|, floor). The
    absolute floor matters when every entry is rounding noise.
    """
    M = np.array(vectors, dtype=float)
    if M.ndim != 2 or M.shape[0] == 0:
        raise DimensionMismatchError("rank_with_tol needs a nonempty list of equal-length vectors")
    tol = settings.RANK_TOL if tol is None else tol
    biggest = float(np.max(np.abs(M))) if M.size else 0.0
    threshold = max(tol * biggest, floor)
    if biggest <= threshold:
        return 0

    rows, cols = M.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivot = rank + int(np.argmax(np.abs(M[rank:, col])))
        if abs(M[pivot, col]) <= threshold:
            continue
        if pivot != rank:
            M[[rank, pivot]] = M[[pivot, rank]]
        factors = M[rank + 1:, col] / M[rank, col]
        M[rank + 1:] -= factors[:, None] * M[rank]
        M[rank + 1:, col] = 0.0
        rank += 1
    return rank


def _fraction_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def row_echelon(rows: Sequence[Sequence]) -> StaircaseTrace:
    """
    Exact staircase form over the rationals.

    Each column is cleared below its first nonzero entry; the operations are
    recorded with 1-based row numbers of the current arrangement.
    """
    M: List[List[Fraction]] = [[Fraction(x) for x in r] for r in rows]
    if not M:
        return StaircaseTrace(rows=[], rank=0)
    width = len(M[0])
    if any(len(r) != width for r in M):
        raise DimensionMismatchError("Rows of different lengths")

    steps: List[str] = []
    rank = 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(M)) if M[i][col] != 0), None)
        if pivot is None:
            continue
        if pivot != rank:
            M[rank], M[pivot] = M[pivot], M[rank]
            steps.append(f"swap rows {rank + 1} and {pivot + 1}")
        for i in range(rank + 1, len(M)):
            if M[i][col] == 0:
                continue
            factor = M[i][col] / M[rank][col]
            M[i] = [a - factor * b for a, b in zip(M[i], M[rank])]
            steps.append(f"row {i + 1} -= ({_fraction_text(factor)}) * row {rank + 1}")
        rank += 1
    return StaircaseTrace(rows=M, rank=rank, steps=steps)
