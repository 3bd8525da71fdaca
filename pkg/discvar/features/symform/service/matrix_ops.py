"""Exact matrix algebra over polynomial rings"""
from typing import List, Optional

from sympy.polys.rings import PolyElement

from discvar.features.poly.service import change_context
from discvar.features.poly.domain.entities import PolyContext
from discvar.features.symform.constants import COFACTOR_MAX_SIZE
from discvar.features.symform.domain.entities import PolyMatrix
from discvar.features.symform.exceptions import MatrixShapeError


def transpose(M: PolyMatrix) -> PolyMatrix:
    rows, cols = M.shape
    return PolyMatrix(tuple(tuple(M[i, j] for i in range(rows)) for j in range(cols)), M.context)


def matmul(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    if A.context != B.context:
        B = B.map(lambda e: change_context(e, A.context))
    a_rows, a_cols = A.shape
    b_rows, b_cols = B.shape
    if a_cols != b_rows:
        raise MatrixShapeError(f"Cannot multiply {A.shape} by {B.shape}", B.shape)
    zero = A.context.zero
    rows = []
    for i in range(a_rows):
        row = []
        for j in range(b_cols):
            acc = zero
            for k in range(a_cols):
                a = A[i, k]
                if a:
                    b = B[k, j]
                    if b:
                        acc += a * b
            row.append(acc)
        rows.append(tuple(row))
    return PolyMatrix(tuple(rows), A.context)


def trace(M: PolyMatrix) -> PolyElement:
    n = M.size
    return sum((M[i, i] for i in range(n)), M.context.zero)


def is_symmetric(M: PolyMatrix) -> bool:
    """Entry-wise equality with the transpose, as polynomials"""
    if not M.is_square:
        return False
    n = M.size
    return all(M[i, j] == M[j, i] for i in range(n) for j in range(i + 1, n))


def _cofactor_det(rows: List[List[PolyElement]], zero: PolyElement) -> PolyElement:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    result = zero
    for j in range(n):
        a = rows[0][j]
        if not a:
            continue
        minor = [[r[c] for c in range(n) if c != j] for r in rows[1:]]
        term = a * _cofactor_det(minor, zero)
        result = result + term if j % 2 == 0 else result - term
    return result


def _pivot_row(rows: List[List[PolyElement]], k: int) -> Optional[int]:
    """Row at or below k with the sparsest nonzero entry in column k"""
    best = None
    for i in range(k, len(rows)):
        entry = rows[i][k]
        if entry and (best is None or len(entry) < len(rows[best][k])):
            best = i
    return best


def bareiss_det(rows: List[List[PolyElement]], one: PolyElement) -> PolyElement:
    """
    Fraction-free Gaussian elimination.

    Every division by the previous pivot is exact, so intermediate entries
    stay polynomials. A zero column below the diagonal means det = 0.
    """
    M = [list(r) for r in rows]
    n = len(M)
    sign = 1
    previous = one
    for k in range(n - 1):
        p = _pivot_row(M, k)
        if p is None:
            return one * 0
        if p != k:
            M[k], M[p] = M[p], M[k]
            sign = -sign
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (pivot * M[i][j] - M[i][k] * M[k][j]).exquo(previous)
            M[i][k] = one * 0
        previous = pivot
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det


def determinant(M: PolyMatrix) -> PolyElement:
    """Exact determinant; cofactor expansion for small sizes, Bareiss otherwise"""
    n = M.size
    rows = [list(r) for r in M.rows]
    if n <= COFACTOR_MAX_SIZE:
        return _cofactor_det(rows, M.context.zero)
    return bareiss_det(rows, M.context.one)


def to_context(M: PolyMatrix, target: PolyContext) -> PolyMatrix:
    """Re-express every entry in another context, matching variables by name"""
    return PolyMatrix(tuple(tuple(change_context(e, target) for e in r) for r in M.rows), target)


def outer(column: List[PolyElement], context: PolyContext) -> PolyMatrix:
    """column * column^T"""
    return PolyMatrix(tuple(tuple(a * b for b in column) for a in column), context)
