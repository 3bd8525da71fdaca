"""Characteristic polynomials, resultants and the discriminant of a symmetric matrix"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from sympy.polys.rings import PolyElement

from discvar.features.poly.service import change_context, total_degree
from discvar.features.symform.domain.entities import PolyMatrix, UnivariatePoly
from discvar.features.symform.exceptions import DegreeError, MatrixSizeError, MatrixShapeError
from discvar.features.symform.service.generic import generic_symmetric
from discvar.features.symform.service.matrix_ops import determinant
from discvar.shared.constants import CHARPOLY_NAME

logger = logging.getLogger(__name__)


def char_poly(M: PolyMatrix, var: str = CHARPOLY_NAME) -> UnivariatePoly:
    """det(var * I - M), monic of degree n, coefficients in the context of M"""
    n = M.size
    ctx = M.context
    if var in ctx.variables:
        raise MatrixShapeError(f"Characteristic variable {var} clashes with a matrix variable")

    ext = ctx.extend([var])
    t = ext.gen(var)
    shifted = PolyMatrix(
        tuple(
            tuple((t if i == j else ext.zero) - change_context(M[i, j], ext) for j in range(n))
            for i in range(n)
        ),
        ext,
    )
    det = determinant(shifted)

    buckets = [dict() for _ in range(n + 1)]
    for monom, coeff in det.items():
        buckets[monom[-1]][monom[:-1]] = coeff
    coefficients = tuple(ctx.ring.from_dict(terms) for terms in buckets)
    return UnivariatePoly(coefficients, ctx, var)


def sylvester_matrix(p: UnivariatePoly, q: UnivariatePoly) -> PolyMatrix:
    """deg q shifted rows of p followed by deg p shifted rows of q, highest power first"""
    m, k = p.degree, q.degree
    size = m + k
    zero = p.context.zero
    rows = []
    for shift in range(k):
        row = [zero] * size
        for i, c in enumerate(reversed(p.coefficients)):
            row[shift + i] = c
        rows.append(tuple(row))
    for shift in range(m):
        row = [zero] * size
        for i, c in enumerate(reversed(q.coefficients)):
            row[shift + i] = c
        rows.append(tuple(row))
    return PolyMatrix(tuple(rows), p.context)


def sylvester_resultant(p: UnivariatePoly, q: UnivariatePoly) -> PolyElement:
    """Res(p, q) as the determinant of the Sylvester matrix"""
    if p.context != q.context:
        q = UnivariatePoly(tuple(change_context(c, p.context) for c in q.coefficients), p.context, q.var)
    if p.is_zero() or q.is_zero():
        raise DegreeError("Resultant of a zero polynomial")
    if p.degree < 1 or q.degree < 1:
        raise DegreeError(f"Resultant needs positive degrees, got {p.degree} and {q.degree}")
    return determinant(sylvester_matrix(p, q))


def discriminant_of(p: UnivariatePoly) -> PolyElement:
    """(-1)^(d(d-1)/2) * Res(p, p') for monic p of degree d"""
    if not p.is_monic():
        raise DegreeError("Discriminant is normalized for monic polynomials only")
    d = p.degree
    res = sylvester_resultant(p, p.derivative())
    return res if (d * (d - 1) // 2) % 2 == 0 else -res


@lru_cache(maxsize=8)
def _discriminant(n: int) -> PolyElement:
    X = generic_symmetric(n)
    logger.info(f"Computing discriminant of the generic {n}x{n} symmetric matrix")
    disc = discriminant_of(char_poly(X))
    logger.info(f"Discriminant has {len(disc)} terms and degree {total_degree(disc)}")
    return disc


def discriminant(n: int) -> PolyElement:
    """
    Discriminant of the characteristic polynomial of [x_ij] in Xs.

    Normalized so that it equals the product of (lambda_i - lambda_j)^2 over
    the eigenvalues; it vanishes exactly on matrices with a multiple eigenvalue.
    """
    if n < 2:
        raise MatrixSizeError(f"Discriminant needs n >= 2, got {n}", n)
    return _discriminant(n).copy()


@dataclass(frozen=True)
class DiscriminantDegrees:
    """Degree of the discriminant: the n(n-1) of the general formula and the 2n stated for the variety"""

    n: int
    standard: int
    stated: int
    computed: Optional[int] = None

    @property
    def agree(self) -> bool:
        return self.standard == self.stated


def discriminant_degrees(n: int, disc: Optional[PolyElement] = None) -> DiscriminantDegrees:
    return DiscriminantDegrees(
        n=n,
        standard=n * (n - 1),
        stated=2 * n,
        computed=None if disc is None else total_degree(disc),
    )
