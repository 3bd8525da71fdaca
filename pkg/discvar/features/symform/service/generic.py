"""Generic matrices: the symmetric matrix of unknowns and X = Y * D * Y^T"""
import logging
from typing import List, Optional, Tuple, Union

from sympy.polys.rings import PolyElement

from discvar.core.config import settings
from discvar.features.groebner.domain.entities import PolySystem
from discvar.features.poly.domain.entities import PolyContext
from discvar.features.symform.constants import MIN_GENERIC_SIZE, Parametrization
from discvar.features.symform.domain.entities import GenericSetup, PolyMatrix
from discvar.features.symform.exceptions import MatrixSizeError, UnknownParametrizationError
from discvar.features.symform.service.matrix_ops import matmul, outer, transpose
from discvar.shared.constants import eigen_variables, frame_variable, matrix_variable, matrix_variables

logger = logging.getLogger(__name__)


def generic_symmetric(n: int, context: Optional[PolyContext] = None) -> PolyMatrix:
    """[x_ij] with x_ji = x_ij, in QQ[x11, x12, ..., xnn] unless a wider context is given"""
    if n < 1:
        raise MatrixSizeError(f"Matrix size must be positive, got {n}", n)
    ctx = context or PolyContext(tuple(matrix_variables(n)))
    gens = ctx.gens()
    return PolyMatrix(
        tuple(tuple(gens[matrix_variable(i, j)] for j in range(1, n + 1)) for i in range(1, n + 1)),
        ctx,
    )


def _orthonormality(vectors: List[list], ctx: PolyContext) -> List:
    equations = []
    for a in range(len(vectors)):
        for b in range(a, len(vectors)):
            dot = sum((u * v for u, v in zip(vectors[a], vectors[b])), ctx.zero)
            equations.append(dot - 1 if a == b else dot)
    return equations


def _build_orthogonal(n: int) -> GenericSetup:
    frame = [frame_variable(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    ctx = PolyContext(tuple(frame + eigen_variables(n)))
    gens = ctx.gens()
    lam, *mus = eigen_variables(n)

    Y = PolyMatrix(
        tuple(tuple(gens[frame_variable(i, j)] for j in range(1, n + 1)) for i in range(1, n + 1)),
        ctx,
    )
    D = PolyMatrix.diagonal(ctx, [gens[lam], gens[lam]] + [gens[m] for m in mus])
    X = matmul(matmul(Y, D), transpose(Y))
    ortes = PolySystem(tuple(_orthonormality([list(r) for r in Y.rows], ctx)), ctx)
    return GenericSetup(n, Parametrization.ORTHOGONAL, ctx, D, Y, ortes, X)


def _build_columns(n: int) -> GenericSetup:
    columns = range(MIN_GENERIC_SIZE, n + 1)
    frame = [frame_variable(i, k) for k in columns for i in range(1, n + 1)]
    ctx = PolyContext(tuple(frame + eigen_variables(n)))
    gens = ctx.gens()
    lam, *mus = eigen_variables(n)

    Y = PolyMatrix(
        tuple(tuple(gens[frame_variable(i, k)] for k in columns) for i in range(1, n + 1)),
        ctx,
    )
    D = PolyMatrix.diagonal(ctx, [gens[lam], gens[lam]] + [gens[m] for m in mus])
    X = PolyMatrix.identity(ctx, n).scale(gens[lam])
    for offset, mu in enumerate(mus):
        X = X + outer(Y.column(offset), ctx).scale(gens[mu] - gens[lam])
    ortes = PolySystem(tuple(_orthonormality([Y.column(c) for c in range(len(mus))], ctx)), ctx)
    return GenericSetup(n, Parametrization.COLUMNS, ctx, D, Y, ortes, X)


def build_generic(n: int, parametrization: Union[str, Parametrization, None] = None) -> GenericSetup:
    """
    The generic matrix with eigenvalues lam, lam, mu1, ..., mu_{n-2}.

    Both parametrizations describe the same set of matrices: Y * D * Y^T is
    the sum of d_k * col_k * col_k^T, and the first two columns contribute
    lam * (I - sum of the others' outer products).
    """
    if n < MIN_GENERIC_SIZE:
        raise MatrixSizeError(f"Generic setup needs n >= {MIN_GENERIC_SIZE}, got {n}", n)
    try:
        kind = Parametrization(parametrization or settings.PARAMETRIZATION)
    except ValueError:
        raise UnknownParametrizationError(f"Unknown parametrization: {parametrization}")
    logger.info(f"Building generic {n}x{n} matrix ({kind.value} parametrization)")
    if kind == Parametrization.ORTHOGONAL:
        return _build_orthogonal(n)
    return _build_columns(n)


def elimination_form(setup: GenericSetup) -> Tuple[PolyMatrix, List[PolyElement]]:
    """
    X and extra equations to eliminate the frame from, spanning the same ideal as X with OrtEs.

    For the full frame, X - lam * (Y Y^T - I) drops the two columns paired with lam,
    and the column conditions Y^T Y - I lie in the ideal of OrtEs since
    det(Y)^2 = 1 there.
    """
    if setup.parametrization != Parametrization.ORTHOGONAL:
        return setup.X, []
    ctx = setup.context
    n = setup.n
    lam = ctx.gens()[setup.eigen_variables[0]]
    gram = matmul(setup.Y, transpose(setup.Y)) - PolyMatrix.identity(ctx, n)
    X = setup.X - gram.scale(lam)
    columns = _orthonormality([setup.Y.column(c) for c in range(n)], ctx)
    return X, columns
