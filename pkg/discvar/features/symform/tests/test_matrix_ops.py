"""Tests for polynomial matrix algebra"""
import pytest
import sympy

from discvar.features.poly.domain.entities import PolyContext
from discvar.features.poly.service import parse_text
from discvar.features.symform import MatrixShapeError, PolyMatrix
from discvar.features.symform.service import (
    bareiss_det,
    determinant,
    generic_symmetric,
    is_symmetric,
    matmul,
    trace,
    transpose,
)
from discvar.shared.errors import UsageError
from discvar.shared.test_base import xy_ctx


def _matrix(ctx, rows):
    return PolyMatrix.from_rows([[parse_text(str(e), ctx) for e in r] for r in rows], ctx)


@pytest.mark.unit
class TestShapes:
    """Construction, products and transposes"""

    def test_ragged_rows_rejected(self, xy_ctx):
        with pytest.raises(MatrixShapeError):
            PolyMatrix.from_rows([[1, 2], [3]], xy_ctx)

    def test_matmul_rectangular(self, xy_ctx):
        A = _matrix(xy_ctx, [["x", "y", "1"]])
        B = transpose(A)
        assert B.shape == (3, 1)
        product = matmul(A, B)
        assert product.shape == (1, 1)
        assert product[0, 0] == parse_text("x^2 + y^2 + 1", xy_ctx)

    def test_matmul_shape_mismatch(self, xy_ctx):
        A = _matrix(xy_ctx, [["x", "y"]])
        with pytest.raises(MatrixShapeError):
            matmul(A, A)

    def test_trace_needs_square(self, xy_ctx):
        with pytest.raises(UsageError):
            trace(_matrix(xy_ctx, [["x", "y"]]))

    def test_symmetry(self, xy_ctx):
        assert is_symmetric(_matrix(xy_ctx, [["x", "x*y"], ["y*x", "1"]]))
        assert not is_symmetric(_matrix(xy_ctx, [["x", "y"], ["x", "1"]]))
        assert not is_symmetric(_matrix(xy_ctx, [["x", "y"]]))

    def test_generic_symmetric_layout(self):
        X = generic_symmetric(3)
        assert X.context.variables == ("x11", "x12", "x13", "x22", "x23", "x33")
        assert X[2, 0] == X.context.gen("x13")
        assert is_symmetric(X)


@pytest.mark.unit
class TestDeterminant:
    """Cofactor expansion and Bareiss elimination"""

    def test_two_by_two(self, xy_ctx):
        M = _matrix(xy_ctx, [["x", "y"], ["y", "x"]])
        assert determinant(M) == parse_text("x^2 - y^2", xy_ctx)

    def test_pivot_swap_flips_sign(self, xy_ctx):
        rows = [[xy_ctx.zero, xy_ctx.one], [xy_ctx.one, xy_ctx.zero]]
        assert bareiss_det(rows, xy_ctx.one) == -1

    def test_singular(self, xy_ctx):
        M = _matrix(xy_ctx, [["x", "y", "1"], ["2*x", "2*y", "2"], ["1", "x", "y"]])
        assert determinant(M) == 0
        assert bareiss_det([list(r) for r in M.rows], xy_ctx.one) == 0

    def test_bareiss_matches_cofactors(self):
        X = generic_symmetric(3)
        assert bareiss_det([list(r) for r in X.rows], X.context.one) == determinant(X)

    def test_four_by_four_against_sympy(self):
        X = generic_symmetric(4)
        names = X.context.variables
        symbols = {name: sympy.Symbol(name) for name in names}
        oracle = sympy.Matrix(4, 4, lambda i, j: symbols[f"x{min(i, j) + 1}{max(i, j) + 1}"]).det()
        assert determinant(X) == X.context.ring.from_expr(sympy.expand(oracle))

    def test_parametric_entries(self):
        ctx = PolyContext(("x",), parameter="k")
        k = ctx.ring.ground_new(ctx.param())
        x = ctx.gen("x")
        rows = [[k, x, ctx.zero, ctx.zero],
                [x, k, ctx.zero, ctx.zero],
                [ctx.zero, ctx.zero, ctx.one, x],
                [ctx.zero, ctx.zero, x, ctx.one]]
        det = determinant(PolyMatrix.from_rows(rows, ctx))
        assert det == (k ** 2 - x ** 2) * (1 - x ** 2)
