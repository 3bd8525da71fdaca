"""Tests for substitution, context changes and parameter specialization"""
from fractions import Fraction

import pytest

from discvar.features.poly import PolyContext, context_of
from discvar.features.poly.exceptions import (
    ContextMismatchError,
    PolyException,
    UnknownVariableError,
)
from discvar.features.poly.service import (
    change_context,
    parse_text,
    specialize_parameter,
    substitute,
)
from discvar.shared.constants import eigen_variables, matrix_variables
from discvar.shared.test_base import golden, k_ctx, xs3_ctx, xy_ctx


@pytest.mark.unit
class TestSubstitute:
    """Variable substitution"""

    def test_trace_form_vanishes(self, xs3_ctx):
        g = xs3_ctx.gens()
        p = g["x11"] + g["x22"] + g["x33"]
        result = substitute(p, {"x11": -g["x22"] - g["x33"]})
        assert result == 0
        assert "x11" not in context_of(result).variables

    def test_constant_binding(self, xs3_ctx):
        g = xs3_ctx.gens()
        result = substitute(g["x12"] ** 2 * g["x23"], {"x23": 1})
        target = xs3_ctx.without(["x23"])
        assert result == target.gen("x12") ** 2

    def test_diagonal_matrix_kills_golden_member(self, golden):
        ctx = PolyContext(tuple(matrix_variables(3) + eigen_variables(3)))
        lam, mu = ctx.gen("lam"), ctx.gen("mu1")
        bindings = {name: 0 for name in matrix_variables(3)}
        bindings.update({"x11": lam, "x22": lam, "x33": mu})
        for text in golden["rels_s_n3"]["polynomials"]:
            assert substitute(parse_text(text, ctx), bindings) == 0

    def test_full_binding_keeps_context(self, xy_ctx):
        x, y = xy_ctx.gen("x"), xy_ctx.gen("y")
        result = substitute(x * y + 1, {"x": 2, "y": Fraction(1, 2)})
        assert result == 2
        assert result.ring == xy_ctx.ring

    def test_unknown_variable(self, xy_ctx):
        with pytest.raises(UnknownVariableError):
            substitute(xy_ctx.gen("x"), {"z": 1})


@pytest.mark.unit
class TestChangeContext:
    """Embedding into larger and smaller contexts"""

    def test_embed_and_project(self, xy_ctx):
        big = PolyContext(("t", "x", "y"))
        p = xy_ctx.gen("x") ** 2 - xy_ctx.gen("y")
        lifted = change_context(p, big)
        assert lifted == big.gen("x") ** 2 - big.gen("y")
        assert change_context(lifted, xy_ctx) == p

    def test_missing_variable(self, xy_ctx):
        small = PolyContext(("x",))
        with pytest.raises(UnknownVariableError):
            change_context(xy_ctx.gen("y"), small)

    def test_qq_embeds_into_qk(self, xy_ctx, k_ctx):
        p = xy_ctx.gen("x") + xy_ctx.constant(Fraction(1, 3))
        assert change_context(p, k_ctx) == k_ctx.gen("x") + k_ctx.constant(Fraction(1, 3))

    def test_parameter_cannot_be_dropped(self, k_ctx, xy_ctx):
        with pytest.raises(ContextMismatchError):
            change_context(k_ctx.gen("x"), xy_ctx)


@pytest.mark.unit
class TestSpecializeParameter:
    """k -> rational value"""

    def test_specialize(self, k_ctx):
        p = parse_text("k*x + 1/(k+1)", k_ctx)
        result = specialize_parameter(p, 1)
        ctx = k_ctx.with_parameter(None)
        assert result == ctx.gen("x") + ctx.constant(Fraction(1, 2))

    def test_pole(self, k_ctx):
        p = parse_text("x/(k-1)", k_ctx)
        with pytest.raises(PolyException):
            specialize_parameter(p, 1)
