"""Tests for Buchberger's algorithm"""
import time

import pytest
import sympy

from discvar.features.groebner import GroebnerLimits, PolySystem, ReductionLimitExceeded, ResourceLimitExceeded
from discvar.features.groebner.service import (
    ReductionBudget,
    buchberger,
    compute_basis,
    is_groebner,
    reduce,
)
from discvar.features.poly import PolyContext
from discvar.features.poly.service import normalize_primitive, parse_text, to_text
from discvar.shared.test_base import xy_ctx, xy_lex_ctx


def _system(ctx, *texts):
    return PolySystem(tuple(parse_text(t, ctx) for t in texts), ctx)


def _sympy_basis_texts(ctx, texts, order):
    """Reduced basis from sympy, normalized the same way as ours"""
    symbols = sympy.symbols(" ".join(ctx.variables))
    exprs = [sympy.sympify(t.replace("^", "**")) for t in texts]
    basis = sympy.groebner(exprs, *symbols, order=order)
    return {to_text(normalize_primitive(ctx.ring.from_expr(e))) for e in basis.exprs}


@pytest.mark.unit
class TestBuchberger:
    """Reduced Groebner bases"""

    def test_single_variable_is_basis(self, xy_ctx):
        basis = buchberger(_system(xy_ctx, "x"))
        assert basis.generators == (xy_ctx.gen("x"),)
        assert basis.reduced

    def test_lex_elimination_of_x(self, xy_lex_ctx):
        basis = buchberger(_system(xy_lex_ctx, "x - y^2", "y - x^2"))
        texts = {to_text(g) for g in basis}
        assert "y^4 -y" in texts
        assert texts == {"x -y^2", "y^4 -y"}

    def test_orthogonality_n2(self):
        ctx = PolyContext(("y11", "y12", "y21", "y22"))
        ort = _system(
            ctx,
            "y11^2 + y12^2 - 1",
            "y21^2 + y22^2 - 1",
            "y11*y21 + y12*y22",
        )
        basis = buchberger(ort)
        assert reduce(parse_text("y11^2 + y12^2 - 1", ctx), basis) == 0
        assert is_groebner(basis)

    def test_idempotent(self, xy_ctx):
        basis = buchberger(_system(xy_ctx, "x^2*y - 1", "x*y^2 - x"))
        again, _ = compute_basis(PolySystem(basis.generators, xy_ctx))
        assert again == basis

    def test_not_a_basis(self, xy_lex_ctx):
        assert not is_groebner(_system(xy_lex_ctx, "x - y^2", "y - x^2"))

    def test_unit_ideal(self, xy_ctx):
        basis = buchberger(_system(xy_ctx, "x", "x - 1"))
        assert basis.is_unit()
        assert basis.generators == (xy_ctx.one,)

    def test_zero_ideal(self, xy_ctx):
        basis = buchberger(PolySystem((xy_ctx.zero,), xy_ctx))
        assert len(basis) == 0

    def test_primitive_integer_members(self, xy_ctx):
        basis = buchberger(_system(xy_ctx, "(1/3)*x^2 - y", "(2/5)*x*y - 1"))
        for g in basis:
            assert normalize_primitive(g) == g


@pytest.mark.unit
class TestSympyAgreement:
    """Bases agree with sympy.groebner after normalization"""

    @pytest.mark.parametrize(
        "texts",
        [
            ["x - y^2", "y - x^2"],
            ["x^2*y - 1", "x*y^2 - x"],
            ["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"],
        ],
    )
    def test_grevlex(self, xy_ctx, texts):
        ours = {to_text(g) for g in buchberger(_system(xy_ctx, *texts))}
        assert ours == _sympy_basis_texts(xy_ctx, texts, "grevlex")

    def test_lex(self, xy_lex_ctx):
        texts = ["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]
        ours = {to_text(g) for g in buchberger(_system(xy_lex_ctx, *texts))}
        assert ours == _sympy_basis_texts(xy_lex_ctx, texts, "lex")


@pytest.mark.unit
class TestLimits:
    """Resource limits abort with partial progress"""

    def test_pair_limit(self):
        ctx = PolyContext(("a", "b", "c"))
        cyclic = _system(ctx, "a + b + c", "a*b + b*c + c*a", "a*b*c - 1")
        with pytest.raises(ResourceLimitExceeded) as exc:
            compute_basis(cyclic, GroebnerLimits(max_pairs=1, max_coeff_bits=4096))
        assert exc.value.pairs_done == 2
        assert exc.value.basis_size >= 3

    def test_stats(self):
        ctx = PolyContext(("a", "b", "c"))
        cyclic = _system(ctx, "a + b + c", "a*b + b*c + c*a", "a*b*c - 1")
        basis, stats = compute_basis(cyclic)
        assert stats.basis_size == len(basis)
        assert stats.pairs_processed >= stats.zero_reductions
        assert is_groebner(basis)

    def test_step_limit_inside_reduction(self):
        ctx = PolyContext(("a", "b", "c"))
        cyclic = _system(ctx, "a + b + c", "a*b + b*c + c*a", "a*b*c - 1")
        with pytest.raises(ResourceLimitExceeded) as exc:
            compute_basis(cyclic, GroebnerLimits(max_reduction_steps=1))
        assert isinstance(exc.value.__cause__, ReductionLimitExceeded)
        assert exc.value.pairs_done == 0
        assert "steps" in exc.value.message

    def test_time_limit(self):
        ctx = PolyContext(("a", "b", "c"))
        cyclic = _system(ctx, "a + b + c", "a*b + b*c + c*a", "a*b*c - 1")
        with pytest.raises(ResourceLimitExceeded) as exc:
            compute_basis(cyclic, GroebnerLimits(max_seconds=0.0))
        assert exc.value.message.startswith("Time limit")
        assert exc.value.pairs_done == 1


@pytest.mark.unit
class TestReductionBudget:
    """Reductions that count their steps and watch the clock"""

    def test_same_remainder_as_unbounded(self, xy_ctx):
        G = buchberger(_system(xy_ctx, "x^2 - y", "x*y - 1"))
        f = parse_text("x^5 + 3*x*y - y^3 + 7", xy_ctx)
        assert reduce(f, G, ReductionBudget(10**6)) == reduce(f, G)

    def test_irreducible_terms_move_to_remainder(self, xy_ctx):
        f = parse_text("x^3 + y^2 + 1", xy_ctx)
        G = [parse_text("x - 2", xy_ctx)]
        assert reduce(f, G, ReductionBudget(100)) == parse_text("y^2 + 9", xy_ctx)

    def test_step_limit(self, xy_ctx):
        x = xy_ctx.gen("x")
        with pytest.raises(ReductionLimitExceeded) as exc:
            reduce(x ** 10, [x - 1], ReductionBudget(3))
        assert exc.value.steps == 4

    def test_deadline(self, xy_ctx):
        x = xy_ctx.gen("x")
        with pytest.raises(ReductionLimitExceeded) as exc:
            reduce(x ** 2000, [x - 1], ReductionBudget(10**6, deadline=time.perf_counter() - 1.0))
        assert exc.value.steps == 1024

    def test_from_limits(self):
        assert ReductionBudget.from_limits(GroebnerLimits()).deadline is None
        budget = ReductionBudget.from_limits(GroebnerLimits(max_seconds=5.0, max_reduction_steps=7))
        assert budget.max_steps == 7
        assert budget.deadline > time.perf_counter()
