"""Tests for the 1-orbits of diag(1, 1, -2) about e1 + k e2"""
from fractions import Fraction
import math

import numpy as np
import pytest

from discvar.features.groebner import PolySystem
from discvar.features.numgeo import SymMatrixN
from discvar.features.numgeo.service import circumference_family, uniform_angles
from discvar.features.poly.domain.entities import PolyContext
from discvar.features.poly.service import parse_text
from discvar.features.variety import EllipseShapeError, GoldenMatch
from discvar.features.variety.service import (
    determinant_residual,
    ellipse_form,
    golden_compare,
    load_golden_system,
    max_residual,
    one_orbit_limit_infinity,
    solved_matrix,
    specialize_k,
)
from discvar.features.variety.service.one_orbit import _axis_system, _rodrigues_system
from discvar.shared.constants import PARAMETER_NAME, matrix_variables
from discvar.shared.test_base import one_orbit_symbolic, xs3_ctx

D = SymMatrixN.diag((1.0, 1.0, -2.0))


def _circle(k: float) -> np.ndarray:
    return np.array([X.array for X in circumference_family(D, math.atan(k), uniform_angles(64))])


@pytest.mark.unit
class TestChartSystems:
    """Equation systems before elimination"""

    def test_axis_system_shape(self):
        system, frame = _axis_system()
        assert len(frame) == 9
        assert len(system) == 6 + 6 + 3
        assert system.context.parameter == PARAMETER_NAME

    def test_rodrigues_system_shape(self):
        system, chart = _rodrigues_system()
        assert chart == ("c", "s")
        assert len(system) == 7
        assert system.context.variables[2:] == tuple(matrix_variables(3))


@pytest.mark.slow
class TestSymbolicOneOrbit:
    """The system over QQ(k)"""

    def test_matches_printed_listing(self, one_orbit_symbolic):
        assert golden_compare(one_orbit_symbolic, load_golden_system("one_orbit_eqs")) == GoldenMatch.IDENTICAL

    def test_completed_square(self, one_orbit_symbolic):
        form = ellipse_form(one_orbit_symbolic)
        ctx = one_orbit_symbolic.context
        assert (form.square_variable, form.shifted_variable) == ("x23", "x33")
        assert parse_text(form.axis_coefficient, ctx) == parse_text("k^2 + 1", ctx)
        assert parse_text(form.centre, ctx) == ctx.constant(Fraction(-1, 2))
        assert form.radius_squared_value == Fraction(9, 4)

    @pytest.mark.parametrize("k", [Fraction(1), Fraction(2), Fraction(-1, 3)])
    def test_specialization_vanishes_on_circle(self, one_orbit_symbolic, k):
        assert max_residual(specialize_k(one_orbit_symbolic, k), _circle(float(k))) < 1e-9


@pytest.mark.slow
class TestSpecializeZero:
    """k = 0: the circle about e1"""

    def test_matches_printed_listing(self, one_orbit_symbolic):
        k0 = specialize_k(one_orbit_symbolic, 0)
        assert golden_compare(k0, load_golden_system("one_orbit_k0")) != GoldenMatch.DIFFERENT

    def test_solved_matrix(self, one_orbit_symbolic, xs3_ctx):
        M = solved_matrix(specialize_k(one_orbit_symbolic, 0))
        expected = [
            ["1", "0", "0"],
            ["0", "-x33 - 1", "x23"],
            ["0", "x23", "x33"],
        ]
        for i in range(3):
            for j in range(3):
                assert M[i, j] == parse_text(expected[i][j], xs3_ctx)

    def test_radius(self, one_orbit_symbolic, xs3_ctx):
        form = ellipse_form(specialize_k(one_orbit_symbolic, 0))
        assert form.radius_squared_value == Fraction(9, 4)
        assert parse_text(form.axis_coefficient, xs3_ctx) == xs3_ctx.one

    def test_determinant_is_minus_two(self, one_orbit_symbolic):
        assert not determinant_residual(specialize_k(one_orbit_symbolic, 0))

    def test_vanishes_on_circle(self, one_orbit_symbolic):
        assert max_residual(specialize_k(one_orbit_symbolic, 0), _circle(0.0)) < 1e-9


@pytest.mark.slow
class TestLimitInfinity:
    """k -> infinity: the circle about e2"""

    def test_matches_printed_listing(self, one_orbit_symbolic):
        limit = one_orbit_limit_infinity(one_orbit_symbolic)
        assert golden_compare(limit, load_golden_system("one_orbit_k_infinity")) != GoldenMatch.DIFFERENT

    def test_middle_entry_is_one(self, one_orbit_symbolic, xs3_ctx):
        M = solved_matrix(one_orbit_limit_infinity(one_orbit_symbolic))
        assert M[1, 1] == xs3_ctx.one
        assert M[0, 0] == parse_text("-x33 - 1", xs3_ctx)

    def test_same_radius_as_k_zero(self, one_orbit_symbolic):
        limit = ellipse_form(one_orbit_limit_infinity(one_orbit_symbolic))
        assert limit.square_variable == "x13"
        assert limit.radius_squared_value == Fraction(9, 4)

    def test_vanishes_on_circle_about_e2(self, one_orbit_symbolic):
        limit = one_orbit_limit_infinity(one_orbit_symbolic)
        circle = circumference_family(D, math.pi / 2, uniform_angles(64))
        assert max_residual(limit, np.array([X.array for X in circle])) < 1e-9


@pytest.mark.unit
class TestEllipseForm:
    """Completing the square in a single quadric"""

    def test_shifted_circle(self, xs3_ctx):
        system = PolySystem((parse_text("x12", xs3_ctx), parse_text("x23^2 + x33^2 + x33 - 2", xs3_ctx)), xs3_ctx)
        form = ellipse_form(system)
        assert form.radius_squared_value == Fraction(9, 4)
        assert parse_text(form.centre, xs3_ctx) == xs3_ctx.constant(Fraction(-1, 2))

    def test_two_quadrics_rejected(self, xs3_ctx):
        system = PolySystem((parse_text("x23^2 - 1", xs3_ctx), parse_text("x33^2 - 1", xs3_ctx)), xs3_ctx)
        with pytest.raises(EllipseShapeError):
            ellipse_form(system)

    def test_mixed_term_rejected(self, xs3_ctx):
        system = PolySystem((parse_text("x23^2 + x23*x33 + x33^2 - 1", xs3_ctx),), xs3_ctx)
        with pytest.raises(EllipseShapeError):
            ellipse_form(system)

    def test_parametric_radius_has_no_value(self):
        ctx = PolyContext(tuple(matrix_variables(3)), parameter=PARAMETER_NAME)
        system = PolySystem((parse_text("x23^2 + x33^2 - k", ctx),), ctx)
        assert ellipse_form(system).radius_squared_value is None
