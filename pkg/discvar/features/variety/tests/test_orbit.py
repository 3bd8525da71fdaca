"""Tests for orbit equations and homotheties between orbits"""
from fractions import Fraction

import numpy as np
import pytest

from discvar.features.numgeo import EigenMultiset, SymMatrixN
from discvar.features.poly.service import evaluate_numeric, normalize_primitive, parse_text, to_text
from discvar.features.variety import EigenvalueError, GoldenMatch, Homothety
from discvar.features.variety.service import (
    golden_compare,
    homothety_parameters,
    load_golden_system,
    max_residual,
    orbit_ideal_viete,
    orbit_minimal_eqs,
    orbit_points,
)
from discvar.shared.constants import matrix_variables
from discvar.shared.test_base import no_cache, xs3_ctx

BASE = EigenMultiset.of((1, 1, -2))


def _at(system, values):
    point = SymMatrixN.diag(values).to_point()
    return [evaluate_numeric(p, point) for p in system]


@pytest.mark.unit
class TestVieteSystem:
    """Discriminant plus characteristic polynomial coefficients"""

    def test_has_n_plus_one_equations(self):
        assert len(orbit_ideal_viete(BASE)) == 4

    def test_contains_trace_equation(self, xs3_ctx):
        system = orbit_ideal_viete(BASE)
        trace = parse_text("x11 + x22 + x33", xs3_ctx)
        assert trace in [normalize_primitive(p) for p in system]

    def test_vanishes_exactly_on_the_spectrum(self):
        assert _at(orbit_ideal_viete(BASE), (1.0, 1.0, -2.0)) == pytest.approx([0.0] * 4, abs=1e-12)
        assert any(abs(v) > 0.1 for v in _at(orbit_ideal_viete(BASE), (1.0, -2.0, 1.0 + 0.5)))

    def test_determinant_equation(self, xs3_ctx):
        system = orbit_ideal_viete(BASE)
        # det(X) = -2 at every point of the orbit; diag(2, 1, -1) has determinant -2 but another trace
        values = _at(system, (2.0, 1.0, -1.0))
        assert values[1] == pytest.approx(0.0, abs=1e-12)

    def test_vanishes_on_orbit_samples(self):
        points = orbit_points(SymMatrixN.diag((1.0, 1.0, -2.0)), 200, seed=7)
        assert max_residual(orbit_ideal_viete(BASE), points) < 1e-9

    def test_needs_rational_eigenvalues(self):
        with pytest.raises(EigenvalueError):
            orbit_ideal_viete(EigenMultiset.of([1.0, 1.0, -2.0]))


@pytest.mark.slow
class TestOrbitMinimalEqs:
    """Elimination with the eigenvalues pinned"""

    def test_printed_orbit_equations(self, no_cache):
        orbit = orbit_minimal_eqs(BASE, cache=no_cache)
        assert orbit.ambient_dim == 6
        assert sorted(orbit.equations.degrees()) == [1, 2, 2, 2, 2]
        assert golden_compare(orbit.equations, load_golden_system("orbit_eqs_1_1_m2")) != GoldenMatch.DIFFERENT

    def test_vanishes_on_orbit_samples(self, no_cache):
        orbit = orbit_minimal_eqs(BASE, cache=no_cache)
        points = orbit_points(SymMatrixN.diag((1.0, 1.0, -2.0)), 1000, seed=11)
        assert max_residual(orbit.equations, points) < 1e-9

    def test_scalar_orbit_is_a_point(self, no_cache):
        orbit = orbit_minimal_eqs(EigenMultiset.of((0, 0, 0)), cache=no_cache)
        assert {to_text(normalize_primitive(p)) for p in orbit.equations} == set(matrix_variables(3))

    def test_homothetic_orbit(self, no_cache):
        h = Homothety(shift=Fraction(1, 2), factor=Fraction(2))
        target = EigenMultiset.of([h.apply(Fraction(v)) for v in (1, 1, -2)])
        orbit = orbit_minimal_eqs(target, cache=no_cache)
        points = orbit_points(SymMatrixN.diag((1.0, 1.0, -2.0)), 500, seed=3)
        moved = 2.0 * (points + 0.5 * np.eye(3)[None, :, :])
        assert max_residual(orbit.equations, moved) < 1e-9


@pytest.mark.unit
class TestOrbitPreconditions:
    """Eigenvalue multisets the orbit equations reject"""

    def test_simple_spectrum_rejected(self):
        with pytest.raises(EigenvalueError):
            orbit_minimal_eqs(EigenMultiset.of((1, 2, 3)))

    def test_numeric_values_rejected(self):
        with pytest.raises(EigenvalueError):
            orbit_minimal_eqs(EigenMultiset.of([1.0, 1.0, -2.0]))


@pytest.mark.unit
class TestHomothetyParameters:
    """Shift and factor between orbits with matching multiplicities"""

    def test_positive_factor(self):
        h = homothety_parameters(BASE, EigenMultiset.of((3, 3, -3)))
        assert h == Homothety(shift=Fraction(1, 2), factor=Fraction(2))

    def test_negative_factor(self):
        h = homothety_parameters(BASE, EigenMultiset.of((2, -1, -1)))
        assert h == Homothety(shift=Fraction(0), factor=Fraction(-1))
        assert sorted(h.apply(Fraction(v)) for v in (1, 1, -2)) == [-1, -1, 2]

    def test_scalar_orbits_shift_only(self):
        h = homothety_parameters(EigenMultiset.of((1, 1, 1)), EigenMultiset.of((4, 4, 4)))
        assert h == Homothety(shift=Fraction(3), factor=Fraction(1))

    def test_mismatched_patterns_raise(self):
        with pytest.raises(EigenvalueError):
            homothety_parameters(BASE, EigenMultiset.of((1, 2, 3)))
