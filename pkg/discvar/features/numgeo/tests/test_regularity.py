"""Tests for Jacobian ranks on and off the variety"""
import numpy as np
import pytest

from discvar.features.numgeo import DimensionMismatchError, SymMatrixN
from discvar.features.numgeo.service import (
    exp_v_jacobian,
    exp_v_rank_check,
    jacobian_rank_at,
    system_jacobian,
)
from discvar.features.variety.service import discriminant_points, scalar_points
from discvar.shared.test_base import derivation_n3, rels_s


@pytest.mark.slow
class TestComputedRelationsRank:
    """Co-dimension two: Jacobian ranks of the computed RelsS"""

    def test_rank_two_on_regular_points(self, derivation_n3):
        for p in discriminant_points(3, 100, seed=42):
            assert jacobian_rank_at(derivation_n3.rels_s, SymMatrixN(p)) == 2

    def test_rank_zero_at_origin(self, derivation_n3):
        assert jacobian_rank_at(derivation_n3.rels_s, SymMatrixN(np.zeros((3, 3)))) == 0

    def test_rank_drops_at_scalars(self, derivation_n3):
        for p in scalar_points(3, 10, seed=42):
            assert jacobian_rank_at(derivation_n3.rels_s, SymMatrixN(p)) < 2


@pytest.mark.unit
class TestSystemJacobian:
    """Partial derivatives of the printed simplified relations"""

    def test_printed_rank_two(self, rels_s):
        for p in discriminant_points(3, 10, seed=7):
            assert jacobian_rank_at(rels_s, SymMatrixN(p)) == 2

    def test_shape(self, rels_s):
        jac, scales = system_jacobian(rels_s, SymMatrixN.diag([1.0, 1.0, -2.0]))
        assert jac.shape == (len(rels_s), 6)
        assert len(scales) == len(rels_s)

    def test_wrong_size_rejected(self, rels_s):
        with pytest.raises(DimensionMismatchError):
            system_jacobian(rels_s, SymMatrixN.diag([1.0, 2.0]))


@pytest.mark.unit
class TestExpChart:
    """The exponential chart of Orbit(diag(a, a, b)) at zero"""

    def test_rank_two(self):
        assert exp_v_rank_check(SymMatrixN.diag([1.0, 1.0, -2.0])) == 2

    def test_scalar_rank_zero(self):
        assert exp_v_rank_check(SymMatrixN.scalar(3, 2.0)) == 0

    def test_entries_are_differences(self):
        a, b = 1.0, -2.0
        jac = exp_v_jacobian(SymMatrixN.diag([a, a, b]))
        assert jac.shape == (6, 2)
        # upper coordinates (1,1) (1,2) (1,3) (2,2) (2,3) (3,3)
        assert jac[4, 0] == pytest.approx(b - a, abs=1e-6)
        assert jac[2, 1] == pytest.approx(b - a, abs=1e-6)
        assert np.allclose(jac[[0, 1, 3, 5], :], 0.0, atol=1e-6)

    def test_needs_n_three(self):
        with pytest.raises(DimensionMismatchError):
            exp_v_jacobian(SymMatrixN.diag([1.0, 1.0, 1.0, -3.0]))
