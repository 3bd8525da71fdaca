"""Tests for the relation ideal, its simplification and the trace-zero restriction"""
import time
from dataclasses import replace

import pytest

from discvar.features.groebner import GroebnerLimits, PolySystem
from discvar.features.groebner.service import ideal_member, reduce
from discvar.features.poly.service import change_context, parse_text, total_degree
from discvar.features.symform.service import build_generic, discriminant
from discvar.features.variety import DerivationStatus, GoldenMatch
from discvar.features.variety.domain.entities import Derivation
from discvar.features.variety.service import (
    derive,
    derivation_report,
    golden_compare,
    graph_system,
    load_golden_system,
    relations_ideal_with_stats,
    restrict_trace_zero,
    simplify_system,
)
from discvar.features.variety.service.derivation import CHECK_DIAGONAL, verify_derivation
from discvar.shared.constants import matrix_variables
from discvar.shared.test_base import derivation_n3, no_cache, rels_s, xs3_ctx, xy_ctx


@pytest.mark.unit
class TestGraphSystem:
    """x_ij - X(i, j) together with OrtEs"""

    def test_columns_layout(self):
        setup = build_generic(3, "columns")
        system = graph_system(setup)
        assert system.context.variables[-6:] == tuple(matrix_variables(3))
        assert len(system) == 6 + len(setup.ortes)

    def test_full_frame_layout(self):
        setup = build_generic(3, "orthogonal")
        system = graph_system(setup)
        assert len(system) == 6 + 6 + 6
        assert system.context.variables[:11] == setup.context.variables

    def test_extra_equations_are_appended(self):
        setup = build_generic(3, "columns")
        lam = setup.context.gen(setup.eigen_variables[0])
        system = graph_system(setup, [lam - 1])
        assert len(system) == 6 + len(setup.ortes) + 1


@pytest.mark.unit
class TestSimplifySystem:
    """Removal of members with a power in the ideal of the rest"""

    def test_square_of_member_is_dropped(self, xy_ctx):
        x = xy_ctx.gen("x")
        result = simplify_system(PolySystem((x, x ** 2), xy_ctx))
        assert list(result) == [x]

    def test_multiple_is_dropped(self, xy_ctx):
        S = PolySystem((parse_text("x^2 - y^2", xy_ctx), parse_text("x - y", xy_ctx)), xy_ctx)
        assert list(simplify_system(S)) == [parse_text("x - y", xy_ctx)]

    def test_independent_members_survive_in_order(self, xy_ctx):
        S = PolySystem((parse_text("2*y", xy_ctx), parse_text("x^2 - 3", xy_ctx)), xy_ctx)
        result = simplify_system(S)
        assert list(result) == [parse_text("y", xy_ctx), parse_text("x^2 - 3", xy_ctx)]

    def test_idempotent(self, xy_ctx):
        S = PolySystem((parse_text("x^3 - x*y", xy_ctx), parse_text("x^2 - y", xy_ctx), parse_text("y^2", xy_ctx)), xy_ctx)
        once = simplify_system(S)
        assert list(simplify_system(once)) == list(once)


@pytest.mark.unit
class TestRestrictTraceZero:
    """Substitution x11 = -(x22 + ... + xnn)"""

    def test_trace_form_vanishes(self, xs3_ctx):
        S = PolySystem((parse_text("x11 + x22 + x33", xs3_ctx), parse_text("x12", xs3_ctx)), xs3_ctx)
        result = restrict_trace_zero(S)
        assert "x11" not in result.context.variables
        assert list(result) == [result.context.gen("x12")]

    def test_repeats_up_to_scalar_dropped(self, xs3_ctx):
        S = PolySystem((parse_text("x12 + x11 + x22 + x33", xs3_ctx), parse_text("2*x12", xs3_ctx)), xs3_ctx)
        result = restrict_trace_zero(S)
        assert list(result) == [result.context.gen("x12")]

    def test_keeps_members_not_a_basis(self, xs3_ctx):
        S = PolySystem((parse_text("x12*x13 - x23", xs3_ctx), parse_text("x12*x23 - x13", xs3_ctx)), xs3_ctx)
        result = restrict_trace_zero(S)
        assert len(result) == 2
        assert result.degrees() == [2, 2]

    @pytest.mark.slow
    def test_printed_restriction(self, rels_s):
        restricted = restrict_trace_zero(rels_s)
        assert set(restricted.degrees()) == {3}
        assert len(restricted) <= len(rels_s)
        assert golden_compare(restricted, load_golden_system("m0eqs_n3")) != GoldenMatch.DIFFERENT


@pytest.mark.slow
class TestRelationsIdeal:
    """Rels for n = 3"""

    def test_degree_profile(self, no_cache):
        rels, stats = relations_ideal_with_stats(3, cache=no_cache)
        assert rels.degrees().count(3) == 7
        assert min(rels.degrees()) >= 3
        assert stats is not None and stats.pairs_processed > 0

    def test_discriminant_is_a_member(self, derivation_n3):
        rels = derivation_n3.rels
        assert not reduce(change_context(discriminant(3), rels.context), rels)

    def test_no_member_below_degree_three(self, derivation_n3):
        assert min(total_degree(p) for p in derivation_n3.rels_s) >= 3

    def test_simplified_matches_printed(self, derivation_n3):
        assert golden_compare(derivation_n3.rels_s, load_golden_system("rels_s_n3")) != GoldenMatch.DIFFERENT

    def test_printed_members_lie_in_rels(self, derivation_n3, rels_s):
        rels = derivation_n3.rels
        assert all(ideal_member(change_context(p, rels.context), rels) for p in rels_s)


@pytest.mark.slow
class TestDerive:
    """The full pipeline and its recomputed checks"""

    def test_complete_and_passed(self, derivation_n3):
        assert derivation_n3.status == DerivationStatus.COMPLETE
        assert derivation_n3.failed_checks() == []
        assert derivation_n3.passed

    def test_records_degrees_and_counts(self, derivation_n3):
        assert derivation_n3.degrees.standard == derivation_n3.degrees.stated == 6
        assert derivation_n3.degrees.computed == 6
        assert derivation_n3.rels_degree_profile()[3] == 7
        assert derivation_n3.count_discrepancy == (derivation_n3.simplified_count != 4)

    def test_m0eqs_match_printed(self, derivation_n3):
        assert golden_compare(derivation_n3.m0eqs, load_golden_system("m0eqs_n3")) != GoldenMatch.DIFFERENT

    def test_m0eqs_are_restricted_cubics(self, derivation_n3):
        m0eqs = derivation_n3.m0eqs
        assert set(m0eqs.degrees()) == {3}
        assert len(m0eqs) <= len(derivation_n3.rels_s)
        noted = any(note.startswith("M0eqs has") for note in derivation_n3.discrepancies())
        assert noted == (len(m0eqs) != 4)

    def test_corrupted_basis_fails(self, derivation_n3, xs3_ctx):
        broken = replace(derivation_n3, rels=PolySystem((parse_text("x11", xs3_ctx),), xs3_ctx), checks=[])
        verify_derivation(3, broken)
        assert not broken.passed
        assert CHECK_DIAGONAL in broken.failed_checks()

    def test_resource_limit_aborts_cleanly(self, no_cache):
        derivation = derive(3, limits=GroebnerLimits(max_pairs=5, max_coeff_bits=4096), cache=no_cache)
        assert derivation.status == DerivationStatus.ABORTED
        assert derivation.abort.stage == "relations"
        assert derivation.abort.pairs_done == 6
        assert derivation.rels is None
        assert not derivation.passed


@pytest.mark.unit
class TestFourByFourAttempt:
    """n = 4 stops at its limits with the progress recorded"""

    def test_small_limits_abort_quickly(self, no_cache):
        limits = GroebnerLimits(max_pairs=50, max_reduction_steps=20_000, max_seconds=10.0)
        started = time.perf_counter()
        derivation = derive(4, limits=limits, cache=no_cache)
        assert time.perf_counter() - started < 60.0
        assert derivation.status == DerivationStatus.ABORTED
        assert derivation.abort.stage == "relations"
        assert derivation.abort.message
        assert derivation.rels is None


@pytest.mark.unit
class TestDiscrepancies:
    """Differences from the announced counts are reported, not hidden"""

    def test_counts_noted(self, xs3_ctx):
        cubics = PolySystem(tuple(xs3_ctx.gen(v) ** 3 for v in ("x12", "x13", "x23", "x22", "x33")), xs3_ctx)
        derivation = Derivation(n=3, parametrization="orthogonal", rels=cubics, rels_s=cubics, m0eqs=cubics)
        notes = derivation.discrepancies()
        assert "Rels degree profile {3: 5}, announced {3: 7, 4: 1}" in notes
        assert "RelsS has 5 members, announced 4" in notes
        assert "M0eqs has 5 members, printed 4" in notes

    def test_silent_for_other_sizes(self, xs3_ctx):
        single = PolySystem((xs3_ctx.gen("x12"),), xs3_ctx)
        assert Derivation(n=4, parametrization="orthogonal", rels=single, rels_s=single).discrepancies() == []

    def test_in_report(self, xs3_ctx):
        cubics = PolySystem(tuple(xs3_ctx.gen(v) ** 3 for v in ("x12", "x13", "x23", "x22")), xs3_ctx)
        derivation = Derivation(n=3, parametrization="orthogonal", rels_s=cubics, m0eqs=cubics)
        assert derivation_report(derivation).discrepancies == []
