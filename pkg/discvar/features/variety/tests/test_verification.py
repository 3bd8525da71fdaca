"""Tests for report conversion and the verification battery"""
import json

import pytest

from discvar.core.cache import BasisCache
from discvar.features.groebner import PolySystem
from discvar.features.variety import DerivationStatus
from discvar.features.variety.domain.entities import Derivation
from discvar.features.variety.domain.schemas import AbortInfo
from discvar.features.variety.domain.schemas import CheckResult, VerifyReport
from discvar.features.variety.service import derivation_report, listing, run_verification
from discvar.features.variety.service.verification import (
    _diameter_bounds,
    _orbit_shape,
    _witnesses,
    attempt_outcome,
    divisibility_check,
)
from discvar.shared.constants import SCHEMA_VERSION
from discvar.shared.test_base import derivation_n3, rels_s, xs3_ctx


@pytest.mark.unit
class TestListing:
    """Systems as text listings"""

    def test_listing_fields(self, rels_s):
        result = listing(rels_s, "RelsS")
        assert result.name == "RelsS"
        assert result.vars == list(rels_s.context.variables)
        assert result.degrees == [3, 3, 3, 3, 3]
        assert len(result.gens) == 5

    def test_missing_system(self):
        assert listing(None, "Rels") is None


@pytest.mark.unit
class TestReportSchema:
    """Versioned JSON documents"""

    def test_schema_alias(self):
        report = VerifyReport(n=3, seed=42, samples=10, checks=[CheckResult(name="a", passed=True)], passed=True)
        data = json.loads(report.model_dump_json(by_alias=True))
        assert data["schema"] == SCHEMA_VERSION
        assert "schema_version" not in data


@pytest.mark.unit
class TestNumericBatteryParts:
    """Checks of the battery that need no basis"""

    def test_witnesses(self):
        assert _witnesses() == ""

    def test_orbit_shape(self):
        assert _orbit_shape() == ""

    def test_diameter_bounds(self):
        assert _diameter_bounds(42) == ""


@pytest.mark.unit
class TestDeepChecks:
    """The divisibility report and the n = 4 outcome both inspect real results"""

    def test_divisibility_is_informational(self, xs3_ctx):
        members = PolySystem((xs3_ctx.gen("x12"), xs3_ctx.gen("x13")), xs3_ctx)
        result = divisibility_check(Derivation(n=3, parametrization="orthogonal", rels_s=members))
        assert result.informational
        assert not result.gates
        assert result.passed is False
        assert result.detail.startswith("g1: g^2 no, g^4 no")

    def test_informational_result_does_not_fail_report(self):
        checks = [CheckResult(name="a", passed=True), CheckResult(name="b", passed=False, informational=True)]
        assert all(c.passed for c in checks if c.gates)

    def test_recorded_abort_is_clean(self):
        deep = Derivation(
            n=4,
            parametrization="orthogonal",
            status=DerivationStatus.ABORTED,
            abort=AbortInfo(stage="relations", message="S-pair limit 20 exceeded", pairs_done=21),
        )
        assert attempt_outcome(deep) == ""

    def test_abort_without_record_fails(self):
        deep = Derivation(n=4, parametrization="orthogonal", status=DerivationStatus.ABORTED)
        assert attempt_outcome(deep) == "aborted without a progress record"

    def test_completed_with_failures_fails(self):
        deep = Derivation(n=4, parametrization="orthogonal")
        deep.checks = [CheckResult(name="discriminant in Rels", passed=False, detail="remainder x12")]
        assert "discriminant in Rels" in attempt_outcome(deep)


@pytest.mark.slow
class TestDerivationReport:
    """The report of a full n = 3 derivation"""

    def test_timings_stay_out_of_json(self, derivation_n3):
        report = derivation_report(derivation_n3)
        data = json.loads(report.model_dump_json(by_alias=True))
        assert "timings" not in data
        assert report.timings

    def test_same_derivation_same_bytes(self, derivation_n3):
        first = derivation_report(derivation_n3).model_dump_json(by_alias=True)
        second = derivation_report(derivation_n3).model_dump_json(by_alias=True)
        assert first == second

    def test_content(self, derivation_n3):
        data = json.loads(derivation_report(derivation_n3).model_dump_json(by_alias=True))
        assert data["status"] == "complete"
        assert data["passed"] is True
        assert data["discriminant_degrees"] == {"standard": 6, "stated": 6, "computed": 6}
        assert data["stated_simplified_count"] == 4
        assert data["simplified_count"] == len(data["rels_s"]["gens"])


@pytest.mark.slow
@pytest.mark.integration
class TestRunVerification:
    """The whole battery for n = 3"""

    def test_all_checks_pass(self, tmp_path):
        report = run_verification(3, seed=42, samples=300, cache=BasisCache(tmp_path, enabled=True))
        failed = [(c.name, c.detail) for c in report.checks if not c.passed]
        assert failed == []
        assert report.passed
        assert {"golden RelsS", "golden orbitEqs", "rank witnesses", "diameter of Orbit(1, 1, -2)"} <= {
            c.name for c in report.checks
        }
