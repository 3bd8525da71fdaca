"""Conversion of computed results to report schemas"""
from typing import Dict, Optional

from discvar.features.groebner.domain.entities import PolySystem
from discvar.features.numgeo.domain.entities import RankWitness
from discvar.features.poly.service import to_text
from discvar.features.symform.domain.entities import PolyMatrix
from discvar.features.variety.constants import STATED_SIMPLIFIED_COUNT, GoldenMatch
from discvar.features.variety.domain.entities import Derivation, EllipseForm, OrbitSystem
from discvar.features.variety.domain.schemas import (
    DegreesInfo,
    DerivationReport,
    EllipseInfo,
    OrbitSystemReport,
    SystemListing,
    WitnessInfo,
)


def listing(system: Optional[PolySystem], name: str) -> Optional[SystemListing]:
    if system is None:
        return None
    return SystemListing(
        name=name,
        vars=list(system.context.variables),
        parameter=system.context.parameter,
        gens=[to_text(p) for p in system],
        degrees=system.degrees(),
    )


def derivation_report(derivation: Derivation, golden: Optional[Dict[str, GoldenMatch]] = None) -> DerivationReport:
    degrees = derivation.degrees
    return DerivationReport(
        n=derivation.n,
        parametrization=derivation.parametrization,
        status=derivation.status.value,
        rels=listing(derivation.rels, "Rels"),
        rels_s=listing(derivation.rels_s, "RelsS"),
        m0eqs=listing(derivation.m0eqs, "M0eqs"),
        rels_degree_profile=derivation.rels_degree_profile(),
        simplified_count=derivation.simplified_count,
        stated_simplified_count=STATED_SIMPLIFIED_COUNT,
        count_discrepancy=derivation.count_discrepancy,
        discrepancies=derivation.discrepancies(),
        discriminant_degrees=None if degrees is None else DegreesInfo(
            standard=degrees.standard,
            stated=degrees.stated,
            computed=degrees.computed,
        ),
        golden={name: match.value for name, match in (golden or {}).items()},
        checks=list(derivation.checks),
        abort=derivation.abort,
        timings=dict(derivation.timings),
        passed=derivation.passed,
    )


def orbit_report(orbit: OrbitSystem, golden: Optional[GoldenMatch] = None) -> OrbitSystemReport:
    return OrbitSystemReport(
        eigenvalues=str(orbit.eigenvalues),
        n=orbit.n,
        ambient_dim=orbit.ambient_dim,
        spectrum=orbit.eigenvalues.kind().value,
        equations=listing(orbit.equations, "orbitEqs"),
        golden=None if golden is None else golden.value,
    )


def ellipse_info(form: EllipseForm) -> EllipseInfo:
    return EllipseInfo(
        square_variable=form.square_variable,
        shifted_variable=form.shifted_variable,
        axis_coefficient=form.axis_coefficient,
        centre=form.centre,
        radius_squared=form.radius_squared,
    )


def matrix_texts(M: PolyMatrix):
    rows, cols = M.shape
    return [[to_text(M[i, j]) for j in range(cols)] for i in range(rows)]


def witness_info(witness: RankWitness) -> WitnessInfo:
    return WitnessInfo(
        labels=list(witness.labels),
        rows=[[str(q) for q in row] for row in witness.exact_rows],
        exact_rank=witness.exact_rank,
        numeric_rank=witness.numeric_rank,
        expected_rank=witness.expected_rank,
        steps=list(witness.staircase.steps),
        construction_deviation=witness.construction_deviation,
        holds=witness.holds,
    )
