"""Variety services"""
from discvar.features.variety.service.golden import load_golden_system, golden_compare
from discvar.features.variety.service.relations import (
    graph_system,
    relations_ideal,
    relations_ideal_with_stats,
    simplify_system,
    restrict_trace_zero,
)
from discvar.features.variety.service.orbit import (
    orbit_ideal_viete,
    orbit_minimal_eqs,
    homothety_parameters,
)
from discvar.features.variety.service.one_orbit import (
    one_orbit_eqs,
    specialize_k,
    one_orbit_limit_infinity,
    solved_matrix,
    ellipse_form,
    determinant_residual,
)
from discvar.features.variety.service.numeric import (
    relative_residuals,
    max_residual,
    discriminant_points,
    orbit_points,
    scalar_points,
    trace_shift_residual,
    fixed_quadratic_form,
    max_form_ratio,
)
from discvar.features.variety.service.derivation import derive, verify_derivation, run_check
from discvar.features.variety.service.verification import run_verification
from discvar.features.variety.service.reports import (
    listing,
    derivation_report,
    orbit_report,
    ellipse_info,
    matrix_texts,
    witness_info,
)

__all__ = [
    "load_golden_system",
    "golden_compare",
    "graph_system",
    "relations_ideal",
    "relations_ideal_with_stats",
    "simplify_system",
    "restrict_trace_zero",
    "orbit_ideal_viete",
    "orbit_minimal_eqs",
    "homothety_parameters",
    "one_orbit_eqs",
    "specialize_k",
    "one_orbit_limit_infinity",
    "solved_matrix",
    "ellipse_form",
    "determinant_residual",
    "relative_residuals",
    "max_residual",
    "discriminant_points",
    "orbit_points",
    "scalar_points",
    "trace_shift_residual",
    "fixed_quadratic_form",
    "max_form_ratio",
    "derive",
    "verify_derivation",
    "run_check",
    "run_verification",
    "listing",
    "derivation_report",
    "orbit_report",
    "ellipse_info",
    "matrix_texts",
    "witness_info",
]
