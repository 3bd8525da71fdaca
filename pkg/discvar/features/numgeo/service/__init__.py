"""Numgeo services"""
from discvar.features.numgeo.service.linalg import (
    jacobi_eigs,
    s_quad,
    s_inner,
    s_dist,
    random_so,
    random_so_batch,
    conjugate,
    conjugate_batch,
    rotation_axis_angle,
    canonical_axis,
    proj_plane_embed,
    antisymmetric_basis,
    commutator,
    tangent_basis,
)
from discvar.features.numgeo.service.rank import rank_with_tol, row_echelon
from discvar.features.numgeo.service.orbits import (
    spectrum_width,
    spectrum_kind,
    is_maximal_spectrum,
    diagonal_ordered,
    scal_projection,
    distance_to_scal,
    orbit_sphere_radius,
    orbit_dimension,
    orthogonality_witness,
    family_axis,
    uniform_angles,
    circumference_family,
    circle_fit_deviation,
    sample_orbit,
    diameter_bounds,
    orbit_diameter_estimate,
)
from discvar.features.numgeo.service.regularity import (
    system_jacobian,
    jacobian_rank_at,
    exp_v_jacobian,
    exp_v_rank_check,
)
from discvar.features.numgeo.service.witness import singularity_witness, embracing_plane_witness

__all__ = [
    "jacobi_eigs",
    "s_quad",
    "s_inner",
    "s_dist",
    "random_so",
    "random_so_batch",
    "conjugate",
    "conjugate_batch",
    "rotation_axis_angle",
    "canonical_axis",
    "proj_plane_embed",
    "antisymmetric_basis",
    "commutator",
    "tangent_basis",
    "rank_with_tol",
    "row_echelon",
    "spectrum_width",
    "spectrum_kind",
    "is_maximal_spectrum",
    "diagonal_ordered",
    "scal_projection",
    "distance_to_scal",
    "orbit_sphere_radius",
    "orbit_dimension",
    "orthogonality_witness",
    "family_axis",
    "uniform_angles",
    "circumference_family",
    "circle_fit_deviation",
    "sample_orbit",
    "diameter_bounds",
    "orbit_diameter_estimate",
    "system_jacobian",
    "jacobian_rank_at",
    "exp_v_jacobian",
    "exp_v_rank_check",
    "singularity_witness",
    "embracing_plane_witness",
]
