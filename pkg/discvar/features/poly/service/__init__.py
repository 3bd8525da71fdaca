"""Polynomial services"""
from discvar.features.poly.service.arithmetic import (
    ensure_same_context,
    poly_arith,
    total_degree,
    is_homogeneous,
    variables_of,
)
from discvar.features.poly.service.coefficients import (
    to_fraction,
    ratfunc_parts,
    evaluate_ratfunc,
    coefficient_scale,
    max_coefficient_bits,
    normalize_primitive,
)
from discvar.features.poly.service.substitution import (
    change_context,
    substitute,
    specialize_parameter,
)
from discvar.features.poly.service.evaluation import evaluate_numeric, CompiledSystem
from discvar.features.poly.service.serialization import (
    to_text,
    parse_text,
    to_json,
    from_json,
    context_from_json,
)

__all__ = [
    "ensure_same_context",
    "poly_arith",
    "total_degree",
    "is_homogeneous",
    "variables_of",
    "to_fraction",
    "ratfunc_parts",
    "evaluate_ratfunc",
    "coefficient_scale",
    "max_coefficient_bits",
    "normalize_primitive",
    "change_context",
    "substitute",
    "specialize_parameter",
    "evaluate_numeric",
    "CompiledSystem",
    "to_text",
    "parse_text",
    "to_json",
    "from_json",
    "context_from_json",
]
