"""Groebner services"""
from discvar.features.groebner.service.reduction import ReductionBudget, reduce, reduce_with_trace, spoly
from discvar.features.groebner.service.buchberger import (
    buchberger,
    compute_basis,
    is_groebner,
    minimalize,
    interreduce,
)
from discvar.features.groebner.service.membership import (
    ideal_member,
    radical_member,
    ideal_equivalent,
    all_members,
    divisibility_probe,
)
from discvar.features.groebner.service.elimination import eliminate, eliminate_with_stats
from discvar.features.groebner.service.serialization import (
    system_to_json,
    system_from_json,
    system_to_text,
    system_from_texts,
)

__all__ = [
    "ReductionBudget",
    "reduce",
    "reduce_with_trace",
    "spoly",
    "buchberger",
    "compute_basis",
    "is_groebner",
    "minimalize",
    "interreduce",
    "ideal_member",
    "radical_member",
    "ideal_equivalent",
    "all_members",
    "divisibility_probe",
    "eliminate",
    "eliminate_with_stats",
    "system_to_json",
    "system_from_json",
    "system_to_text",
    "system_from_texts",
]
