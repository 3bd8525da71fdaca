"""Groebner bases, membership tests and elimination"""
from discvar.features.groebner.constants import GroebnerLimits, UNLIMITED
from discvar.features.groebner.domain.entities import PolySystem, BasisStats
from discvar.features.groebner.exceptions import GroebnerException, ReductionLimitExceeded, ResourceLimitExceeded

__all__ = [
    "GroebnerLimits",
    "UNLIMITED",
    "PolySystem",
    "BasisStats",
    "GroebnerException",
    "ResourceLimitExceeded",
    "ReductionLimitExceeded",
]
