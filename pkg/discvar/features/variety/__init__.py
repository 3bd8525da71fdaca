"""Equation systems of the discriminant variety and its orbits"""
from discvar.features.variety.constants import (
    DerivationStatus,
    GoldenMatch,
    KMode,
    OneOrbitStrategy,
)
from discvar.features.variety.domain.entities import Derivation, EllipseForm, Homothety, OrbitSystem
from discvar.features.variety.exceptions import VarietyException, EigenvalueError, EllipseShapeError

__all__ = [
    "DerivationStatus",
    "GoldenMatch",
    "KMode",
    "OneOrbitStrategy",
    "Derivation",
    "EllipseForm",
    "Homothety",
    "OrbitSystem",
    "VarietyException",
    "EigenvalueError",
    "EllipseShapeError",
]
