"""Variety domain entities"""
from discvar.features.variety.domain.entities.orbit_system import OrbitSystem
from discvar.features.variety.domain.entities.conics import EllipseForm, Homothety
from discvar.features.variety.domain.entities.derivation import Derivation

__all__ = ["OrbitSystem", "EllipseForm", "Homothety", "Derivation"]
