"""Groebner domain entities"""
from discvar.features.groebner.domain.entities.poly_system import PolySystem, BasisStats

__all__ = ["PolySystem", "BasisStats"]
