"""Symform domain entities"""
from discvar.features.symform.domain.entities.poly_matrix import PolyMatrix
from discvar.features.symform.domain.entities.univariate import UnivariatePoly
from discvar.features.symform.domain.entities.generic_setup import GenericSetup

__all__ = ["PolyMatrix", "UnivariatePoly", "GenericSetup"]
