"""Schema exports for polynomials"""
from discvar.features.poly.domain.schemas.poly import TermJSON, PolyJSON

__all__ = ["TermJSON", "PolyJSON"]
