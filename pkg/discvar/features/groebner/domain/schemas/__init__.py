"""Schema exports for Groebner bases"""
from discvar.features.groebner.domain.schemas.poly_system import (
    PolySystemJSON,
    CacheHeader,
    CachedBasis,
)

__all__ = ["PolySystemJSON", "CacheHeader", "CachedBasis"]
