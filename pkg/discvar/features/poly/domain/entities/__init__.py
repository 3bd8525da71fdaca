"""Polynomial domain entities"""
from discvar.features.poly.domain.entities.context import (
    BlockOrder,
    TermOrder,
    PolyContext,
    GREVLEX,
    LEX,
    context_of,
)

__all__ = ["BlockOrder", "TermOrder", "PolyContext", "GREVLEX", "LEX", "context_of"]
