"""Exact multivariate polynomials over QQ and QQ(k)"""
from discvar.features.poly.constants import TermOrderKind, ArithOp
from discvar.features.poly.domain.entities import (
    BlockOrder,
    TermOrder,
    PolyContext,
    GREVLEX,
    LEX,
    context_of,
)

__all__ = [
    "TermOrderKind",
    "ArithOp",
    "BlockOrder",
    "TermOrder",
    "PolyContext",
    "GREVLEX",
    "LEX",
    "context_of",
]
