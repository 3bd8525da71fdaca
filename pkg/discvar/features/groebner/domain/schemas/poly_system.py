"""Pydantic wire forms of polynomial systems and cache files"""
from typing import Any, Dict, List, Optional
from pydantic import BaseModel, Field

from discvar.features.poly.domain.schemas import PolyJSON


class PolySystemJSON(BaseModel):
    """Generators sharing one variable context"""
    order: str = "grevlex"
    vars: List[str]
    parameter: Optional[str] = None
    reduced: bool = False
    gens: List[PolyJSON] = Field(default_factory=list)


class CacheHeader(BaseModel):
    """Identifies a cached basis"""
    n: int
    task: str
    version: str
    params: Dict[str, Any] = Field(default_factory=dict)


class CachedBasis(BaseModel):
    header: CacheHeader
    system: PolySystemJSON
