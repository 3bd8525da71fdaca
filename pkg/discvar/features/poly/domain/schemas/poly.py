"""Pydantic wire forms of polynomials"""
from typing import Dict, List, Optional, Union
from pydantic import BaseModel, Field


class TermJSON(BaseModel):
    """One term; over QQ(k) num/den map powers of k to rational strings"""
    exps: List[int] = Field(..., description="Exponent per context variable")
    num: Union[str, Dict[int, str]] = Field(..., description="Numerator")
    den: Union[str, Dict[int, str]] = Field("1", description="Denominator (monic over QQ(k))")


class PolyJSON(BaseModel):
    """Sparse polynomial with its variable context"""
    vars: List[str]
    order: str = "grevlex"
    parameter: Optional[str] = None
    terms: List[TermJSON] = Field(default_factory=list)
