"""Pydantic forms of the reports printed or emitted as JSON by the CLI"""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from discvar.shared.constants import SCHEMA_VERSION


class VersionedReport(BaseModel):
    """Base of every JSON document; serialized with by_alias=True"""
    schema_version: int = Field(SCHEMA_VERSION, serialization_alias="schema")

    class Config:
        populate_by_name = True


class CheckResult(BaseModel):
    """One recomputed verification step; informational results never gate a report"""
    name: str
    passed: bool
    detail: str = ""
    informational: bool = False

    @property
    def gates(self) -> bool:
        return not self.informational


class SystemListing(BaseModel):
    """Generators as text in the style of the reference listings"""
    name: str
    vars: List[str]
    parameter: Optional[str] = None
    gens: List[str] = Field(default_factory=list)
    degrees: List[int] = Field(default_factory=list)


class AbortInfo(BaseModel):
    """Progress reached before a resource limit stopped a basis computation"""
    stage: str
    message: str
    pairs_done: int = 0
    basis_size: int = 0
    max_degree: int = 0
    pairs_pending: int = 0


class DegreesInfo(BaseModel):
    standard: int
    stated: int
    computed: Optional[int] = None


class DerivationReport(VersionedReport):
    n: int
    parametrization: str
    status: str
    rels: Optional[SystemListing] = None
    rels_s: Optional[SystemListing] = None
    m0eqs: Optional[SystemListing] = None
    rels_degree_profile: Dict[int, int] = Field(default_factory=dict)
    simplified_count: Optional[int] = None
    stated_simplified_count: int = 4
    count_discrepancy: bool = False
    discrepancies: List[str] = Field(default_factory=list)
    discriminant_degrees: Optional[DegreesInfo] = None
    golden: Dict[str, str] = Field(default_factory=dict)
    checks: List[CheckResult] = Field(default_factory=list)
    abort: Optional[AbortInfo] = None
    # Wall-clock values differ between runs; text output only
    timings: Dict[str, float] = Field(default_factory=dict, exclude=True)
    passed: bool = False


class OrbitSystemReport(VersionedReport):
    eigenvalues: str
    n: int
    ambient_dim: int
    spectrum: str
    equations: SystemListing
    golden: Optional[str] = None


class EllipseInfo(BaseModel):
    square_variable: str
    shifted_variable: str
    axis_coefficient: str
    centre: str
    radius_squared: str


class OneOrbitReport(VersionedReport):
    mode: str
    k: Optional[str] = None
    strategy: str
    system: SystemListing
    matrix: List[List[str]] = Field(default_factory=list)
    ellipse: Optional[EllipseInfo] = None
    checks: List[CheckResult] = Field(default_factory=list)
    golden: Optional[str] = None


class WitnessInfo(BaseModel):
    labels: List[str]
    rows: List[List[str]]
    exact_rank: int
    numeric_rank: int
    expected_rank: int
    steps: List[str] = Field(default_factory=list)
    construction_deviation: float = 0.0
    holds: bool


class SingularityReport(VersionedReport):
    witnesses: List[WitnessInfo] = Field(default_factory=list)
    passed: bool = False


class VerifyReport(VersionedReport):
    n: int
    seed: int
    samples: int
    deep: bool = False
    checks: List[CheckResult] = Field(default_factory=list)
    passed: bool = False


class SampleCloud(VersionedReport):
    """Orbit samples with the relative residual of every equation at every point"""
    eigenvalues: str
    n: int
    seed: int
    count: int
    system: str
    variables: List[str]
    residual_names: List[str]
    points: List[List[float]] = Field(default_factory=list)
    residuals: List[List[float]] = Field(default_factory=list)
    max_residual: float = 0.0
