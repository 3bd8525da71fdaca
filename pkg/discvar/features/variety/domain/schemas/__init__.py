"""Schema exports for variety reports"""
from discvar.features.variety.domain.schemas.reports import (
    VersionedReport,
    CheckResult,
    SystemListing,
    AbortInfo,
    DegreesInfo,
    DerivationReport,
    OrbitSystemReport,
    EllipseInfo,
    OneOrbitReport,
    WitnessInfo,
    SingularityReport,
    VerifyReport,
    SampleCloud,
)

__all__ = [
    "VersionedReport",
    "CheckResult",
    "SystemListing",
    "AbortInfo",
    "DegreesInfo",
    "DerivationReport",
    "OrbitSystemReport",
    "EllipseInfo",
    "OneOrbitReport",
    "WitnessInfo",
    "SingularityReport",
    "VerifyReport",
    "SampleCloud",
]
