"""Double-precision geometry of conjugation orbits"""
from discvar.features.numgeo.constants import SpectrumKind
from discvar.features.numgeo.domain.entities import (
    CircleFit,
    DiameterEstimate,
    EigenMultiset,
    OrbitSample,
    RankWitness,
    RotationOp,
    StaircaseTrace,
    SymMatrixN,
)
from discvar.features.numgeo.exceptions import (
    NumgeoException,
    DimensionMismatchError,
    AxisError,
    InvalidEigenvaluesError,
    NotARotationError,
)

__all__ = [
    "SpectrumKind",
    "CircleFit",
    "DiameterEstimate",
    "EigenMultiset",
    "OrbitSample",
    "RankWitness",
    "RotationOp",
    "StaircaseTrace",
    "SymMatrixN",
    "NumgeoException",
    "DimensionMismatchError",
    "AxisError",
    "InvalidEigenvaluesError",
    "NotARotationError",
]
