"""Numgeo domain entities"""
from discvar.features.numgeo.domain.entities.sym_matrix import SymMatrixN, upper_indices
from discvar.features.numgeo.domain.entities.eigen_multiset import EigenMultiset
from discvar.features.numgeo.domain.entities.rotation import RotationOp
from discvar.features.numgeo.domain.entities.results import (
    CircleFit,
    DiameterEstimate,
    OrbitSample,
    RankWitness,
    StaircaseTrace,
)

__all__ = [
    "SymMatrixN",
    "upper_indices",
    "EigenMultiset",
    "RotationOp",
    "CircleFit",
    "DiameterEstimate",
    "OrbitSample",
    "RankWitness",
    "StaircaseTrace",
]
