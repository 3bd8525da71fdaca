"""Equation systems of conjugation orbits"""
from dataclasses import dataclass

from discvar.features.groebner.domain.entities import PolySystem
from discvar.features.numgeo.domain.entities import EigenMultiset


@dataclass(frozen=True)
class OrbitSystem:
    """Reduced basis of the ideal of Orbit(diag(eigenvalues)) in the matrix entries"""

    eigenvalues: EigenMultiset
    equations: PolySystem

    @property
    def n(self) -> int:
        return self.eigenvalues.n

    @property
    def ambient_dim(self) -> int:
        return self.n * (self.n + 1) // 2
