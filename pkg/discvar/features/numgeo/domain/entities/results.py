"""Results of the numeric experiments"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List

import numpy as np

from discvar.features.numgeo.domain.entities.sym_matrix import SymMatrixN


@dataclass(frozen=True)
class DiameterEstimate:
    """
    Sampled orbit diameter with the bounds max|l_i - l_j| <= diameter <= 2 d(D, Scal).

    estimate comes from the grid and the Haar samples only; transposition is
    the distance to the diagonal with the extreme eigenvalues swapped, an
    exact orbit point at distance max|l_i - l_j|.
    """

    estimate: float
    transposition: float
    lower_bound: float
    upper_bound: float
    samples: int
    grid_points: int
    maximal_spectrum: bool

    @property
    def within_bounds(self) -> bool:
        """The orbit reaches the lower bound and no sample passes the upper one"""
        return self.transposition >= self.lower_bound - 1e-9 and self.estimate <= self.upper_bound + 1e-9

    @property
    def relative_gap(self) -> float:
        """How far the samples stay below the lower bound, 0 once they reach it"""
        if self.lower_bound == 0.0:
            return 0.0
        return max(0.0, 1.0 - self.estimate / self.lower_bound)


@dataclass(frozen=True)
class CircleFit:
    center: SymMatrixN
    radius: float
    deviation: float


@dataclass
class StaircaseTrace:
    """Exact row echelon form and the row operations that produced it"""

    rows: List[List[Fraction]]
    rank: int
    steps: List[str] = field(default_factory=list)


@dataclass
class RankWitness:
    """Named matrices whose upper-triangle vectors are tested for independence"""

    labels: List[str]
    matrices: List[SymMatrixN]
    exact_rows: List[List[Fraction]]
    exact_rank: int
    numeric_rank: int
    expected_rank: int
    staircase: StaircaseTrace
    # Max deviation of the listed matrices from their constructions by rotation
    construction_deviation: float = 0.0

    @property
    def holds(self) -> bool:
        return self.exact_rank == self.numeric_rank == self.expected_rank


@dataclass(frozen=True)
class OrbitSample:
    """Orbit points as an array of shape (count, n, n)"""

    points: np.ndarray
    seed: int
    workers: int

    def __len__(self) -> int:
        return self.points.shape[0]

    def upper(self) -> np.ndarray:
        """Upper-triangle coordinates, shape (count, n(n+1)/2)"""
        n = self.points.shape[1]
        rows, cols = np.triu_indices(n)
        return self.points[:, rows, cols]

    def matrices(self) -> List[SymMatrixN]:
        return [SymMatrixN(p) for p in self.points]

