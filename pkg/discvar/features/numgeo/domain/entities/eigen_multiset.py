"""Eigenvalue multisets"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from discvar.core.config import settings
from discvar.features.numgeo.constants import SpectrumKind
from discvar.features.numgeo.exceptions import InvalidEigenvaluesError


@dataclass(frozen=True)
class EigenMultiset:
    """
    Sorted eigenvalues with multiplicities found by clustering.

    `exact` holds rationals when the multiset was given symbolically; clusters
    are then decided exactly. Otherwise neighbours closer than
    EIGEN_CLUSTER_TOL * (1 + max |value|) share a cluster.
    """

    values: Tuple[float, ...]
    exact: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        if not self.values:
            raise InvalidEigenvaluesError("Empty eigenvalue list")
        if self.exact is not None:
            exact = tuple(sorted(self.exact))
            object.__setattr__(self, "exact", exact)
            object.__setattr__(self, "values", tuple(float(q) for q in exact))
        else:
            object.__setattr__(self, "values", tuple(sorted(float(v) for v in self.values)))

    @classmethod
    def parse(cls, text: str) -> "EigenMultiset":
        """'1,1,-2' or '1/2, 1/2, -1'"""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts:
            raise InvalidEigenvaluesError("No eigenvalues given", text)
        try:
            exact = tuple(Fraction(p) for p in parts)
        except (ValueError, ZeroDivisionError):
            raise InvalidEigenvaluesError(f"Eigenvalues must be rationals: {text!r}", text)
        return cls(tuple(float(q) for q in exact), exact)

    @classmethod
    def of(cls, values: Sequence) -> "EigenMultiset":
        """Exact when every value is an int or Fraction"""
        if all(isinstance(v, (int, Fraction)) for v in values):
            exact = tuple(Fraction(v) for v in values)
            return cls(tuple(float(q) for q in exact), exact)
        return cls(tuple(float(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def tolerance(self) -> float:
        return settings.EIGEN_CLUSTER_TOL * (1.0 + max(abs(v) for v in self.values))

    def clusters(self) -> List[Tuple[float, int]]:
        """(representative value, multiplicity) in ascending order"""
        source = self.exact if self.exact is not None else self.values
        tol = 0 if self.exact is not None else self.tolerance
        groups: List[List] = [[source[0]]]
        for v in source[1:]:
            if v - groups[-1][-1] <= tol:
                groups[-1].append(v)
            else:
                groups.append([v])
        return [(float(sum(g)) / len(g), len(g)) for g in groups]

    @property
    def width(self) -> int:
        """Number of distinct eigenvalues"""
        return len(self.clusters())

    def multiplicities(self) -> List[int]:
        return [m for _, m in self.clusters()]

    def kind(self) -> SpectrumKind:
        width = self.width
        if width == 1:
            return SpectrumKind.SCALAR
        if width == self.n:
            return SpectrumKind.SIMPLE
        if width == self.n - 1:
            return SpectrumKind.MAXIMAL
        return SpectrumKind.NARROWED

    def mean(self) -> float:
        return sum(self.values) / self.n

    def max_gap(self) -> float:
        """max |lambda_i - lambda_j|"""
        return self.values[-1] - self.values[0]

    def __str__(self) -> str:
        if self.exact is not None:
            return ",".join(str(q) for q in self.exact)
        return ",".join(repr(v) for v in self.values)
