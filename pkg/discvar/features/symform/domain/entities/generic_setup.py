"""The generic symmetric matrix with a double eigenvalue"""
from dataclasses import dataclass
from typing import List

from sympy.polys.rings import PolyElement

from discvar.features.groebner.domain.entities import PolySystem
from discvar.features.poly.domain.entities import PolyContext
from discvar.features.symform.constants import Parametrization
from discvar.features.symform.domain.entities.poly_matrix import PolyMatrix
from discvar.shared.constants import eigen_variables


@dataclass(frozen=True)
class GenericSetup:
    """
    X = Y * D * Y^T over QQ[Zs] together with the orthogonality equations.

    With the orthogonal parametrization Y is the full n x n frame and OrtEs
    holds the n(n+1)/2 row conditions. With the columns parametrization Y is
    the n x (n-2) block of columns paired with mu1..mu_{n-2}; OrtEs then
    asks those columns to be orthonormal.
    """

    n: int
    parametrization: Parametrization
    context: PolyContext
    D: PolyMatrix
    Y: PolyMatrix
    ortes: PolySystem
    X: PolyMatrix

    @property
    def eigen_variables(self) -> List[str]:
        return eigen_variables(self.n)

    @property
    def frame_variables(self) -> List[str]:
        eigen = set(self.eigen_variables)
        return [v for v in self.context.variables if v not in eigen]

    def eigenvalue_sum(self) -> PolyElement:
        """2*lam + mu1 + ... + mu_{n-2}, the trace every X must have"""
        gens = self.context.gens()
        lam, *mus = self.eigen_variables
        return gens[lam] * 2 + sum((gens[m] for m in mus), self.context.zero)

    def eigenvalue_product(self) -> PolyElement:
        """lam^2 * mu1 * ... * mu_{n-2}, the determinant every X must have"""
        gens = self.context.gens()
        lam, *mus = self.eigen_variables
        result = gens[lam] ** 2
        for m in mus:
            result *= gens[m]
        return result
