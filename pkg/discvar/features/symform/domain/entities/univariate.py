"""Univariate polynomials whose coefficients are multivariate polynomials"""
from dataclasses import dataclass
from typing import Tuple

from sympy.polys.rings import PolyElement

from discvar.features.poly.domain.entities import PolyContext
from discvar.features.poly.exceptions import ContextMismatchError
from discvar.shared.constants import CHARPOLY_NAME


@dataclass(frozen=True)
class UnivariatePoly:
    """
    sum(coefficients[i] * var^i) with coefficients in `context`.

    The variable is kept outside the coefficient context. Trailing zero
    coefficients are dropped, so the zero polynomial has no coefficients.
    """

    coefficients: Tuple[PolyElement, ...]
    context: PolyContext
    var: str = CHARPOLY_NAME

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        ring = self.context.ring
        for c in coeffs:
            if c.ring != ring:
                raise ContextMismatchError("Coefficient outside the polynomial context", right=str(self.context))
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial"""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> PolyElement:
        return self.coefficients[-1] if self.coefficients else self.context.zero

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return self.leading == self.context.one

    def coefficient(self, power: int) -> PolyElement:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return self.context.zero

    def derivative(self) -> "UnivariatePoly":
        return UnivariatePoly(
            tuple(c * i for i, c in enumerate(self.coefficients) if i > 0),
            self.context,
            self.var,
        )

    def evaluate(self, value: PolyElement) -> PolyElement:
        """Horner evaluation at a polynomial of the coefficient context"""
        result = self.context.zero
        for c in reversed(self.coefficients):
            result = result * value + c
        return result
