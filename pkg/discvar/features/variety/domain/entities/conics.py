"""Completed-square circles of 1-orbits and homotheties between orbits"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional


@dataclass(frozen=True)
class EllipseForm:
    """
    axis_coefficient * u^2 + (w - centre)^2 = radius_squared.

    Coefficients are kept as text because over QQ(k) they are rational
    functions; radius_squared_value is set when the radius does not depend on k.
    """

    square_variable: str
    shifted_variable: str
    axis_coefficient: str
    centre: str
    radius_squared: str
    radius_squared_value: Optional[Fraction] = None


@dataclass(frozen=True)
class Homothety:
    """X -> factor * (X + shift * I)"""

    shift: Fraction
    factor: Fraction

    def apply(self, value):
        return self.factor * (value + self.shift)
