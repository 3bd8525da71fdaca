"""Numeric evaluation of exact polynomials"""
import math
from fractions import Fraction
from typing import List, Mapping, Sequence

import numpy as np
from sympy.polys.rings import PolyElement

from discvar.features.poly.domain.entities import context_of
from discvar.features.poly.exceptions import MissingBindingError
from discvar.features.poly.service.arithmetic import total_degree, variables_of
from discvar.features.poly.service.coefficients import (
    coefficient_scale,
    evaluate_ratfunc,
    to_fraction,
)


def evaluate_numeric(p: PolyElement, point: Mapping[str, float]) -> float:
    """
    Evaluate p at a double-precision point.

    Only variables occurring in p need a value; a QQ(k) polynomial also needs
    the parameter. Terms are summed with math.fsum.
    """
    ctx = context_of(p)
    missing = [v for v in variables_of(p) if v not in point]
    if ctx.parameter is not None and ctx.parameter not in point and p:
        missing.append(ctx.parameter)
    if missing:
        raise MissingBindingError(f"Missing values for: {', '.join(missing)}", missing)

    values = [float(point.get(v, 0.0)) for v in ctx.variables]
    terms = []
    for monom, coeff in p.items():
        if ctx.parameter is None:
            c = float(to_fraction(coeff))
        else:
            c = float(evaluate_ratfunc(coeff, Fraction(point[ctx.parameter])))
        for x, e in zip(values, monom):
            if e:
                c *= x ** e
        terms.append(c)
    return math.fsum(terms)


class CompiledSystem:
    """
    A list of QQ polynomials compiled to numpy arrays for batch evaluation.

    Points are rows of an array whose columns follow `variables`.
    """

    def __init__(self, polys: Sequence[PolyElement], variables: Sequence[str]):
        self.variables = list(variables)
        column = {v: j for j, v in enumerate(self.variables)}
        self.exponents: List[np.ndarray] = []
        self.coefficients: List[np.ndarray] = []
        self.scales: List[float] = []
        self.degrees: List[int] = []
        for p in polys:
            ctx = context_of(p)
            missing = [v for v in variables_of(p) if v not in column]
            if missing:
                raise MissingBindingError(f"No column for: {', '.join(missing)}", missing)
            exps = np.zeros((len(p), len(self.variables)), dtype=np.int64)
            coeffs = np.zeros(len(p))
            for t, (monom, coeff) in enumerate(p.items()):
                for i, e in enumerate(monom):
                    if e:
                        exps[t, column[ctx.variables[i]]] = e
                coeffs[t] = float(to_fraction(coeff))
            self.exponents.append(exps)
            self.coefficients.append(coeffs)
            self.scales.append(coefficient_scale(p) * max(len(p), 1))
            self.degrees.append(max(total_degree(p), 0))

    def __len__(self) -> int:
        return len(self.exponents)

    def values(self, points: np.ndarray) -> np.ndarray:
        """Array of shape (points, polynomials)"""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        out = np.zeros((points.shape[0], len(self)))
        for k, (exps, coeffs) in enumerate(zip(self.exponents, self.coefficients)):
            if len(coeffs):
                monomials = np.prod(points[:, None, :] ** exps[None, :, :], axis=2)
                out[:, k] = monomials @ coeffs
        return out

    def tolerance_scale(self, points: np.ndarray) -> np.ndarray:
        """coefficient scale * term count * max(1, |x|)^degree, per point and polynomial"""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        magnitude = np.maximum(1.0, np.max(np.abs(points), axis=1))
        return np.array(self.scales)[None, :] * magnitude[:, None] ** np.array(self.degrees)[None, :]

    def relative_residuals(self, points: np.ndarray) -> np.ndarray:
        return np.abs(self.values(points)) / self.tolerance_scale(points)

    def jacobian(self, point: Sequence[float]) -> np.ndarray:
        """Matrix of partial derivatives, shape (polynomials, variables)"""
        x = np.asarray(point, dtype=float)
        jac = np.zeros((len(self), len(self.variables)))
        for k, (exps, coeffs) in enumerate(zip(self.exponents, self.coefficients)):
            for j in range(len(self.variables)):
                e = exps[:, j]
                mask = e > 0
                if not mask.any():
                    continue
                lowered = exps[mask].copy()
                lowered[:, j] -= 1
                jac[k, j] = np.sum(coeffs[mask] * e[mask] * np.prod(x[None, :] ** lowered, axis=1))
        return jac
