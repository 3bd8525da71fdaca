"""Equations of the conjugation orbit of a diagonal matrix"""
import logging
from fractions import Fraction
from itertools import groupby
from typing import List, Optional, Tuple

from discvar.core.cache import BasisCache, cached_basis
from discvar.features.groebner.constants import GroebnerLimits
from discvar.features.groebner.domain.entities import PolySystem
from discvar.features.groebner.service import eliminate
from discvar.features.numgeo.domain.entities import EigenMultiset
from discvar.features.symform.domain.entities import UnivariatePoly
from discvar.features.symform.service import build_generic, char_poly, discriminant, generic_symmetric
from discvar.features.variety.constants import TASK_ORBIT
from discvar.features.variety.domain.entities import Homothety, OrbitSystem
from discvar.features.variety.exceptions import EigenvalueError
from discvar.features.variety.service.relations import graph_system

logger = logging.getLogger(__name__)


def exact_values(eigs: EigenMultiset) -> Tuple[Fraction, ...]:
    if eigs.exact is None:
        raise EigenvalueError("Orbit equations need rational eigenvalues", str(eigs))
    return eigs.exact


def _clusters(values: Tuple[Fraction, ...]) -> List[Tuple[Fraction, int]]:
    return [(v, len(list(g))) for v, g in groupby(sorted(values))]


def _roots_to_coefficients(values: Tuple[Fraction, ...]) -> List[Fraction]:
    """Coefficients of prod(t - v), constant term first"""
    coeffs = [Fraction(1)]
    for v in values:
        shifted = [Fraction(0)] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] -= v * c
        coeffs = shifted
    return coeffs


def orbit_ideal_viete(eigs: EigenMultiset) -> PolySystem:
    """
    discr(X) = 0 followed by c_i(X) = c_i for i = 0..n-1, where c_i are the
    coefficients of prod(t - lambda) and c_i(X) those of the characteristic
    polynomial of [x_ij].
    """
    values = exact_values(eigs)
    n = len(values)
    X = generic_symmetric(n)
    ctx = X.context
    cp: UnivariatePoly = char_poly(X)
    target = _roots_to_coefficients(values)
    equations = [discriminant(n)]
    equations += [cp.coefficient(i) - ctx.constant(target[i]) for i in range(n)]
    return PolySystem(tuple(equations), ctx)


def _split_double(values: Tuple[Fraction, ...]) -> Tuple[Fraction, List[Fraction]]:
    """(repeated value, the remaining n - 2 values)"""
    for value, count in _clusters(values):
        if count >= 2:
            rest = list(values)
            rest.remove(value)
            rest.remove(value)
            return value, rest
    raise EigenvalueError(
        "Eigenvalues are simple; the orbit does not lie in the discriminant variety",
        ",".join(str(v) for v in values),
    )


def orbit_minimal_eqs(
    eigs: EigenMultiset,
    parametrization: Optional[str] = None,
    limits: Optional[GroebnerLimits] = None,
    cache: Optional[BasisCache] = None,
) -> OrbitSystem:
    """
    Reduced basis of the orbit ideal: the relation-ideal elimination with
    lam and mu_i pinned to the given values by linear equations.
    """
    values = exact_values(eigs)
    n = len(values)
    lam_value, mu_values = _split_double(values)
    setup = build_generic(n, parametrization)
    gens = setup.context.gens()
    lam, *mus = setup.eigen_variables
    pins = [gens[lam] - setup.context.constant(lam_value)]
    pins += [gens[m] - setup.context.constant(v) for m, v in zip(mus, mu_values)]

    def compute() -> PolySystem:
        return eliminate(graph_system(setup, pins), setup.context.variables, limits)

    equations = cached_basis(
        TASK_ORBIT,
        n,
        {"eigenvalues": str(eigs), "parametrization": setup.parametrization.value},
        compute,
        cache,
    )
    logger.info(f"Orbit of diag({eigs}): {len(equations)} equations of degrees {equations.degrees()}")
    return OrbitSystem(eigenvalues=eigs, equations=equations)


def homothety_parameters(eigs_from: EigenMultiset, eigs_to: EigenMultiset) -> Homothety:
    """
    shift a and factor b with Orbit(eigs_to) = b * (Orbit(eigs_from) + a * I).

    The multiplicity patterns must match, read upwards or downwards (b < 0).
    """
    src = _clusters(exact_values(eigs_from))
    dst = _clusters(exact_values(eigs_to))
    if eigs_from.n != eigs_to.n or len(src) != len(dst):
        raise EigenvalueError(f"No homothety maps {eigs_from} to {eigs_to}", str(eigs_to))
    if len(src) == 1:
        return Homothety(shift=dst[0][0] - src[0][0], factor=Fraction(1))

    for candidate in (dst, dst[::-1]):
        if [m for _, m in src] != [m for _, m in candidate]:
            continue
        factor = (candidate[1][0] - candidate[0][0]) / (src[1][0] - src[0][0])
        shift = candidate[0][0] / factor - src[0][0]
        h = Homothety(shift=shift, factor=factor)
        if all(h.apply(s) == d for (s, _), (d, _) in zip(src, candidate)):
            return h
    raise EigenvalueError(f"No homothety maps {eigs_from} to {eigs_to}", str(eigs_to))
