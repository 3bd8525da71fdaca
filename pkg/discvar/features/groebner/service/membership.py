"""Ideal and radical membership, ideal equivalence, divisibility probe"""
import logging
from typing import Dict, Iterable, Optional

from sympy.polys.rings import PolyElement

from discvar.features.groebner.constants import DIVISIBILITY_POWERS, GroebnerLimits
from discvar.features.groebner.domain.entities import PolySystem
from discvar.features.groebner.service.buchberger import buchberger
from discvar.features.groebner.service.reduction import reduce
from discvar.features.poly.domain.entities import GREVLEX
from discvar.features.poly.service import change_context, ensure_same_context
from discvar.shared.constants import RABINOWITSCH_NAME

logger = logging.getLogger(__name__)


def ideal_member(f: PolyElement, gens: PolySystem, limits: Optional[GroebnerLimits] = None) -> bool:
    """f in ideal(gens)"""
    if not f:
        return True
    basis = buchberger(gens, limits)
    if not len(basis):
        return False
    ensure_same_context(f, basis[0])
    return not reduce(f, basis)


def radical_member(f: PolyElement, gens: PolySystem, limits: Optional[GroebnerLimits] = None) -> bool:
    """Some power of f lies in ideal(gens); decided by 1 in ideal(gens, 1 - t*f)"""
    if not f:
        return True
    ctx = gens.context
    extended = ctx.with_order(GREVLEX).extend([RABINOWITSCH_NAME])
    t = extended.gen(RABINOWITSCH_NAME)
    lifted = [change_context(g, extended) for g in gens]
    lifted.append(extended.one - t * change_context(f, extended))
    basis = buchberger(PolySystem(tuple(lifted), extended), limits)
    return basis.is_unit()


def all_members(polys: Iterable[PolyElement], gens: PolySystem, power: int = 1) -> bool:
    basis = buchberger(gens)
    return all(not reduce(p ** power, basis) for p in polys)


def ideal_equivalent(A: PolySystem, B: PolySystem, power: int = 2) -> bool:
    """Mutual membership of the power-th powers: A and B define the same radical when true"""
    return all_members(A, B, power) and all_members(B, A, power)


def divisibility_probe(g: PolyElement, d: PolyElement, powers=DIVISIBILITY_POWERS) -> Dict[int, bool]:
    """For each m in powers: does d divide g^m exactly"""
    ensure_same_context(g, d)
    result = {}
    for m in powers:
        result[m] = not (g ** m).rem([d])
        logger.debug(f"divisibility of g^{m} by the discriminant: {result[m]}")
    return result
