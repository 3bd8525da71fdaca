"""Printed reference systems and comparison against them"""
import logging
from typing import Optional

from discvar.core.resource_loader import ResourceLoader, get_resource_loader
from discvar.features.groebner.domain.entities import PolySystem
from discvar.features.groebner.service import ideal_equivalent, system_from_texts
from discvar.features.poly.domain.entities import PolyContext
from discvar.features.poly.exceptions import UnknownVariableError
from discvar.features.poly.service import change_context, normalize_primitive, to_text
from discvar.features.variety.constants import GoldenMatch

logger = logging.getLogger(__name__)


def load_golden_system(name: str, loader: Optional[ResourceLoader] = None) -> PolySystem:
    """A system from resources/golden/{name}.yml in grevlex over its listed variables"""
    document = (loader or get_resource_loader()).load_golden(name)
    ctx = PolyContext(tuple(document.variables), parameter=document.parameter)
    return system_from_texts(document.polynomials, ctx)


def _normalized_terms(system: PolySystem) -> set:
    return {to_text(normalize_primitive(p)) for p in system if p}


def golden_compare(computed: PolySystem, printed: PolySystem) -> GoldenMatch:
    """
    Identical when both list the same polynomials up to scalars; equivalent
    when the squares of each lie in the ideal of the other.
    """
    target = computed.context
    if set(printed.context.variables) - set(target.variables) or printed.context.parameter != target.parameter:
        logger.info(f"Golden system over {printed.context} cannot live in {target}")
        return GoldenMatch.DIFFERENT
    try:
        lifted = PolySystem(tuple(change_context(p, target) for p in printed), target)
    except UnknownVariableError:
        return GoldenMatch.DIFFERENT

    if _normalized_terms(computed) == _normalized_terms(lifted):
        return GoldenMatch.IDENTICAL
    if ideal_equivalent(computed, lifted):
        return GoldenMatch.EQUIVALENT
    return GoldenMatch.DIFFERENT
