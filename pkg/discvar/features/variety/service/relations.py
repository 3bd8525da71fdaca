"""The relation ideal of the discriminant variety, its simplification and trace-zero restriction"""
import logging
from typing import Iterable, List, Optional, Tuple

from sympy.polys.rings import PolyElement

from discvar.core.cache import BasisCache, cached_basis
from discvar.features.groebner.constants import GroebnerLimits
from discvar.features.groebner.domain.entities import BasisStats, PolySystem
from discvar.features.groebner.exceptions import ResourceLimitExceeded
from discvar.features.groebner.service import buchberger, eliminate_with_stats, radical_member, reduce
from discvar.features.poly.domain.entities import GREVLEX, PolyContext
from discvar.features.poly.service import change_context, normalize_primitive, to_text, total_degree, substitute
from discvar.features.symform.domain.entities import GenericSetup
from discvar.features.symform.service import build_generic, elimination_form
from discvar.features.variety.constants import TASK_RELATIONS
from discvar.shared.constants import matrix_variable, matrix_variables

logger = logging.getLogger(__name__)


def graph_system(setup: GenericSetup, extra: Iterable[PolyElement] = ()) -> PolySystem:
    """
    {x_ij - X(i, j) | i <= j} together with OrtEs and any extra equations in Zs.

    X and the added frame conditions come from elimination_form, which keeps
    the ideal unchanged.

    The context lists the parameters Zs first and the matrix entries last, so
    eliminating Zs keeps the x_ij in their usual order.
    """
    n = setup.n
    ctx = PolyContext(setup.context.variables + tuple(matrix_variables(n)))
    gens = ctx.gens()
    X, frame_conditions = elimination_form(setup)
    equations = [
        gens[matrix_variable(i + 1, j + 1)] - change_context(X[i, j], ctx)
        for i in range(n)
        for j in range(i, n)
    ]
    equations += [change_context(p, ctx) for p in setup.ortes]
    equations += [change_context(p, ctx) for p in frame_conditions]
    equations += [change_context(p, ctx) for p in extra]
    return PolySystem(tuple(equations), ctx)


def relations_ideal_with_stats(
    n: int,
    parametrization: Optional[str] = None,
    limits: Optional[GroebnerLimits] = None,
    cache: Optional[BasisCache] = None,
) -> Tuple[PolySystem, Optional[BasisStats]]:
    """Rels and the statistics of its computation; stats are None on a cache hit"""
    setup = build_generic(n, parametrization)
    collected: List[BasisStats] = []

    def compute() -> PolySystem:
        basis, stats = eliminate_with_stats(graph_system(setup), setup.context.variables, limits)
        collected.append(stats)
        return basis

    rels = cached_basis(
        TASK_RELATIONS,
        n,
        {"parametrization": setup.parametrization.value},
        compute,
        cache,
    )
    logger.info(f"Rels for n={n}: {len(rels)} members of degrees {rels.degrees()}")
    return rels, (collected[0] if collected else None)


def relations_ideal(
    n: int,
    parametrization: Optional[str] = None,
    limits: Optional[GroebnerLimits] = None,
    cache: Optional[BasisCache] = None,
) -> PolySystem:
    """
    Reduced grevlex basis of all polynomial relations among the entries of X = Y D Y^T.

    Raises ResourceLimitExceeded with the partial progress when limits are hit.
    """
    rels, _ = relations_ideal_with_stats(n, parametrization, limits, cache)
    return rels


def _scan_order(members: List[PolyElement]) -> List[int]:
    """Indices by descending total degree, then by printed form"""
    return sorted(range(len(members)), key=lambda i: (-total_degree(members[i]), to_text(members[i])))


def _redundant(p: PolyElement, rest: PolySystem, limits: Optional[GroebnerLimits]) -> bool:
    """Some power of p lies in ideal(rest)"""
    basis = buchberger(rest, limits)
    if not reduce(p, basis) or not reduce(p ** 2, basis):
        return True
    try:
        return radical_member(p, rest, limits)
    except ResourceLimitExceeded as e:
        logger.warning(f"Radical membership of {to_text(p)[:60]}... undecided: {e.message}")
        return False


def simplify_system(S: PolySystem, limits: Optional[GroebnerLimits] = None) -> PolySystem:
    """
    Drop members having a power in the ideal of the others until none does.

    Candidates are scanned by descending degree; the survivors keep their
    order in S and are normalized primitive.
    """
    members = [normalize_primitive(p) for p in S if p]
    changed = True
    while changed and len(members) > 1:
        changed = False
        for i in _scan_order(members):
            rest = PolySystem(tuple(members[:i] + members[i + 1:]), S.context)
            if _redundant(members[i], rest, limits):
                logger.info(f"Removing redundant member of degree {total_degree(members[i])}")
                del members[i]
                changed = True
                break
    logger.info(f"Simplified {len(S)} members to {len(members)}")
    return PolySystem(tuple(members), S.context)


def _size_of(ctx: PolyContext) -> int:
    n = 0
    while matrix_variable(n + 1, n + 1) in ctx.variables:
        n += 1
    return n


def restrict_trace_zero(S: PolySystem, limits: Optional[GroebnerLimits] = None) -> PolySystem:
    """
    Substitute x11 = -(x22 + ... + xnn) into every member of S and simplify.

    Members that vanish or repeat up to a scalar are dropped before
    simplify_system; the result lists restricted members of S, not a basis.
    """
    ctx = S.context
    n = _size_of(ctx)
    gens = ctx.gens()
    first = matrix_variable(1, 1)
    binding = {first: -sum((gens[matrix_variable(i, i)] for i in range(2, n + 1)), ctx.zero)}
    target = ctx.without([first]).with_order(GREVLEX)
    restricted: List[PolyElement] = []
    for p in S:
        q = change_context(substitute(p, binding), target)
        if q:
            q = normalize_primitive(q)
            if q not in restricted:
                restricted.append(q)
    system = simplify_system(PolySystem(tuple(restricted), target), limits)
    logger.info(f"Trace-zero restriction keeps {len(system)} of {len(S)} members")
    return system
