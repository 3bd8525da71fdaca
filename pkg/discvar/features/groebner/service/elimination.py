"""Elimination ideals via a block order"""
import logging
from typing import Iterable, Optional, Tuple

from discvar.features.groebner.constants import GroebnerLimits
from discvar.features.groebner.domain.entities import BasisStats, PolySystem
from discvar.features.groebner.service.buchberger import compute_basis
from discvar.features.poly.constants import TermOrderKind
from discvar.features.poly.domain.entities import GREVLEX, PolyContext, TermOrder
from discvar.features.poly.exceptions import UnknownVariableError
from discvar.features.poly.service import change_context

logger = logging.getLogger(__name__)


def eliminate_with_stats(
    gens: PolySystem,
    drop: Iterable[str],
    limits: Optional[GroebnerLimits] = None,
) -> Tuple[PolySystem, BasisStats]:
    """
    Reduced grevlex basis of ideal(gens) intersected with the ring of the kept variables.

    The basis is computed under a block order with the dropped variables first;
    members free of dropped variables form the elimination ideal basis.
    """
    ctx = gens.context
    drop = list(drop)
    unknown = [v for v in drop if v not in ctx.variables]
    if unknown:
        raise UnknownVariableError(f"Cannot eliminate unknown variables: {', '.join(unknown)}", unknown)
    kept = tuple(v for v in ctx.variables if v not in drop)
    if not kept:
        raise UnknownVariableError("Elimination must keep at least one variable")

    block_ctx = PolyContext(tuple(drop) + kept, TermOrder(TermOrderKind.BLOCK, len(drop)), ctx.parameter)
    kept_ctx = PolyContext(kept, GREVLEX, ctx.parameter)
    logger.info(f"Eliminating {len(drop)} variables, keeping {len(kept)}")

    lifted = PolySystem(tuple(change_context(g, block_ctx) for g in gens), block_ctx)
    block_basis, stats = compute_basis(lifted, limits)

    survivors = [
        g for g in block_basis
        if all(not any(m[:len(drop)]) for m in g.itermonoms())
    ]
    projected = PolySystem(tuple(change_context(g, kept_ctx) for g in survivors), kept_ctx)
    basis, restats = compute_basis(projected, limits)
    logger.info(f"Elimination ideal has {len(basis)} generators")
    return basis, stats.merge(restats)


def eliminate(
    gens: PolySystem,
    drop: Iterable[str],
    limits: Optional[GroebnerLimits] = None,
) -> PolySystem:
    basis, _ = eliminate_with_stats(gens, drop, limits)
    return basis
