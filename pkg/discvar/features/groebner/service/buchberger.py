"""Buchberger's algorithm with the normal selection strategy and Gebauer-Moeller criteria"""
import logging
import time
from typing import Dict, List, Optional, Tuple

from sympy.polys.rings import PolyElement

from discvar.features.groebner.constants import GroebnerLimits, PAIR_LOG_INTERVAL, UNLIMITED
from discvar.features.groebner.domain.entities import BasisStats, PolySystem
from discvar.features.groebner.exceptions import ReductionLimitExceeded, ResourceLimitExceeded
from discvar.features.groebner.service.reduction import ReductionBudget, reduce, spoly
from discvar.features.poly.service import max_coefficient_bits, normalize_primitive, total_degree

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def _pair_key(G: List[PolyElement], pair: Pair):
    """Normal strategy: degree of the lcm, then the term order, then generator indices"""
    R = G[0].ring
    i, j = pair
    lcm = R.monomial_lcm(G[i].LM, G[j].LM)
    return (sum(lcm), R.order(lcm), j, i)


def update(G: List[PolyElement], P: Dict[Pair, tuple], f: PolyElement) -> int:
    """
    Add f to the basis G and update the pair queue P in place.

    Returns the number of candidate pairs discarded by the criteria.
    """
    R = f.ring
    lcm = R.monomial_lcm
    mul = R.monomial_mul
    div = R.monomial_div
    lmf = f.LM
    lmG = [g.LM for g in G]
    pruned = 0

    for (i, j) in list(P):
        lij = lcm(lmG[i], lmG[j])
        if div(lij, lmf) and lij != lcm(lmG[i], lmf) and lij != lcm(lmG[j], lmf):
            del P[(i, j)]
            pruned += 1

    lcm_classes: Dict[tuple, List[int]] = {}
    for i in range(len(G)):
        lcm_classes.setdefault(lcm(lmG[i], lmf), []).append(i)

    minimal_lcms: List[tuple] = []
    for L in sorted(lcm_classes, key=R.order):
        if all(not div(L, M) for M in minimal_lcms):
            minimal_lcms.append(L)
        else:
            pruned += len(lcm_classes[L])

    G.append(f)
    new_index = len(G) - 1
    for L in minimal_lcms:
        members = lcm_classes[L]
        if any(lcm(lmG[i], lmf) == mul(lmG[i], lmf) for i in members):
            pruned += len(members)
            continue
        pair = (min(members), new_index)
        P[pair] = _pair_key(G, pair)
        pruned += len(members) - 1
    return pruned


def minimalize(G: List[PolyElement]) -> List[PolyElement]:
    """Minimal basis: drop members whose leading monomial is divisible by another's"""
    if not G:
        return []
    R = G[0].ring
    minimal: List[PolyElement] = []
    for f in sorted(G, key=lambda h: R.order(h.LM)):
        if all(not R.monomial_div(f.LM, g.LM) for g in minimal):
            minimal.append(f)
    return minimal


def interreduce(G: List[PolyElement], budget: Optional[ReductionBudget] = None) -> List[PolyElement]:
    """Reduced basis from a minimal one, sorted by ascending leading monomial"""
    if not G:
        return []
    R = G[0].ring
    reduced = []
    for i, g in enumerate(G):
        reduced.append(normalize_primitive(reduce(g, G[:i] + G[i + 1:], budget)))
    return sorted(reduced, key=lambda h: R.order(h.LM))


def _check_limits(stats: BasisStats, h: PolyElement, limits: GroebnerLimits, budget: ReductionBudget, G, P) -> None:
    if budget.deadline is not None and time.perf_counter() > budget.deadline:
        raise ResourceLimitExceeded(
            f"Time limit of {limits.max_seconds} s exceeded",
            pairs_done=stats.pairs_processed,
            basis_size=len(G),
            max_degree=stats.max_degree,
            pairs_pending=len(P),
        )
    if stats.pairs_processed > limits.max_pairs:
        raise ResourceLimitExceeded(
            f"S-pair limit {limits.max_pairs} exceeded",
            pairs_done=stats.pairs_processed,
            basis_size=len(G),
            max_degree=stats.max_degree,
            pairs_pending=len(P),
        )
    if h and max_coefficient_bits(h) > limits.max_coeff_bits:
        raise ResourceLimitExceeded(
            f"Coefficient size limit of {limits.max_coeff_bits} bits exceeded",
            pairs_done=stats.pairs_processed,
            basis_size=len(G),
            max_degree=stats.max_degree,
            pairs_pending=len(P),
        )


def compute_basis(
    gens: PolySystem,
    limits: Optional[GroebnerLimits] = None,
) -> Tuple[PolySystem, BasisStats]:
    """
    Reduced Groebner basis of ideal(gens) under the context order, with statistics.

    Deterministic: pairs are taken by (lcm degree, lcm order, j, i).
    """
    limits = limits or UNLIMITED
    started = time.perf_counter()
    budget = ReductionBudget.from_limits(limits)
    stats = BasisStats()
    ctx = gens.context

    G: List[PolyElement] = []
    P: Dict[Pair, tuple] = {}
    for f in gens:
        if not f:
            continue
        f = normalize_primitive(f)
        if f.is_ground:
            one = PolySystem((ctx.one,), ctx, reduced=True)
            stats.basis_size = 1
            return one, stats
        stats.pairs_pruned += update(G, P, f)
        stats.max_degree = max(stats.max_degree, total_degree(f))

    while P:
        pair = min(P, key=P.get)
        del P[pair]
        i, j = pair
        try:
            h = reduce(spoly(G[i], G[j]), G, budget)
        except ReductionLimitExceeded as e:
            raise ResourceLimitExceeded(
                f"{e.message} (S-pair {stats.pairs_processed + 1}, {e.steps} steps)",
                pairs_done=stats.pairs_processed,
                basis_size=len(G),
                max_degree=stats.max_degree,
                pairs_pending=len(P),
            ) from e
        stats.pairs_processed += 1
        _check_limits(stats, h, limits, budget, G, P)
        if stats.pairs_processed % PAIR_LOG_INTERVAL == 0:
            logger.debug(
                f"{stats.pairs_processed} pairs processed, basis {len(G)}, queue {len(P)}"
            )
        if not h:
            stats.zero_reductions += 1
            continue
        h = normalize_primitive(h)
        if h.is_ground:
            stats.basis_size = 1
            stats.elapsed_seconds = time.perf_counter() - started
            return PolySystem((ctx.one,), ctx, reduced=True), stats
        stats.max_degree = max(stats.max_degree, total_degree(h))
        stats.pairs_pruned += update(G, P, h)

    basis = interreduce(minimalize(G), budget)
    stats.basis_size = len(basis)
    stats.elapsed_seconds = time.perf_counter() - started
    logger.debug(
        f"Basis of {len(basis)} members from {len(gens)} generators "
        f"({stats.pairs_processed} pairs, {stats.zero_reductions} zero reductions)"
    )
    return PolySystem(tuple(basis), ctx, reduced=True), stats


def buchberger(gens: PolySystem, limits: Optional[GroebnerLimits] = None) -> PolySystem:
    """Reduced Groebner basis of ideal(gens)"""
    if gens.reduced:
        return gens
    basis, _ = compute_basis(gens, limits)
    return basis


def is_groebner(G: PolySystem) -> bool:
    """Post-hoc Buchberger criterion: every S-polynomial reduces to zero"""
    members = [g for g in G if g]
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            if reduce(spoly(members[i], members[j]), members):
                return False
    return True
