"""Normal forms, S-polynomials and reduction traces"""
import time
from typing import List, Optional, Sequence, Tuple, Union

from sympy.polys.rings import PolyElement

from discvar.features.groebner.constants import CLOCK_INTERVAL, GroebnerLimits
from discvar.features.groebner.domain.entities import PolySystem
from discvar.features.groebner.exceptions import ReductionLimitExceeded
from discvar.features.poly.service import ensure_same_context

Reducers = Union[PolySystem, Sequence[PolyElement]]


class ReductionBudget:
    """Steps allowed per reduction and the deadline shared by all reductions of one computation"""

    def __init__(self, max_steps: int, deadline: Optional[float] = None):
        self.max_steps = max_steps
        self.deadline = deadline

    @classmethod
    def from_limits(cls, limits: GroebnerLimits) -> "ReductionBudget":
        deadline = None if limits.max_seconds is None else time.perf_counter() + limits.max_seconds
        return cls(limits.max_reduction_steps, deadline)

    def check(self, steps: int) -> None:
        if steps > self.max_steps:
            raise ReductionLimitExceeded(f"Reduction step limit {self.max_steps} exceeded", steps)
        if self.deadline is not None and steps % CLOCK_INTERVAL == 0 and time.perf_counter() > self.deadline:
            raise ReductionLimitExceeded("Time limit exceeded during reduction", steps)


def _reducers(G: Reducers) -> List[PolyElement]:
    return [g for g in G if g]


def _bounded_rem(f: PolyElement, reducers: List[PolyElement], budget: ReductionBudget) -> PolyElement:
    """The remainder of PolyElement.rem, one leading term per step"""
    ring = f.ring
    domain = ring.domain
    zero = domain.zero
    monomial_div = ring.monomial_div
    monomial_mul = ring.monomial_mul
    leads = [(g.LM, g.LC, g) for g in reducers]

    remainder = ring.zero.copy()
    f = f.copy()
    steps = 0
    while f:
        m = f.leading_expv()
        c = f[m]
        for lm, lc, g in leads:
            q = monomial_div(m, lm)
            if q is None:
                continue
            factor = domain.quo(c, lc)
            for mg, cg in g.iterterms():
                m2 = monomial_mul(mg, q)
                c2 = f.get(m2, zero) - cg * factor
                if c2:
                    f[m2] = c2
                else:
                    del f[m2]
            break
        else:
            remainder[m] = c
            del f[m]
        steps += 1
        budget.check(steps)
    return remainder


def reduce(f: PolyElement, G: Reducers, budget: Optional[ReductionBudget] = None) -> PolyElement:
    """
    Full remainder of f modulo G: no term is divisible by a leading monomial of G.

    With a budget, ReductionLimitExceeded is raised once it runs out.
    """
    reducers = _reducers(G)
    if not reducers or not f:
        return f
    for g in reducers:
        ensure_same_context(f, g)
    if budget is None:
        return f.rem(reducers)
    return _bounded_rem(f, reducers, budget)


def reduce_with_trace(f: PolyElement, G: Reducers) -> Tuple[List[PolyElement], PolyElement]:
    """Quotients q_i and remainder r with f = sum(q_i * g_i) + r, aligned with the nonzero members of G"""
    reducers = _reducers(G)
    if not reducers:
        return [], f
    for g in reducers:
        ensure_same_context(f, g)
    quotients, remainder = f.div(reducers)
    return list(quotients), remainder


def spoly(f: PolyElement, g: PolyElement) -> PolyElement:
    """Fraction-free S-polynomial lc(g)*(L/lm f)*f - lc(f)*(L/lm g)*g, L = lcm of leading monomials"""
    R = f.ring
    lcm = R.monomial_lcm(f.LM, g.LM)
    s1 = f.mul_term((R.monomial_div(lcm, f.LM), g.LC))
    s2 = g.mul_term((R.monomial_div(lcm, g.LM), f.LC))
    return s1 - s2
