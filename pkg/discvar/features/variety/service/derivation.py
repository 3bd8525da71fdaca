"""The relation-ideal pipeline for one n and the checks recomputed after it"""
import logging
import time
from typing import Callable, Optional

from discvar.core.cache import BasisCache
from discvar.core.config import settings
from discvar.features.groebner.constants import GroebnerLimits
from discvar.features.groebner.domain.entities import PolySystem
from discvar.features.groebner.exceptions import ResourceLimitExceeded
from discvar.features.groebner.service import buchberger, ideal_equivalent, reduce
from discvar.features.poly.service import change_context, substitute, to_text
from discvar.features.symform.service import (
    build_generic,
    determinant,
    discriminant,
    discriminant_degrees,
    trace,
)
from discvar.features.variety.constants import DerivationStatus
from discvar.features.variety.domain.entities import Derivation
from discvar.features.variety.domain.schemas import AbortInfo, CheckResult
from discvar.features.variety.service.relations import (
    relations_ideal_with_stats,
    restrict_trace_zero,
    simplify_system,
)
from discvar.shared.constants import matrix_variable

logger = logging.getLogger(__name__)

CHECK_DISCRIMINANT = "discriminant in Rels"
CHECK_DIAGONAL = "diagonal substitution"
CHECK_TRACE = "trace identity modulo OrtEs"
CHECK_DETERMINANT = "determinant identity modulo OrtEs"
CHECK_RADICAL = "Rels and RelsS generate the same radical"


def _abort(derivation: Derivation, stage: str, e: ResourceLimitExceeded) -> Derivation:
    logger.warning(f"{stage} aborted after {e.pairs_done} pairs: {e.message}")
    derivation.status = DerivationStatus.ABORTED
    derivation.abort = AbortInfo(
        stage=stage,
        message=e.message,
        pairs_done=e.pairs_done,
        basis_size=e.basis_size,
        max_degree=e.max_degree,
        pairs_pending=e.pairs_pending,
    )
    return derivation


def derive(
    n: int,
    parametrization: Optional[str] = None,
    simplify: bool = True,
    limits: Optional[GroebnerLimits] = None,
    cache: Optional[BasisCache] = None,
) -> Derivation:
    """
    Rels, then RelsS and M0eqs, then the verification checks.

    A resource limit stops the pipeline with status aborted and the partial
    progress in `abort`; the systems computed before it are kept.
    """
    limits = limits or GroebnerLimits.from_settings()
    derivation = Derivation(n=n, parametrization=parametrization or settings.PARAMETRIZATION)

    start = time.perf_counter()
    try:
        rels, stats = relations_ideal_with_stats(n, derivation.parametrization, limits, cache)
    except ResourceLimitExceeded as e:
        return _abort(derivation, "relations", e)
    derivation.rels = rels
    derivation.stats = stats
    derivation.timings["relations"] = time.perf_counter() - start

    if simplify:
        start = time.perf_counter()
        try:
            derivation.rels_s = simplify_system(rels, limits)
        except ResourceLimitExceeded as e:
            return _abort(derivation, "simplify", e)
        derivation.timings["simplify"] = time.perf_counter() - start

    start = time.perf_counter()
    try:
        derivation.m0eqs = restrict_trace_zero(derivation.rels_s or rels, limits)
    except ResourceLimitExceeded as e:
        return _abort(derivation, "restrict", e)
    derivation.timings["restrict"] = time.perf_counter() - start

    start = time.perf_counter()
    verify_derivation(n, derivation, limits)
    derivation.timings["checks"] = time.perf_counter() - start
    logger.info(
        f"Derivation n={n}: {len(rels)} relations, "
        f"{derivation.simplified_count} simplified, passed={derivation.passed}"
    )
    return derivation


def run_check(name: str, check: Callable[[], str]) -> CheckResult:
    """A check returns an empty string on success and a description of the failure otherwise"""
    try:
        detail = check()
    except ResourceLimitExceeded as e:
        detail = f"resource limit: {e.message}"
    except Exception as e:
        logger.exception(f"Check {name} raised")
        detail = f"{type(e).__name__}: {e}"
    result = CheckResult(name=name, passed=not detail, detail=detail or "ok")
    logger.info(f"Check {name}: {'pass' if result.passed else 'FAIL'}")
    return result


def _discriminant_check(rels: PolySystem, n: int) -> str:
    remainder = reduce(change_context(discriminant(n), rels.context), rels)
    return f"remainder {to_text(remainder)[:80]}" if remainder else ""


def _diagonal_check(rels: PolySystem, n: int, eigen: list) -> str:
    """diag(lam, lam, mu1, ..., mu_{n-2}) satisfies every relation identically"""
    lifted = rels.context.extend(eigen)
    gens = lifted.gens()
    diagonal = [eigen[0]] + eigen
    bindings = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            bindings[matrix_variable(i, j)] = gens[diagonal[i - 1]] if i == j else 0
    failing = [
        index for index, p in enumerate(rels)
        if substitute(change_context(p, lifted), bindings)
    ]
    return f"members {failing} do not vanish" if failing else ""


def _identity_check(difference, ortes: PolySystem, limits: Optional[GroebnerLimits]) -> str:
    remainder = reduce(difference, buchberger(ortes, limits))
    return f"remainder {to_text(remainder)[:80]}" if remainder else ""


def verify_derivation(
    n: int,
    derivation: Derivation,
    limits: Optional[GroebnerLimits] = None,
) -> Derivation:
    """
    Recompute the checks of a derivation; failures are recorded, never raised.

    Discriminant membership, diagonal substitution, trace and determinant of
    X = Y D Y^T modulo OrtEs, and radical equality of Rels and RelsS.
    """
    derivation.checks = []
    if derivation.rels is None:
        derivation.checks.append(CheckResult(name=CHECK_DISCRIMINANT, passed=False, detail="Rels not computed"))
        return derivation

    rels = derivation.rels
    setup = build_generic(n, derivation.parametrization)
    checks = [
        (CHECK_DISCRIMINANT, lambda: _discriminant_check(rels, n)),
        (CHECK_DIAGONAL, lambda: _diagonal_check(rels, n, setup.eigen_variables)),
        (CHECK_TRACE, lambda: _identity_check(trace(setup.X) - setup.eigenvalue_sum(), setup.ortes, limits)),
        (CHECK_DETERMINANT, lambda: _identity_check(determinant(setup.X) - setup.eigenvalue_product(), setup.ortes, limits)),
    ]
    if derivation.rels_s is not None:
        checks.append((
            CHECK_RADICAL,
            lambda: "" if ideal_equivalent(rels, derivation.rels_s) else "some square is not a member",
        ))
    derivation.checks = [run_check(name, check) for name, check in checks]
    derivation.degrees = discriminant_degrees(n, discriminant(n))
    return derivation
