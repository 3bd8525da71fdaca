"""The verification battery behind `discvar verify`"""
import logging
import math
from functools import cached_property
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

import numpy as np

from discvar.core.cache import BasisCache
from discvar.core.config import settings
from discvar.features.groebner.constants import GroebnerLimits
from discvar.features.groebner.domain.entities import PolySystem
from discvar.features.groebner.service import divisibility_probe
from discvar.features.numgeo.constants import WITNESS_DEVIATION_TOL
from discvar.features.numgeo.domain.entities import EigenMultiset, SymMatrixN
from discvar.features.numgeo.service import (
    circle_fit_deviation,
    circumference_family,
    embracing_plane_witness,
    exp_v_rank_check,
    jacobian_rank_at,
    orbit_diameter_estimate,
    orbit_dimension,
    orbit_sphere_radius,
    orthogonality_witness,
    singularity_witness,
    uniform_angles,
)
from discvar.features.poly.service import change_context, to_text, total_degree
from discvar.features.symform.service import discriminant
from discvar.features.variety.constants import (
    BOUND_SAMPLES,
    BOUND_TRIALS,
    CHECK_K,
    CIRCLE_POINTS,
    CIRCLE_RADIUS_SQUARED,
    CYLINDER_POINTS,
    DEEP_MAX_PAIRS,
    DEEP_MAX_REDUCTION_STEPS,
    DEEP_MAX_SECONDS,
    DEEP_N,
    DEGREE_FLOOR,
    DIAMETER_FLOOR,
    DIAMETER_SAMPLES,
    GOLDEN_M0EQS,
    GOLDEN_ONE_ORBIT,
    GOLDEN_ONE_ORBIT_INFINITY,
    GOLDEN_ONE_ORBIT_K0,
    GOLDEN_ORBIT,
    GOLDEN_RELS_S,
    HOMOTHETY_FACTOR,
    HOMOTHETY_SHIFT,
    ONE_ORBIT_DIAGONAL,
    QUADRATIC_FORM_FLOOR,
    REGULAR_POINTS,
    SCALAR_POINTS,
    DerivationStatus,
    GoldenMatch,
)
from discvar.features.variety.domain.entities import Derivation, Homothety, OrbitSystem
from discvar.features.variety.domain.schemas import CheckResult, VerifyReport
from discvar.features.variety.service.derivation import derive, run_check
from discvar.features.variety.service.golden import golden_compare, load_golden_system
from discvar.features.variety.service.numeric import (
    discriminant_points,
    fixed_quadratic_form,
    max_form_ratio,
    max_residual,
    orbit_points,
    scalar_points,
    trace_shift_residual,
)
from discvar.features.variety.service.one_orbit import (
    determinant_residual,
    ellipse_form,
    one_orbit_eqs,
    one_orbit_limit_infinity,
    specialize_k,
)
from discvar.features.variety.service.orbit import (
    homothety_parameters,
    orbit_ideal_viete,
    orbit_minimal_eqs,
)

logger = logging.getLogger(__name__)

Check = Tuple[str, Callable[[], str]]


def _golden(computed: Optional[PolySystem], name: str, exact: bool = False) -> str:
    if computed is None:
        return "system not computed"
    match = golden_compare(computed, load_golden_system(name))
    if match == GoldenMatch.DIFFERENT or (exact and match != GoldenMatch.IDENTICAL):
        return f"{name}: {match.value}"
    return ""


def _vanishes(system: Optional[PolySystem], points: np.ndarray) -> str:
    if system is None:
        return "system not computed"
    worst = max_residual(system, points)
    return f"max relative residual {worst:.3e}" if worst >= settings.VANISH_TOL else ""


def _trace_zero(points: np.ndarray) -> np.ndarray:
    n = points.shape[1]
    shifts = np.trace(points, axis1=1, axis2=2) / n
    return points - shifts[:, None, None] * np.eye(n)[None, :, :]


def _degree_floor(rels_s: Optional[PolySystem]) -> str:
    if rels_s is None:
        return "RelsS not computed"
    low = [to_text(p) for p in rels_s if total_degree(p) < DEGREE_FLOOR]
    return f"members below degree {DEGREE_FLOOR}: {low}" if low else ""


def _quadratic_form(n: int, seed: int, samples: int) -> str:
    ratio = max_form_ratio(fixed_quadratic_form(n), discriminant_points(n, samples, seed))
    return "" if ratio > QUADRATIC_FORM_FLOOR else f"max ratio {ratio:.3e}"


def _jacobian_ranks(rels_s: Optional[PolySystem], n: int, seed: int) -> str:
    if rels_s is None:
        return "RelsS not computed"
    failures: List[str] = []
    regular = [jacobian_rank_at(rels_s, SymMatrixN(p)) for p in discriminant_points(n, REGULAR_POINTS, seed)]
    if any(r != 2 for r in regular):
        failures.append(f"ranks on the regular locus {sorted(set(regular))}")
    origin = jacobian_rank_at(rels_s, SymMatrixN.scalar(n, 0.0))
    if origin != 0:
        failures.append(f"rank {origin} at the origin")
    scalar = [jacobian_rank_at(rels_s, SymMatrixN(p)) for p in scalar_points(n, SCALAR_POINTS, seed)]
    if any(r >= 2 for r in scalar):
        failures.append(f"ranks at scalar matrices {sorted(set(scalar))}")
    return "; ".join(failures)


def _cylinder(rels_s: Optional[PolySystem], n: int, seed: int) -> str:
    if rels_s is None:
        return "RelsS not computed"
    rng = np.random.default_rng(seed)
    points = discriminant_points(n, CYLINDER_POINTS, seed)
    shifts = rng.uniform(-5.0, 5.0, CYLINDER_POINTS)
    worst = max(trace_shift_residual(rels_s, SymMatrixN(p), float(s)) for p, s in zip(points, shifts))
    return f"max relative residual {worst:.3e}" if worst >= settings.VANISH_TOL else ""


def _diameter(seed: int) -> str:
    estimate = orbit_diameter_estimate(EigenMultiset.of(ONE_ORBIT_DIAGONAL), DIAMETER_SAMPLES, seed)
    if DIAMETER_FLOOR <= estimate.estimate <= 3.0 + 1e-9 and estimate.within_bounds:
        return ""
    return f"estimate {estimate.estimate:.12f}, transposition {estimate.transposition:.12f}"


def _diameter_bounds(seed: int) -> str:
    rng = np.random.default_rng(seed)
    failures = []
    for trial in range(BOUND_TRIALS):
        n = 3 if trial % 2 == 0 else 4
        eigs = EigenMultiset.of([float(v) for v in rng.standard_normal(n)])
        estimate = orbit_diameter_estimate(eigs, BOUND_SAMPLES, seed + trial)
        if not estimate.within_bounds:
            failures.append(str(eigs))
    return f"outside bounds: {failures[:3]}" if failures else ""


def _witnesses() -> str:
    failures = []
    for name, witness in (("singularity", singularity_witness()), ("embracing plane", embracing_plane_witness())):
        if not witness.holds or witness.construction_deviation > WITNESS_DEVIATION_TOL:
            failures.append(
                f"{name}: exact {witness.exact_rank}, numeric {witness.numeric_rank}, "
                f"expected {witness.expected_rank}, deviation {witness.construction_deviation:.1e}"
            )
    return "; ".join(failures)


def _orbit_shape() -> str:
    D = SymMatrixN.diag(ONE_ORBIT_DIAGONAL)
    failures = []
    if orbit_dimension(D) != 2:
        failures.append(f"orbit dimension {orbit_dimension(D)}")
    if not orthogonality_witness(D):
        failures.append("tangent vectors not orthogonal to the diagonal")
    if abs(orbit_sphere_radius(D) - math.sqrt(3.0)) > 1e-12:
        failures.append(f"sphere radius {orbit_sphere_radius(D)}")
    if exp_v_rank_check(D) != 2:
        failures.append("exp_V rank is not 2")
    fit = circle_fit_deviation(circumference_family(D, 0.0, uniform_angles(CIRCLE_POINTS)))
    if abs(fit.radius - 1.5) > 1e-9 or fit.deviation > 1e-9:
        failures.append(f"circle radius {fit.radius}, deviation {fit.deviation:.1e}")
    return "; ".join(failures)


def _viete(seed: int) -> str:
    system = orbit_ideal_viete(EigenMultiset.of(ONE_ORBIT_DIAGONAL))
    rng = np.random.default_rng(seed)
    circle = circumference_family(SymMatrixN.diag(ONE_ORBIT_DIAGONAL), 0.0, rng.uniform(0.0, np.pi, CIRCLE_POINTS))
    return _vanishes(system, np.array([X.array for X in circle]))


def _homothety(seed: int, samples: int, systems: "_Systems") -> str:
    source = EigenMultiset.of(ONE_ORBIT_DIAGONAL)
    expected = Homothety(shift=HOMOTHETY_SHIFT, factor=HOMOTHETY_FACTOR)
    target = EigenMultiset.of([expected.apply(Fraction(v)) for v in ONE_ORBIT_DIAGONAL])
    found = homothety_parameters(source, target)
    if found != expected:
        return f"homothety {found} instead of {expected}"
    n = source.n
    points = orbit_points(SymMatrixN.diag(ONE_ORBIT_DIAGONAL), samples, seed)
    moved = float(expected.factor) * (points + float(expected.shift) * np.eye(n)[None, :, :])
    shifted = orbit_minimal_eqs(target, systems.parametrization, systems.limits, systems.cache)
    return _vanishes(shifted.equations, moved)


def _one_orbit_numeric(symbolic: PolySystem) -> str:
    """The k = CHECK_K system vanishes on the circle about e1 + CHECK_K e2"""
    system = specialize_k(symbolic, CHECK_K)
    psi = math.atan(CHECK_K)
    circle = circumference_family(SymMatrixN.diag(ONE_ORBIT_DIAGONAL), psi, uniform_angles(CIRCLE_POINTS))
    return _vanishes(system, np.array([X.array for X in circle]))


def _radius(system: PolySystem) -> str:
    form = ellipse_form(system)
    if form.radius_squared_value != CIRCLE_RADIUS_SQUARED:
        return f"radius squared {form.radius_squared}"
    return ""


def _derivation_checks(derivation: Derivation) -> List[CheckResult]:
    if derivation.status == DerivationStatus.ABORTED:
        abort = derivation.abort
        return [CheckResult(name="derivation", passed=False, detail=f"aborted in {abort.stage}: {abort.message}")]
    checks = list(derivation.checks)
    if derivation.count_discrepancy:
        logger.warning(f"RelsS has {derivation.simplified_count} members, not the announced four")
    for note in derivation.discrepancies():
        logger.info(f"Reference listing differs: {note}")
    return checks


class _Systems:
    """Orbit and 1-orbit systems shared by several checks, computed on first use"""

    def __init__(self, parametrization: str, limits: Optional[GroebnerLimits], cache: Optional[BasisCache]):
        self.parametrization = parametrization
        self.limits = limits
        self.cache = cache

    @cached_property
    def orbit(self) -> OrbitSystem:
        eigs = EigenMultiset.of(ONE_ORBIT_DIAGONAL)
        return orbit_minimal_eqs(eigs, self.parametrization, self.limits, self.cache)

    @cached_property
    def one_orbit(self) -> PolySystem:
        return one_orbit_eqs(limits=self.limits, cache=self.cache)


def _exact_checks(n: int, derivation: Derivation, systems: _Systems) -> List[Check]:
    checks: List[Check] = [("degree floor", lambda: _degree_floor(derivation.rels_s))]
    if n != 3:
        return checks

    def orbit() -> PolySystem:
        return systems.orbit.equations

    def symbolic() -> PolySystem:
        return systems.one_orbit

    checks += [
        ("golden RelsS", lambda: _golden(derivation.rels_s, GOLDEN_RELS_S)),
        ("golden M0eqs", lambda: _golden(derivation.m0eqs, GOLDEN_M0EQS)),
        ("golden orbitEqs", lambda: _golden(orbit(), GOLDEN_ORBIT)),
        ("golden 1-orbitEqs", lambda: _golden(symbolic(), GOLDEN_ONE_ORBIT, exact=True)),
        ("golden 1-orbit k=0", lambda: _golden(specialize_k(symbolic(), 0), GOLDEN_ONE_ORBIT_K0)),
        ("golden 1-orbit k=infinity", lambda: _golden(one_orbit_limit_infinity(symbolic()), GOLDEN_ONE_ORBIT_INFINITY)),
        ("det(X) + 2 modulo 1-orbit k=0", lambda: (
            "" if not determinant_residual(specialize_k(symbolic(), 0)) else "nonzero remainder"
        )),
        ("1-orbit radius", lambda: _radius(symbolic())),
        ("1-orbit k=0 radius", lambda: _radius(specialize_k(symbolic(), 0))),
        ("1-orbit k=infinity radius", lambda: _radius(one_orbit_limit_infinity(symbolic()))),
    ]
    return checks


def _numeric_checks(n: int, derivation: Derivation, systems: _Systems, seed: int, samples: int) -> List[Check]:
    diagonal = SymMatrixN.diag(ONE_ORBIT_DIAGONAL)
    checks: List[Check] = [
        ("quadratic form does not vanish", lambda: _quadratic_form(n, seed, samples)),
        ("RelsS vanishes on samples", lambda: _vanishes(derivation.rels_s, discriminant_points(n, samples, seed))),
        ("M0eqs vanish on samples", lambda: _vanishes(derivation.m0eqs, _trace_zero(discriminant_points(n, samples, seed)))),
        ("Jacobian ranks of RelsS", lambda: _jacobian_ranks(derivation.rels_s, n, seed)),
        ("cylinder shift", lambda: _cylinder(derivation.rels_s, n, seed)),
        ("diameter bounds", lambda: _diameter_bounds(seed)),
        ("rank witnesses", _witnesses),
    ]
    if n == 3:
        checks += [
            ("orbitEqs vanish on samples", lambda: _vanishes(systems.orbit.equations, orbit_points(diagonal, samples, seed))),
            ("M0eqs vanish on the orbit", lambda: _vanishes(derivation.m0eqs, orbit_points(diagonal, samples, seed))),
            ("Viete system vanishes on the circle", lambda: _viete(seed)),
            ("1-orbit system vanishes on its circle", lambda: _one_orbit_numeric(systems.one_orbit)),
            ("orbit homothety", lambda: _homothety(seed, samples, systems)),
            ("diameter of Orbit(1, 1, -2)", lambda: _diameter(seed)),
            ("orbit shape", _orbit_shape),
        ]
    return checks


def divisibility_check(derivation: Derivation) -> CheckResult:
    """Whether the discriminant divides g^2 or g^4 for every member g of RelsS; reported, never gating"""
    name = "divisibility probe"
    if derivation.rels_s is None:
        return CheckResult(name=name, passed=False, detail="RelsS not computed", informational=True)
    disc = change_context(discriminant(derivation.n), derivation.rels_s.context)
    probes = [divisibility_probe(g, disc) for g in derivation.rels_s]
    divided = [any(p.values()) for p in probes]
    detail = "; ".join(
        f"g{i}: " + ", ".join(f"g^{m} {'yes' if ok else 'no'}" for m, ok in p.items())
        for i, p in enumerate(probes, start=1)
    )
    logger.info(f"Discriminant divides a power of {sum(divided)} of {len(divided)} members")
    return CheckResult(name=name, passed=all(divided), detail=detail, informational=True)


def attempt_outcome(deep: Derivation) -> str:
    """Empty when a derivation finished with passing checks or stopped with its progress recorded"""
    if deep.status == DerivationStatus.COMPLETE:
        failed = deep.failed_checks()
        return f"completed with failing checks {failed}" if failed else ""
    abort = deep.abort
    if abort is None or not abort.stage or not abort.message:
        return "aborted without a progress record"
    return ""


def _deep_attempt(derivation: Derivation, cache: Optional[BasisCache]) -> CheckResult:
    name = f"n={DEEP_N} attempt ends cleanly"
    limits = GroebnerLimits(
        max_pairs=DEEP_MAX_PAIRS,
        max_coeff_bits=settings.MAX_COEFF_BITS,
        max_reduction_steps=DEEP_MAX_REDUCTION_STEPS,
        max_seconds=DEEP_MAX_SECONDS,
    )
    try:
        deep = derive(DEEP_N, derivation.parametrization, limits=limits, cache=cache)
    except Exception as e:
        logger.exception(f"n={DEEP_N} attempt raised")
        return CheckResult(name=name, passed=False, detail=f"{type(e).__name__}: {e}")
    failure = attempt_outcome(deep)
    if deep.status == DerivationStatus.ABORTED and not failure:
        abort = deep.abort
        detail = f"stopped in {abort.stage} after {abort.pairs_done} pairs: {abort.message}"
        logger.info(f"n={DEEP_N} {detail}")
    else:
        detail = failure or "completed"
    return CheckResult(name=name, passed=not failure, detail=detail)


def _deep_checks(derivation: Derivation, cache: Optional[BasisCache]) -> List[CheckResult]:
    return [divisibility_check(derivation), _deep_attempt(derivation, cache)]


def run_verification(
    n: int = 3,
    seed: Optional[int] = None,
    samples: Optional[int] = None,
    deep: bool = False,
    limits: Optional[GroebnerLimits] = None,
    cache: Optional[BasisCache] = None,
    parametrization: Optional[str] = None,
) -> VerifyReport:
    """
    Derive for n and run every exact and numeric check.

    A failing check is recorded with its detail; the report passes only when
    every check does.
    """
    seed = settings.SEED if seed is None else seed
    samples = settings.SAMPLES if samples is None else samples
    derivation = derive(n, parametrization, limits=limits, cache=cache)

    systems = _Systems(derivation.parametrization, limits, cache)
    results = _derivation_checks(derivation)
    for name, check in _exact_checks(n, derivation, systems) + _numeric_checks(n, derivation, systems, seed, samples):
        results.append(run_check(name, check))
    if deep:
        results.extend(_deep_checks(derivation, cache))

    report = VerifyReport(
        n=n,
        seed=seed,
        samples=samples,
        deep=deep,
        checks=results,
        passed=all(c.passed for c in results if c.gates),
    )
    failed = [c.name for c in results if c.gates and not c.passed]
    gating = sum(1 for c in results if c.gates)
    logger.info(f"Verification n={n}: {gating - len(failed)}/{gating} checks passed")
    if failed:
        logger.warning(f"Failed checks: {', '.join(failed)}")
    return report
