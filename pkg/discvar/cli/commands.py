"""Subcommand handlers: each builds its report from a validated RunConfig"""
import csv
import logging
import math
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel

from discvar.cli.parser import RunConfig
from discvar.cli.render import render, sample_text, to_json
from discvar.core.config import settings
from discvar.features.groebner import PolySystem
from discvar.features.numgeo import EigenMultiset, SymMatrixN
from discvar.features.numgeo.constants import WITNESS_DEVIATION_TOL
from discvar.features.numgeo.service import (
    circumference_family,
    embracing_plane_witness,
    singularity_witness,
    uniform_angles,
)
from discvar.features.variety import EllipseShapeError, KMode
from discvar.features.variety.constants import (
    CIRCLE_POINTS,
    CIRCLE_RADIUS_SQUARED,
    GOLDEN_M0EQS,
    GOLDEN_ONE_ORBIT,
    GOLDEN_ONE_ORBIT_INFINITY,
    GOLDEN_ONE_ORBIT_K0,
    GOLDEN_ORBIT,
    GOLDEN_RELS_S,
    ONE_ORBIT_DIAGONAL,
)
from discvar.features.variety.domain.schemas import (
    DerivationReport,
    OneOrbitReport,
    OrbitSystemReport,
    SampleCloud,
    SingularityReport,
    VerifyReport,
)
from discvar.features.variety.service import (
    derivation_report,
    derive,
    determinant_residual,
    ellipse_form,
    ellipse_info,
    golden_compare,
    listing,
    load_golden_system,
    matrix_texts,
    max_residual,
    one_orbit_eqs,
    one_orbit_limit_infinity,
    orbit_ideal_viete,
    orbit_minimal_eqs,
    orbit_points,
    orbit_report,
    relative_residuals,
    run_check,
    run_verification,
    solved_matrix,
    specialize_k,
    witness_info,
)
from discvar.shared.constants import matrix_variables

logger = logging.getLogger(__name__)

ORBIT_DIAGONAL = EigenMultiset.of(ONE_ORBIT_DIAGONAL)


def cmd_derive(config: RunConfig) -> DerivationReport:
    derivation = derive(config.n, config.parametrization, config.simplify, config.limits(), config.cache())
    golden = {}
    if config.n == 3:
        for name, system, printed in (
            ("RelsS", derivation.rels_s, GOLDEN_RELS_S),
            ("M0eqs", derivation.m0eqs, GOLDEN_M0EQS),
        ):
            if system is not None:
                golden[name] = golden_compare(system, load_golden_system(printed))
    return derivation_report(derivation, golden)


def cmd_orbit_eqs(config: RunConfig) -> OrbitSystemReport:
    eigs = config.eigs()
    orbit = orbit_minimal_eqs(eigs, config.parametrization, config.limits(), config.cache())
    golden = None
    if eigs.exact == ORBIT_DIAGONAL.exact:
        golden = golden_compare(orbit.equations, load_golden_system(GOLDEN_ORBIT))
    return orbit_report(orbit, golden)


def _one_orbit_mode(config: RunConfig, symbolic: PolySystem) -> Tuple[PolySystem, Optional[str], Optional[float]]:
    """(system, golden name, axis angle psi about e3 from e1)"""
    if config.k_mode == KMode.SYMBOLIC:
        return symbolic, GOLDEN_ONE_ORBIT, None
    if config.k_mode == KMode.INFINITY:
        return one_orbit_limit_infinity(symbolic), GOLDEN_ONE_ORBIT_INFINITY, math.pi / 2
    golden = GOLDEN_ONE_ORBIT_K0 if config.k == 0 else None
    return specialize_k(symbolic, config.k), golden, math.atan(float(config.k))


def cmd_one_orbit(config: RunConfig) -> OneOrbitReport:
    symbolic = one_orbit_eqs(config.strategy, config.limits(), config.cache())
    system, golden_name, psi = _one_orbit_mode(config, symbolic)

    try:
        form = ellipse_form(system)
    except EllipseShapeError as e:
        logger.warning(f"No completed-square form: {e.message}")
        form = None

    checks = [run_check("circle radius 3/2", lambda: (
        "" if form is not None and form.radius_squared_value == CIRCLE_RADIUS_SQUARED
        else f"radius squared {None if form is None else form.radius_squared}"
    ))]
    matrix: List[List[str]] = []
    if psi is not None:
        circle = circumference_family(SymMatrixN.diag(ONE_ORBIT_DIAGONAL), psi, uniform_angles(CIRCLE_POINTS))
        points = np.array([X.array for X in circle])
        checks.append(run_check("vanishes on the circle", lambda: (
            "" if max_residual(system, points) <= settings.VANISH_TOL
            else f"residual {max_residual(system, points):.2e}"
        )))
        checks.append(run_check("det(X) = -2", lambda: "" if not determinant_residual(system) else "nonzero remainder"))
        matrix = matrix_texts(solved_matrix(system))

    return OneOrbitReport(
        mode=config.k_mode.value,
        k=None if config.k_mode != KMode.VALUE else str(config.k),
        strategy=config.strategy.value,
        system=listing(system, "1-orbitEqs"),
        matrix=matrix,
        ellipse=None if form is None else ellipse_info(form),
        checks=checks,
        golden=None if golden_name is None else golden_compare(system, load_golden_system(golden_name)).value,
    )


def cmd_verify(config: RunConfig) -> VerifyReport:
    return run_verification(
        config.n,
        seed=config.seed,
        samples=config.samples,
        deep=config.deep,
        limits=config.limits(),
        cache=config.cache(),
        parametrization=config.parametrization,
    )


def _sample_system(config: RunConfig, eigs: EigenMultiset) -> Tuple[str, PolySystem]:
    """Minimal orbit equations when an eigenvalue repeats, the Viete system otherwise"""
    if eigs.width < eigs.n:
        orbit = orbit_minimal_eqs(eigs, config.parametrization, config.limits(), config.cache())
        return "orbitEqs", orbit.equations
    return "Viete", orbit_ideal_viete(eigs)


def _write_csv(cloud: SampleCloud, path) -> None:
    fields = cloud.variables + cloud.residual_names
    with open(path, "w", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=fields)
        writer.writeheader()
        for point, residuals in zip(cloud.points, cloud.residuals):
            writer.writerow(dict(zip(fields, [repr(v) for v in point + residuals])))


def cmd_sample(config: RunConfig) -> SampleCloud:
    eigs = config.eigs()
    name, system = _sample_system(config, eigs)
    points = orbit_points(SymMatrixN.diag(eigs.values), config.count, config.seed)
    residuals = relative_residuals(system, points)
    rows, cols = np.triu_indices(eigs.n)
    cloud = SampleCloud(
        eigenvalues=str(eigs),
        n=eigs.n,
        seed=config.seed,
        count=config.count,
        system=name,
        variables=matrix_variables(eigs.n),
        residual_names=[f"{name}_{i}" for i in range(1, len(system) + 1)],
        points=points[:, rows, cols].tolist(),
        residuals=residuals.tolist(),
        max_residual=float(np.max(residuals)) if residuals.size else 0.0,
    )

    config.out.parent.mkdir(parents=True, exist_ok=True)
    if config.out.suffix.lower() == ".json":
        config.out.write_text(to_json(cloud) + "\n", encoding="utf-8")
    else:
        _write_csv(cloud, config.out)
    logger.info(f"Wrote {config.count} samples to {config.out}")
    return cloud


def cmd_singularity(config: RunConfig) -> SingularityReport:
    witnesses = [singularity_witness(), embracing_plane_witness()]
    return SingularityReport(
        witnesses=[witness_info(w) for w in witnesses],
        passed=all(w.holds and w.construction_deviation <= WITNESS_DEVIATION_TOL for w in witnesses),
    )


COMMANDS: Dict[str, Callable[[RunConfig], BaseModel]] = {
    "derive": cmd_derive,
    "orbit-eqs": cmd_orbit_eqs,
    "one-orbit": cmd_one_orbit,
    "verify": cmd_verify,
    "sample": cmd_sample,
    "singularity": cmd_singularity,
}


def exit_code(report: BaseModel) -> int:
    """1 when a report carries failed checks, 0 otherwise"""
    if hasattr(report, "passed"):
        return 0 if report.passed else 1
    checks = getattr(report, "checks", None) or []
    return 0 if all(c.passed for c in checks if c.gates) else 1


def run(config: RunConfig) -> int:
    """Dispatch, print the report to stdout and return the exit code"""
    config.apply_to_settings()
    report = COMMANDS[config.command](config)
    if isinstance(report, SampleCloud) and not config.json_output:
        print(sample_text(report, str(config.out)))
    else:
        print(render(report, config.json_output))
    return exit_code(report)
