"""Text listings and JSON documents for the reports"""
from typing import Iterable, List, Optional

from pydantic import BaseModel

from discvar.features.variety.domain.schemas import (
    CheckResult,
    DerivationReport,
    OneOrbitReport,
    OrbitSystemReport,
    SampleCloud,
    SingularityReport,
    SystemListing,
    VerifyReport,
)


def to_json(report: BaseModel) -> str:
    return report.model_dump_json(by_alias=True, indent=2)


def listing_text(listing: Optional[SystemListing]) -> List[str]:
    """Generators numbered one per line, as in the reference listings"""
    if listing is None:
        return []
    degrees = ", ".join(str(d) for d in listing.degrees)
    ring = ", ".join(listing.vars)
    over = f"QQ({listing.parameter})" if listing.parameter else "QQ"
    lines = [f"{listing.name}: {len(listing.gens)} equations of degrees {degrees} in {ring} over {over}"]
    lines += [f"  {i}) {g}" for i, g in enumerate(listing.gens, start=1)]
    return lines


def checks_text(checks: Iterable[CheckResult]) -> List[str]:
    lines = []
    for check in checks:
        if check.informational:
            mark = "info"
        else:
            mark = "ok  " if check.passed else "FAIL"
        detail = f"  ({check.detail})" if check.detail and check.detail != "ok" else ""
        lines.append(f"  [{mark}] {check.name}{detail}")
    return lines


def derivation_text(report: DerivationReport) -> str:
    lines = [f"Derivation for n = {report.n} ({report.parametrization} parametrization): {report.status}"]
    if report.abort is not None:
        abort = report.abort
        lines.append(
            f"Stopped in {abort.stage}: {abort.message} "
            f"({abort.pairs_done} pairs, basis size {abort.basis_size}, max degree {abort.max_degree})"
        )
    if report.rels_degree_profile:
        profile = ", ".join(f"{count} of degree {d}" for d, count in sorted(report.rels_degree_profile.items()))
        lines.append(f"Rels: {profile}")
    for listing in (report.rels_s, report.m0eqs):
        lines += listing_text(listing)
    lines += [f"Note: {note}" for note in report.discrepancies]
    if report.discriminant_degrees is not None:
        d = report.discriminant_degrees
        lines.append(f"Discriminant degree: {d.computed} (standard n(n-1) = {d.standard}, stated 2n = {d.stated})")
    for name, match in report.golden.items():
        lines.append(f"Golden {name}: {match}")
    lines += ["Checks:"] + checks_text(report.checks)
    if report.timings:
        lines.append("Timings: " + ", ".join(f"{stage} {seconds:.2f}s" for stage, seconds in report.timings.items()))
    lines.append("PASSED" if report.passed else "FAILED")
    return "\n".join(lines)


def orbit_text(report: OrbitSystemReport) -> str:
    lines = [f"Orbit of diag({report.eigenvalues}), {report.spectrum} spectrum, in {report.ambient_dim} entries"]
    lines += listing_text(report.equations)
    if report.golden is not None:
        lines.append(f"Golden orbitEqs: {report.golden}")
    return "\n".join(lines)


def one_orbit_text(report: OneOrbitReport) -> str:
    about = {"symbolic": "e1 + k e2", "value": f"e1 + ({report.k}) e2", "infinity": "e2"}[report.mode]
    lines = [f"1-orbit of diag(1, 1, -2) about {about} ({report.strategy})"]
    lines += listing_text(report.system)
    if report.matrix:
        lines.append("Matrix:")
        width = max(len(entry) for row in report.matrix for entry in row)
        lines += ["  [ " + "  ".join(entry.rjust(width) for entry in row) + " ]" for row in report.matrix]
    if report.ellipse is not None:
        e = report.ellipse
        lines.append(
            f"Ellipse: ({e.axis_coefficient}) * {e.square_variable}^2 + ({e.shifted_variable} - ({e.centre}))^2 "
            f"= {e.radius_squared}"
        )
    if report.golden is not None:
        lines.append(f"Golden: {report.golden}")
    if report.checks:
        lines += ["Checks:"] + checks_text(report.checks)
    return "\n".join(lines)


def verify_text(report: VerifyReport) -> str:
    gating = [c for c in report.checks if c.gates]
    passed = sum(1 for c in gating if c.passed)
    lines = [f"Verification for n = {report.n}, seed {report.seed}, {report.samples} samples"]
    lines += checks_text(report.checks)
    lines.append(f"{passed}/{len(gating)} checks passed")
    lines.append("PASSED" if report.passed else "FAILED")
    return "\n".join(lines)


def singularity_text(report: SingularityReport) -> str:
    lines = []
    for witness in report.witnesses:
        lines.append(
            f"Witness {', '.join(witness.labels)}: exact rank {witness.exact_rank}, "
            f"numeric rank {witness.numeric_rank}, expected {witness.expected_rank}"
        )
        lines += [f"  {label}: [{', '.join(row)}]" for label, row in zip(witness.labels, witness.rows)]
        lines += [f"    {step}" for step in witness.steps]
        lines.append(f"  construction deviation {witness.construction_deviation:.1e}")
    lines.append("PASSED" if report.passed else "FAILED")
    return "\n".join(lines)


def sample_text(report: SampleCloud, path: str) -> str:
    return (
        f"{report.count} points of Orbit(diag({report.eigenvalues})) with residuals of {report.system} "
        f"written to {path}; max residual {report.max_residual:.3e}"
    )


def render(report: BaseModel, as_json: bool) -> str:
    if as_json:
        return to_json(report)
    if isinstance(report, DerivationReport):
        return derivation_text(report)
    if isinstance(report, OrbitSystemReport):
        return orbit_text(report)
    if isinstance(report, OneOrbitReport):
        return one_orbit_text(report)
    if isinstance(report, VerifyReport):
        return verify_text(report)
    if isinstance(report, SingularityReport):
        return singularity_text(report)
    raise TypeError(f"No text form for {type(report).__name__}")
