"""Command-line arguments and the validated run configuration"""
import argparse
from fractions import Fraction
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from discvar.core.cache import BasisCache
from discvar.core.config import settings
from discvar.features.groebner import GroebnerLimits
from discvar.features.numgeo import EigenMultiset
from discvar.features.variety import KMode, OneOrbitStrategy


class RunConfig(BaseModel):
    """One CLI invocation after validation; flags override the settings defaults"""
    command: Literal["derive", "orbit-eqs", "one-orbit", "verify", "sample", "singularity"]
    n: int = Field(3, ge=3, le=8, description="Matrix size")
    simplify: bool = Field(True, description="Reduce Rels to RelsS before restricting")
    eigenvalues: Optional[str] = Field(None, description="Comma-separated rationals")
    k_mode: KMode = KMode.SYMBOLIC
    k: Optional[Fraction] = None
    strategy: OneOrbitStrategy = OneOrbitStrategy.RODRIGUES
    deep: bool = False
    count: int = Field(1000, ge=0)
    out: Optional[Path] = None

    json_output: bool = False
    use_cache: bool = Field(default_factory=lambda: settings.USE_CACHE)
    seed: int = Field(default_factory=lambda: settings.SEED)
    samples: int = Field(default_factory=lambda: settings.SAMPLES, ge=1)
    rank_tol: float = Field(default_factory=lambda: settings.RANK_TOL, gt=0.0, lt=1.0)
    max_pairs: int = Field(default_factory=lambda: settings.MAX_PAIRS, ge=1)
    max_coeff_bits: int = Field(default_factory=lambda: settings.MAX_COEFF_BITS, ge=1)
    max_reduction_steps: int = Field(default_factory=lambda: settings.MAX_REDUCTION_STEPS, ge=1)
    max_seconds: float = Field(default_factory=lambda: settings.MAX_SECONDS, ge=0.0)
    parametrization: Literal["columns", "orthogonal"] = Field(default_factory=lambda: settings.PARAMETRIZATION)
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(default_factory=lambda: settings.LOG_LEVEL)

    class Config:
        arbitrary_types_allowed = True

    @field_validator("log_level", mode="before")
    @classmethod
    def upper_level(cls, value):
        return value.upper() if isinstance(value, str) else value

    @field_validator("eigenvalues")
    @classmethod
    def parseable_eigenvalues(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            EigenMultiset.parse(value)
        return value

    @model_validator(mode="after")
    def check_command_arguments(self):
        if self.command in ("orbit-eqs", "sample") and self.eigenvalues is None:
            raise ValueError(f"{self.command} needs --eigs")
        if self.command == "sample" and self.out is None:
            raise ValueError("sample needs --out")
        if self.k_mode == KMode.VALUE and self.k is None:
            raise ValueError("A numeric k mode needs a value")
        return self

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "RunConfig":
        values = {key: value for key, value in vars(args).items() if value is not None}
        if "k" in values:
            values["k_mode"] = KMode.VALUE
        elif values.pop("k_infinity", False):
            values["k_mode"] = KMode.INFINITY
        values.pop("k_infinity", None)
        values.pop("symbolic", None)
        return cls(**values)

    def eigs(self) -> EigenMultiset:
        return EigenMultiset.parse(self.eigenvalues)

    def limits(self) -> GroebnerLimits:
        return GroebnerLimits(
            max_pairs=self.max_pairs,
            max_coeff_bits=self.max_coeff_bits,
            max_reduction_steps=self.max_reduction_steps,
            max_seconds=self.max_seconds or None,
        )

    def cache(self) -> BasisCache:
        return BasisCache(enabled=self.use_cache)

    def apply_to_settings(self) -> None:
        """Tolerance and sampling defaults read by the services"""
        settings.RANK_TOL = self.rank_tol
        settings.SEED = self.seed
        settings.SAMPLES = self.samples


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _global_options(default=None) -> argparse.ArgumentParser:
    """
    Flags accepted before or after the subcommand.

    The subcommand copies use SUPPRESS so they never overwrite a value
    given before the subcommand name.
    """
    common = argparse.ArgumentParser(add_help=False, argument_default=default)
    common.add_argument("--json", dest="json_output", action="store_true", default=default,
                        help="Print the report as JSON")
    common.add_argument("--no-cache", dest="use_cache", action="store_false", default=default,
                        help="Recompute bases instead of reading DISCVAR_CACHE_DIR")
    common.add_argument("--seed", type=int, help=f"Master seed of every sample (default {settings.SEED})")
    common.add_argument("--samples", type=int, help=f"Points per numeric check (default {settings.SAMPLES})")
    common.add_argument("--rank-tol", type=float, help=f"Relative rank threshold (default {settings.RANK_TOL})")
    common.add_argument("--max-pairs", type=int,
                        help=f"S-pairs per basis before aborting (default {settings.MAX_PAIRS})")
    common.add_argument("--max-coeff-bits", type=int,
                        help=f"Coefficient size before aborting (default {settings.MAX_COEFF_BITS})")
    common.add_argument("--max-reduction-steps", type=int,
                        help=f"Steps of one reduction before aborting (default {settings.MAX_REDUCTION_STEPS})")
    common.add_argument("--max-seconds", type=float,
                        help=f"Seconds per basis before aborting, 0 for none (default {settings.MAX_SECONDS})")
    common.add_argument("--parametrization", choices=["columns", "orthogonal"],
                        help=f"Generic matrix construction (default {settings.PARAMETRIZATION})")
    common.add_argument("--log-level", help=f"DEBUG, INFO, WARNING or ERROR (default {settings.LOG_LEVEL})")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _global_options(argparse.SUPPRESS)
    parser = argparse.ArgumentParser(
        prog="discvar",
        description="Equations and numeric geometry of symmetric matrices with a multiple eigenvalue.",
        parents=[_global_options()],
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    derive = commands.add_parser("derive", parents=[common], help="Rels, RelsS and M0eqs for n x n matrices")
    derive.add_argument("--n", type=int, default=3, help="Matrix size (default 3)")
    derive.add_argument("--no-simplify", dest="simplify", action="store_false", default=None,
                        help="Keep every member of Rels")

    orbit = commands.add_parser("orbit-eqs", parents=[common], help="Minimal equations of one conjugation orbit")
    orbit.add_argument("--eigs", dest="eigenvalues", required=True, help="Eigenvalues, e.g. 1,1,-2")

    one_orbit = commands.add_parser("one-orbit", parents=[common],
                                    help="Orbit of diag(1, 1, -2) under rotations about e1 + k e2")
    mode = one_orbit.add_mutually_exclusive_group()
    mode.add_argument("--k", type=_rational, help="A rational value of k")
    mode.add_argument("--k-infinity", action="store_true", default=None, help="The limit k -> infinity")
    mode.add_argument("--symbolic", action="store_true", default=None, help="k as a parameter (default)")
    one_orbit.add_argument("--strategy", choices=[s.value for s in OneOrbitStrategy],
                           help="How the rotations are written (default rodrigues)")

    verify = commands.add_parser("verify", parents=[common], help="Recompute every check and report")
    verify.add_argument("--n", type=int, default=3, help="Matrix size (default 3)")
    verify.add_argument("--deep", action="store_true", default=None,
                        help="Add the divisibility probe and the n = 4 attempt")

    sample = commands.add_parser("sample", parents=[common], help="Orbit samples with equation residuals")
    sample.add_argument("--eigs", dest="eigenvalues", required=True, help="Eigenvalues, e.g. 1,1,-2")
    sample.add_argument("--count", type=int, default=1000, help="Number of points (default 1000)")
    sample.add_argument("--out", type=Path, required=True, help="CSV file, or JSON when it ends in .json")

    commands.add_parser("singularity", parents=[common], help="Rank witnesses at the singular vertex")
    return parser


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    """argparse errors exit 2 on their own; pydantic errors propagate to the caller"""
    return RunConfig.from_namespace(build_parser().parse_args(argv))
