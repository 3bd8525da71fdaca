from pathlib import Path
from typing import Literal

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    PROJECT_NAME: str = "discvar"
    VERSION: str = "1.0.0"

    # Basis cache
    CACHE_DIR: Path = Path("~/.cache/discvar")
    USE_CACHE: bool = True

    # Resource limits for Buchberger runs
    MAX_PAIRS: int = 200000
    MAX_COEFF_BITS: int = 4096
    MAX_REDUCTION_STEPS: int = 5_000_000
    MAX_SECONDS: float = 1800.0  # per basis, 0 for no limit

    # Numeric verification
    SEED: int = 42
    SAMPLES: int = 2000
    RANK_TOL: float = 1e-8
    VANISH_TOL: float = 1e-9
    EIGEN_CLUSTER_TOL: float = 1e-7

    # Generic matrix construction
    PARAMETRIZATION: Literal["columns", "orthogonal"] = "orthogonal"

    LOG_LEVEL: str = "INFO"

    class Config:
        env_file = ".env"
        env_prefix = "DISCVAR_"
        case_sensitive = True
        extra = "ignore"  # Ignore extra fields from .env


settings = Settings()
