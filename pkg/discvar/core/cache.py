"""On-disk cache for expensive Groebner bases"""
import hashlib
import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Any, Callable, Dict, Optional

from pydantic import ValidationError

from discvar.core.config import settings
from discvar.features.groebner.domain.entities import PolySystem
from discvar.features.groebner.domain.schemas import CacheHeader, CachedBasis
from discvar.features.groebner.service.serialization import system_from_json, system_to_json

logger = logging.getLogger(__name__)

# Bump when the layout of cache files changes
CACHE_FORMAT = 1

# Packages whose sources decide the cached bases
HASHED_FEATURES = ("poly", "groebner", "symform", "variety")

FEATURES_DIR = Path(__file__).resolve().parents[1] / "features"


def source_digest(root: Path = FEATURES_DIR, features=HASHED_FEATURES) -> str:
    """sha256 over the non-test sources of the given feature packages, in path order"""
    digest = hashlib.sha256()
    for feature in features:
        for path in sorted((root / feature).rglob("*.py")):
            relative = path.relative_to(root)
            if "tests" in relative.parts:
                continue
            digest.update(relative.as_posix().encode("utf-8"))
            digest.update(b"\0")
            digest.update(path.read_bytes())
    return digest.hexdigest()[:16]


@lru_cache(maxsize=1)
def code_version() -> str:
    """Package version, cache format and a hash of the algorithm sources"""
    return f"{settings.VERSION}+cache{CACHE_FORMAT}+{source_digest()}"


class BasisCache:
    """Reduced bases stored as JSON under {directory}/{task}-n{n}-{hash}.json"""

    def __init__(self, directory: Optional[Path] = None, enabled: Optional[bool] = None):
        self.directory = Path(directory if directory is not None else settings.CACHE_DIR).expanduser()
        self.enabled = settings.USE_CACHE if enabled is None else enabled

    @staticmethod
    def header(task: str, n: int, params: Optional[Dict[str, Any]] = None) -> CacheHeader:
        return CacheHeader(n=n, task=task, version=code_version(), params=params or {})

    def path_for(self, header: CacheHeader) -> Path:
        digest = hashlib.sha256(
            json.dumps(header.model_dump(), sort_keys=True, default=str).encode("utf-8")
        ).hexdigest()[:16]
        return self.directory / f"{header.task}-n{header.n}-{digest}.json"

    def load(self, header: CacheHeader) -> Optional[PolySystem]:
        if not self.enabled:
            return None
        path = self.path_for(header)
        if not path.exists():
            return None
        try:
            cached = CachedBasis.model_validate_json(path.read_text(encoding="utf-8"))
        except (OSError, ValidationError) as e:
            logger.warning(f"Ignoring unreadable cache file {path}: {e}")
            return None
        if cached.header != header:
            logger.warning(f"Cache header mismatch in {path}, recomputing")
            return None
        logger.info(f"Cache hit: {path.name}")
        return system_from_json(cached.system)

    def store(self, header: CacheHeader, system: PolySystem) -> None:
        if not self.enabled:
            return
        path = self.path_for(header)
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            payload = CachedBasis(header=header, system=system_to_json(system))
            path.write_text(payload.model_dump_json(indent=2), encoding="utf-8")
        except OSError as e:
            logger.warning(f"Could not write cache file {path}: {e}")


def cached_basis(
    task: str,
    n: int,
    params: Dict[str, Any],
    compute: Callable[[], PolySystem],
    cache: Optional[BasisCache] = None,
) -> PolySystem:
    """Return the cached system for (task, n, params) or compute and store it"""
    cache = cache or BasisCache()
    header = BasisCache.header(task, n, params)
    hit = cache.load(header)
    if hit is not None:
        return hit
    system = compute()
    cache.store(header, system)
    return system
