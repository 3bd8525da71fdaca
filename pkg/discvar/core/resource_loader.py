"""Golden equation systems stored as YAML under resources/golden"""
import logging
from functools import lru_cache
from pathlib import Path
from typing import List, Optional

import yaml
from pydantic import BaseModel, Field, ValidationError

logger = logging.getLogger(__name__)

GOLDEN_DIR = "golden"
GOLDEN_SUFFIXES = (".yml", ".yaml")


class GoldenDocument(BaseModel):
    """One printed system: generators as text over the listed variables"""
    name: str
    n: Optional[int] = None
    variables: List[str] = Field(min_length=1)
    parameter: Optional[str] = None
    polynomials: List[str] = Field(min_length=1)


class GoldenResourceError(Exception):
    def __init__(self, name: str, message: str):
        self.name = name
        self.message = message
        super().__init__(f"Golden system {name!r}: {message}")


class ResourceLoader:
    """Finds and validates golden documents below a resources root"""

    def __init__(self, base_path: Optional[Path] = None):
        # core -> discvar -> project root
        self.base_path = Path(base_path or Path(__file__).parents[2] / "resources")

    @property
    def golden_path(self) -> Path:
        return self.base_path / GOLDEN_DIR

    def _golden_file(self, name: str) -> Path:
        for suffix in GOLDEN_SUFFIXES:
            path = self.golden_path / f"{name}{suffix}"
            if path.is_file():
                return path
        raise GoldenResourceError(name, f"no file under {self.golden_path}")

    def load_golden(self, name: str) -> GoldenDocument:
        path = self._golden_file(name)
        try:
            raw = yaml.safe_load(path.read_text(encoding="utf-8"))
            document = GoldenDocument.model_validate(raw or {})
        except (yaml.YAMLError, ValidationError) as e:
            raise GoldenResourceError(name, f"malformed {path.name}: {e}") from e
        logger.debug(f"Loaded golden {name}: {len(document.polynomials)} polynomials")
        return document

    def list_golden(self) -> List[str]:
        if not self.golden_path.is_dir():
            return []
        return sorted(p.stem for p in self.golden_path.iterdir() if p.is_file() and p.suffix in GOLDEN_SUFFIXES)


@lru_cache(maxsize=1)
def get_resource_loader() -> ResourceLoader:
    return ResourceLoader()
