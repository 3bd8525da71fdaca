"""Shared fixtures for testing"""

from typing import Dict

import numpy as np
import pytest

from discvar.core.cache import BasisCache
from discvar.core.resource_loader import ResourceLoader
from discvar.features.groebner.domain.entities import PolySystem
from discvar.features.poly.domain.entities import LEX, PolyContext
from discvar.features.variety.domain.entities import Derivation
from discvar.features.variety.service import derive, load_golden_system, one_orbit_eqs
from discvar.shared.constants import PARAMETER_NAME, matrix_variables


@pytest.fixture(scope="session")
def xy_ctx() -> PolyContext:
    """QQ[x, y] under grevlex"""
    return PolyContext(("x", "y"))


@pytest.fixture(scope="session")
def xy_lex_ctx() -> PolyContext:
    """QQ[x, y] under lex with x > y"""
    return PolyContext(("x", "y"), LEX)


@pytest.fixture(scope="session")
def k_ctx() -> PolyContext:
    """QQ(k)[x, y] under grevlex"""
    return PolyContext(("x", "y"), parameter=PARAMETER_NAME)


@pytest.fixture(scope="session")
def xs3_ctx() -> PolyContext:
    """QQ[x11, x12, x13, x22, x23, x33] under grevlex"""
    return PolyContext(tuple(matrix_variables(3)))


@pytest.fixture(scope="session")
def golden() -> Dict[str, dict]:
    """All golden systems keyed by file name"""
    loader = ResourceLoader()
    return {name: loader.load_golden(name).model_dump() for name in loader.list_golden()}


@pytest.fixture(scope="function")
def rng() -> np.random.Generator:
    """Seeded generator, fresh for each test"""
    return np.random.default_rng(20240611)


@pytest.fixture(scope="function")
def no_cache() -> BasisCache:
    """A cache that never reads or writes"""
    return BasisCache(enabled=False)


@pytest.fixture(scope="session")
def rels_s() -> PolySystem:
    """The printed simplified relations for n = 3"""
    return load_golden_system("rels_s_n3")


@pytest.fixture(scope="session")
def derivation_n3() -> Derivation:
    """A full n = 3 derivation computed without the cache, once per session"""
    return derive(3, cache=BasisCache(enabled=False))


@pytest.fixture(scope="session")
def one_orbit_symbolic() -> PolySystem:
    """The 1-orbit system over QQ(k), computed without the cache"""
    return one_orbit_eqs(cache=BasisCache(enabled=False))
