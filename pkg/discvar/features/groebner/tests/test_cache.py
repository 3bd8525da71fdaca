"""Tests for the on-disk basis cache"""
import pytest

from discvar.core.cache import BasisCache, cached_basis, code_version, source_digest
from discvar.features.groebner import PolySystem
from discvar.features.groebner.service import buchberger, system_from_json, system_to_json
from discvar.features.poly.service import parse_text
from discvar.shared.test_base import k_ctx, xy_ctx


@pytest.mark.unit
class TestBasisCache:
    """Round trip through the cache directory"""

    def test_hit_returns_same_system(self, tmp_path, xy_ctx):
        cache = BasisCache(tmp_path, enabled=True)
        system = buchberger(PolySystem((parse_text("x^2 - y", xy_ctx), parse_text("x*y - 1", xy_ctx)), xy_ctx))
        calls = []

        def compute():
            calls.append(1)
            return system

        first = cached_basis("toy", 2, {"seed": 1}, compute, cache)
        second = cached_basis("toy", 2, {"seed": 1}, compute, cache)
        assert first == second == system
        assert len(calls) == 1

    def test_parameters_change_key(self, tmp_path):
        cache = BasisCache(tmp_path, enabled=True)
        a = cache.path_for(BasisCache.header("toy", 3, {"p": "columns"}))
        b = cache.path_for(BasisCache.header("toy", 3, {"p": "orthogonal"}))
        assert a != b
        assert a.name.startswith("toy-n3-")

    def test_disabled_cache_writes_nothing(self, tmp_path, xy_ctx):
        cache = BasisCache(tmp_path, enabled=False)
        system = PolySystem((xy_ctx.gen("x"),), xy_ctx)
        cached_basis("toy", 2, {}, lambda: system, cache)
        assert list(tmp_path.iterdir()) == []

    def test_corrupt_file_is_recomputed(self, tmp_path, xy_ctx):
        cache = BasisCache(tmp_path, enabled=True)
        header = BasisCache.header("toy", 2, {})
        cache.path_for(header).write_text("{not json", encoding="utf-8")
        system = PolySystem((xy_ctx.gen("y"),), xy_ctx, reduced=True)
        assert cached_basis("toy", 2, {}, lambda: system, cache) == system


@pytest.mark.unit
class TestCodeVersion:
    """Cache keys follow the algorithm sources"""

    def _tree(self, root, body):
        (root / "groebner" / "tests").mkdir(parents=True)
        (root / "groebner" / "service.py").write_text(body)
        (root / "groebner" / "tests" / "test_service.py").write_text("x = 1\n")

    def test_source_change_changes_digest(self, tmp_path):
        self._tree(tmp_path / "a", "def f():\n    return 1\n")
        self._tree(tmp_path / "b", "def f():\n    return 2\n")
        first = source_digest(tmp_path / "a", ("groebner",))
        assert first != source_digest(tmp_path / "b", ("groebner",))
        assert first == source_digest(tmp_path / "a", ("groebner",))

    def test_tests_do_not_count(self, tmp_path):
        self._tree(tmp_path, "def f():\n    return 1\n")
        before = source_digest(tmp_path, ("groebner",))
        (tmp_path / "groebner" / "tests" / "test_service.py").write_text("x = 2\n")
        assert source_digest(tmp_path, ("groebner",)) == before

    def test_version_carries_digest(self):
        assert code_version().endswith(source_digest())
        assert BasisCache.header("rels", 3).version == code_version()


@pytest.mark.unit
class TestSystemJson:
    """System wire form"""

    def test_parametric_system(self, k_ctx):
        system = PolySystem((parse_text("x + k*y", k_ctx), parse_text("y^2 - 1/(k^2+1)", k_ctx)), k_ctx)
        data = system_to_json(system)
        assert data.parameter == "k"
        assert system_from_json(data.model_validate_json(data.model_dump_json())) == system
