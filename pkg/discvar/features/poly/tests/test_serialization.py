"""Tests for text and JSON forms of polynomials"""
import pytest

from discvar.features.poly import PolyContext, TermOrder
from discvar.features.poly.exceptions import PolyParseError
from discvar.features.poly.service import from_json, parse_text, to_json, to_text
from discvar.shared.test_base import golden, k_ctx, xs3_ctx, xy_ctx


@pytest.mark.unit
class TestToText:
    """ASCII listing style"""

    def test_signs_and_fractions(self, xy_ctx):
        p = parse_text("(1/2)*x*y - 2*x + 3", xy_ctx)
        assert to_text(p) == "(1/2)*x*y -2*x +3"

    def test_powers(self, xy_ctx):
        assert to_text(parse_text("-x^2*y", xy_ctx)) == "-x^2*y"

    def test_zero(self, xy_ctx):
        assert to_text(xy_ctx.zero) == "0"

    def test_rational_function_coefficients(self, k_ctx):
        p = parse_text("x + (k^2-1)/(k^2+1)", k_ctx)
        text = to_text(p)
        assert text.startswith("x +")
        assert "/(k^2 +1)" in text
        assert parse_text(text, k_ctx) == p

    def test_golden_systems_read_back(self, xs3_ctx, golden):
        for text in golden["rels_s_n3"]["polynomials"] + golden["orbit_eqs_1_1_m2"]["polynomials"]:
            p = parse_text(text, xs3_ctx)
            assert parse_text(to_text(p), xs3_ctx) == p


@pytest.mark.unit
class TestParseText:
    """Parsing errors"""

    def test_caret_and_double_star(self, xy_ctx):
        assert parse_text("x^2", xy_ctx) == parse_text("x**2", xy_ctx)

    def test_syntax_error(self, xy_ctx):
        with pytest.raises(PolyParseError):
            parse_text("x +* y", xy_ctx)

    def test_unknown_symbol(self, xy_ctx):
        with pytest.raises(PolyParseError):
            parse_text("x + z", xy_ctx)

    def test_parameter_outside_qk(self, xy_ctx):
        with pytest.raises(PolyParseError):
            parse_text("k*x", xy_ctx)

    def test_not_a_polynomial(self, xy_ctx):
        with pytest.raises(PolyParseError):
            parse_text("1/x", xy_ctx)


@pytest.mark.unit
class TestJson:
    """JSON form"""

    def test_qq_terms(self, xy_ctx):
        data = to_json(parse_text("(3/4)*x - y", xy_ctx))
        assert data.vars == ["x", "y"]
        assert data.terms[0].exps == [1, 0]
        assert (data.terms[0].num, data.terms[0].den) == ("3", "4")
        assert from_json(data) == parse_text("(3/4)*x - y", xy_ctx)

    def test_qk_terms(self, k_ctx):
        p = parse_text("x*k/(k^2+1) - 2", k_ctx)
        data = to_json(p)
        assert data.parameter == "k"
        assert data.terms[0].den == {0: "1", 2: "1"}
        restored = from_json(data.model_validate_json(data.model_dump_json()))
        assert restored == p

    def test_block_order_context(self):
        ctx = PolyContext(("t", "x", "y"), TermOrder("block", 1))
        p = parse_text("t*x - y^3", ctx)
        assert from_json(to_json(p)) == p
