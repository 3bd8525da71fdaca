"""Text and JSON forms of polynomials"""
from fractions import Fraction
from typing import Dict, List

from sympy import Add, Rational, Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.rings import PolyElement

from discvar.features.poly.domain.entities import PolyContext, TermOrder, context_of
from discvar.features.poly.domain.schemas import PolyJSON, TermJSON
from discvar.features.poly.exceptions import PolyParseError
from discvar.features.poly.service.coefficients import ratfunc_parts, to_fraction

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def _fraction_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _monomial_text(ctx: PolyContext, monom) -> str:
    factors = []
    for name, e in zip(ctx.variables, monom):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def _dense_text(coeffs: List[Fraction], var: str) -> str:
    """Univariate polynomial, highest power first, e.g. 'k^2 -1'"""
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        a = coeffs[e]
        if a == 0:
            continue
        power = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        mag = abs(a)
        if not power:
            body = _fraction_text(mag)
        elif mag == 1:
            body = power
        elif mag.denominator == 1:
            body = f"{mag.numerator}*{power}"
        else:
            body = f"({_fraction_text(mag)})*{power}"
        sign = "-" if a < 0 else "+"
        if not parts:
            parts.append(body if a > 0 else f"-{body}")
        else:
            parts.append(f"{sign}{body}")
    return " ".join(parts) if parts else "0"


def _is_single_term(coeffs: List[Fraction]) -> bool:
    return sum(1 for a in coeffs if a != 0) == 1


def _coefficient_text(ctx: PolyContext, coeff):
    """(negative, text as a factor or None for 1, text as a standalone constant)"""
    if ctx.parameter is None:
        q = to_fraction(coeff)
        mag = abs(q)
        plain = _fraction_text(mag)
        if mag == 1:
            return q < 0, None, plain
        return q < 0, plain if mag.denominator == 1 else f"({plain})", plain

    num, den = ratfunc_parts(coeff)
    negative = [a for a in num if a != 0][-1] < 0
    if negative:
        num = [-a for a in num]
    num_text = _dense_text(num, ctx.parameter)
    if not _is_single_term(num) or "/" in num_text:
        num_text = f"({num_text})"
    if len(den) == 1:
        if num_text == "1":
            return negative, None, "1"
        return negative, num_text, num_text
    den_text = _dense_text(den, ctx.parameter)
    if not _is_single_term(den):
        den_text = f"({den_text})"
    text = f"{num_text}/{den_text}"
    return negative, text, text


def to_text(p: PolyElement) -> str:
    """
    ASCII form in the style 'x12^2*x23 -x12*x13*x22 +(1/2)*x13'.

    The output parses back with parse_text in the same context.
    """
    if not p:
        return "0"
    ctx = context_of(p)
    parts = []
    for monom, coeff in p.terms():
        negative, factor, constant = _coefficient_text(ctx, coeff)
        mono = _monomial_text(ctx, monom)
        if not mono:
            body = constant
        elif factor is None:
            body = mono
        else:
            body = f"{factor}*{mono}"
        sign = "-" if negative else ("" if not parts else "+")
        parts.append(f"{sign}{body}")
    return " ".join(parts)


def parse_text(text: str, ctx: PolyContext) -> PolyElement:
    """Read a polynomial written with ^ or ** over the variables of ctx"""
    names = list(ctx.variables) + ([ctx.parameter] if ctx.parameter else [])
    local = {name: Symbol(name) for name in names}
    try:
        expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMATIONS)
    except Exception as e:  # tokenizer and evaluation errors
        raise PolyParseError(f"Cannot parse polynomial: {e}", text)

    unknown = sorted(str(s) for s in expr.free_symbols if str(s) not in local)
    if unknown:
        raise PolyParseError(f"Unknown symbols {', '.join(unknown)} in {text!r}", text)
    try:
        return ctx.ring.from_expr(expr)
    except (ValueError, CoercionFailed) as e:
        raise PolyParseError(f"Not a polynomial over {ctx}: {e}", text)


def _dense_json(coeffs: List[Fraction]) -> Dict[int, str]:
    return {e: _fraction_text(a) for e, a in enumerate(coeffs) if a != 0}


def to_json(p: PolyElement) -> PolyJSON:
    ctx = context_of(p)
    terms = []
    for monom, coeff in p.terms():
        if ctx.parameter is None:
            q = to_fraction(coeff)
            terms.append(TermJSON(exps=list(monom), num=str(q.numerator), den=str(q.denominator)))
        else:
            num, den = ratfunc_parts(coeff)
            terms.append(TermJSON(exps=list(monom), num=_dense_json(num), den=_dense_json(den)))
    return PolyJSON(vars=list(ctx.variables), order=str(ctx.order), parameter=ctx.parameter, terms=terms)


def context_from_json(data: PolyJSON) -> PolyContext:
    return PolyContext(tuple(data.vars), TermOrder.parse(data.order), data.parameter)


def _ratfunc_from_json(ctx: PolyContext, num, den):
    k = Symbol(ctx.parameter)
    if isinstance(num, str) or isinstance(den, str):
        raise PolyParseError("QQ(k) coefficients need power-indexed numerator and denominator")
    num_expr = Add(*[Rational(v) * k ** int(e) for e, v in num.items()])
    den_expr = Add(*[Rational(v) * k ** int(e) for e, v in den.items()])
    return ctx.domain.from_sympy(num_expr / den_expr)


def from_json(data: PolyJSON) -> PolyElement:
    ctx = context_from_json(data)
    terms = {}
    for term in data.terms:
        if len(term.exps) != ctx.ngens:
            raise PolyParseError(f"Exponent vector {term.exps} does not match {ctx.ngens} variables")
        if ctx.parameter is None:
            if not isinstance(term.num, str) or not isinstance(term.den, str):
                raise PolyParseError("QQ coefficients are written as numerator/denominator strings")
            coeff = ctx.coefficient(Fraction(int(term.num), int(term.den)))
        else:
            coeff = _ratfunc_from_json(ctx, term.num, term.den)
        terms[tuple(term.exps)] = coeff
    return ctx.ring.from_dict(terms)
