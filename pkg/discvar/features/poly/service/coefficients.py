"""Conversions between field elements, Fractions and dense rational functions"""
from fractions import Fraction
from typing import List, Tuple

from sympy.polys.rings import PolyElement

from discvar.features.poly.domain.entities import context_of
from discvar.features.poly.exceptions import PolyException


def to_fraction(c) -> Fraction:
    """QQ element (gmpy or python ground types) to Fraction"""
    return Fraction(int(c.numerator), int(c.denominator))


def _dense(poly) -> List[Fraction]:
    if not poly:
        return [Fraction(0)]
    degree = max(m[0] for m in poly.itermonoms())
    coeffs = [Fraction(0)] * (degree + 1)
    for (e,), c in poly.terms():
        coeffs[e] = to_fraction(c)
    return coeffs


def ratfunc_parts(c) -> Tuple[List[Fraction], List[Fraction]]:
    """
    Numerator and denominator of a QQ(k) element as dense coefficient lists.

    Lists run from the constant term upwards; the denominator is made monic.
    """
    num = _dense(c.numer)
    den = _dense(c.denom)
    lead = den[-1]
    return [a / lead for a in num], [b / lead for b in den]


def eval_dense(coeffs: List[Fraction], value):
    acc = 0 * value
    for a in reversed(coeffs):
        acc = acc * value + a
    return acc


def evaluate_ratfunc(c, value: Fraction) -> Fraction:
    num, den = ratfunc_parts(c)
    d = eval_dense(den, value)
    if d == 0:
        raise PolyException(f"Parameter value {value} is a pole of {c}")
    return eval_dense(num, value) / d


def coefficient_scale(p: PolyElement) -> float:
    """Largest coefficient magnitude of a polynomial over QQ; 1.0 for zero"""
    if context_of(p).parameter is not None:
        raise PolyException("coefficient_scale is defined over QQ only")
    return max((abs(float(to_fraction(c))) for c in p.values()), default=1.0)


def max_coefficient_bits(p: PolyElement) -> int:
    """Bit size of the largest numerator or denominator appearing in p"""
    bits = 0
    if context_of(p).parameter is None:
        for c in p.values():
            bits = max(bits, int(c.numerator).bit_length(), int(c.denominator).bit_length())
        return bits
    for c in p.values():
        num, den = ratfunc_parts(c)
        for a in num + den:
            bits = max(bits, a.numerator.bit_length(), a.denominator.bit_length())
    return bits


def normalize_primitive(p: PolyElement) -> PolyElement:
    """
    Canonical scalar multiple generating the same ideal.

    Over QQ: integer coefficients with content 1 and positive leading coefficient.
    Over QQ(k): monic.
    """
    if not p:
        return p
    ctx = context_of(p)
    if ctx.parameter is not None:
        return p.monic()

    _, cleared = p.clear_denoms()
    _, primitive = cleared.primitive()
    if ctx.domain.is_negative(primitive.LC):
        primitive = -primitive
    return primitive
