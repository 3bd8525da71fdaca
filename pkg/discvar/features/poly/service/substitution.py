"""Substitution, context changes and parameter specialization"""
from fractions import Fraction
from typing import Dict, Mapping, Union

from sympy.polys.rings import PolyElement

from discvar.features.poly.domain.entities import PolyContext, context_of
from discvar.features.poly.exceptions import ContextMismatchError, UnknownVariableError
from discvar.features.poly.service.coefficients import evaluate_ratfunc

Binding = Union[PolyElement, int, Fraction, str]


def change_context(p: PolyElement, target: PolyContext) -> PolyElement:
    """
    Re-express p in another context.

    Variables are matched by name. Every variable occurring in p must exist in
    the target. QQ coefficients embed into QQ(k); the reverse direction needs
    specialize_parameter.
    """
    source = context_of(p)
    if source == target:
        return p
    if source.parameter is not None and source.parameter != target.parameter:
        raise ContextMismatchError(
            "Cannot drop the parameter by a context change",
            left=str(source),
            right=str(target),
        )

    positions = {}
    for i, name in enumerate(source.variables):
        if name in target.variables:
            positions[i] = target.index(name)

    terms = {}
    for monom, coeff in p.items():
        exps = [0] * target.ngens
        for i, e in enumerate(monom):
            if not e:
                continue
            if i not in positions:
                name = source.variables[i]
                raise UnknownVariableError(f"Variable {name} not in target context", [name])
            exps[positions[i]] = e
        terms[tuple(exps)] = coeff
    return target.ring.from_dict(terms, source.domain)


def _as_poly(value: Binding, target: PolyContext) -> PolyElement:
    if isinstance(value, PolyElement):
        return change_context(value, target)
    return target.constant(value)


def substitute(p: PolyElement, bindings: Mapping[str, Binding]) -> PolyElement:
    """
    Replace variables by polynomials or constants.

    The result lives in the context of the unbound variables. When every
    variable is bound the result stays in the original context (a constant).
    Polynomial bindings are re-expressed in the result context by name.
    """
    source = context_of(p)
    unknown = sorted(set(bindings) - set(source.variables))
    if unknown:
        raise UnknownVariableError(f"Unknown variables: {', '.join(unknown)}", unknown)
    if not bindings:
        return p

    free = [v for v in source.variables if v not in bindings]
    target = source.without(bindings) if free else source
    values = {source.index(name): _as_poly(value, target) for name, value in bindings.items()}
    free_positions = [(source.index(v), target.index(v)) for v in free] if free else []

    powers: Dict[tuple, PolyElement] = {}

    def power(i: int, e: int) -> PolyElement:
        key = (i, e)
        if key not in powers:
            powers[key] = values[i] ** e
        return powers[key]

    result = target.zero
    for monom, coeff in p.items():
        exps = [0] * target.ngens
        for i, j in free_positions:
            exps[j] = monom[i]
        term = target.ring.term_new(tuple(exps), coeff)
        for i, e in enumerate(monom):
            if e and i in values:
                term = term * power(i, e)
        result += term
    return result


def specialize_parameter(p: PolyElement, value) -> PolyElement:
    """Set the parameter k of a QQ(k) polynomial to a rational value"""
    source = context_of(p)
    if source.parameter is None:
        raise ContextMismatchError("Polynomial has no parameter to specialize", left=str(source))
    target = source.with_parameter(None)
    k = Fraction(value)
    terms = {monom: target.coefficient(evaluate_ratfunc(c, k)) for monom, c in p.items()}
    return target.ring.from_dict(terms)
