"""JSON and text forms of polynomial systems"""
from typing import List

from discvar.features.groebner.domain.entities import PolySystem
from discvar.features.groebner.domain.schemas import PolySystemJSON
from discvar.features.poly.domain.entities import PolyContext, TermOrder
from discvar.features.poly.exceptions import PolyParseError
from discvar.features.poly.service import from_json, parse_text, to_json, to_text


def system_to_json(system: PolySystem) -> PolySystemJSON:
    ctx = system.context
    return PolySystemJSON(
        order=str(ctx.order),
        vars=list(ctx.variables),
        parameter=ctx.parameter,
        reduced=system.reduced,
        gens=[to_json(g) for g in system],
    )


def system_from_json(data: PolySystemJSON) -> PolySystem:
    ctx = PolyContext(tuple(data.vars), TermOrder.parse(data.order), data.parameter)
    gens = []
    for g in data.gens:
        if g.vars != data.vars or g.parameter != data.parameter or g.order != data.order:
            raise PolyParseError("Generator context differs from the system context")
        gens.append(from_json(g))
    return PolySystem(tuple(gens), ctx, data.reduced)


def system_to_text(system: PolySystem, indent: int = 2) -> str:
    """Listing in braces, one generator per line"""
    pad = " " * indent
    if not len(system):
        return "{}"
    lines = [to_text(g) for g in system]
    body = (",\n" + pad + " ").join(lines)
    return "{" + body + "}"


def system_from_texts(texts: List[str], ctx: PolyContext) -> PolySystem:
    return PolySystem(tuple(parse_text(t, ctx) for t in texts), ctx)
