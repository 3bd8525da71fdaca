"""Ring operations and structural queries on polynomials"""
from sympy.polys.rings import PolyElement

from discvar.features.poly.constants import ArithOp
from discvar.features.poly.domain.entities import context_of
from discvar.features.poly.exceptions import ContextMismatchError, PolyException


def ensure_same_context(a: PolyElement, b: PolyElement) -> None:
    if a.ring != b.ring:
        raise ContextMismatchError(
            "Polynomials live in different contexts",
            left=str(context_of(a)),
            right=str(context_of(b)),
        )


def poly_arith(a: PolyElement, b: PolyElement, op: str) -> PolyElement:
    """Exact add/sub/mul of two polynomials of the same context"""
    ensure_same_context(a, b)
    if op == ArithOp.ADD:
        return a + b
    if op == ArithOp.SUB:
        return a - b
    if op == ArithOp.MUL:
        return a * b
    raise PolyException(f"Unsupported operation: {op}")


def total_degree(p: PolyElement) -> int:
    """Total degree; -1 for the zero polynomial"""
    return max((sum(m) for m in p.itermonoms()), default=-1)


def is_homogeneous(p: PolyElement) -> bool:
    return len({sum(m) for m in p.itermonoms()}) <= 1


def variables_of(p: PolyElement) -> list:
    """Names of the variables that actually occur in p, in context order"""
    ctx = context_of(p)
    used = set()
    for monom in p.itermonoms():
        used.update(i for i, e in enumerate(monom) if e)
    return [ctx.variables[i] for i in sorted(used)]
