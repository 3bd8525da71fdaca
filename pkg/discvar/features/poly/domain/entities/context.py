"""Variable contexts and term orders backing the sparse polynomial rings"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Optional, Tuple, Union

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.orderings import MonomialOrder, grevlex, lex
from sympy.polys.rings import PolyElement, PolyRing

from discvar.features.poly.constants import TermOrderKind, SUPPORTED_ORDERS
from discvar.features.poly.exceptions import (
    ContextMismatchError,
    PolyException,
    UnknownVariableError,
)

Scalar = Union[int, Fraction, str]


class BlockOrder(MonomialOrder):
    """Elimination order: grevlex on the first block, ties broken by grevlex on the rest"""

    alias = "block"
    is_global = True
    is_default = False

    def __init__(self, size: int):
        self.size = size

    def __call__(self, monomial):
        return (grevlex(monomial[:self.size]), grevlex(monomial[self.size:]))

    def __repr__(self) -> str:
        return f"BlockOrder({self.size})"

    def __eq__(self, other) -> bool:
        return isinstance(other, BlockOrder) and other.size == self.size

    def __hash__(self) -> int:
        return hash((self.__class__.__name__, self.size))


@dataclass(frozen=True)
class TermOrder:
    """Monomial order of a context; `block` is the size of the eliminated block"""

    kind: str = TermOrderKind.GREVLEX
    block: int = 0

    def __post_init__(self):
        if self.kind not in SUPPORTED_ORDERS:
            raise PolyException(f"Unsupported term order: {self.kind}")
        if self.kind == TermOrderKind.BLOCK and self.block < 1:
            raise PolyException("Block order needs a positive block size")

    def monomial_order(self) -> MonomialOrder:
        if self.kind == TermOrderKind.LEX:
            return lex
        if self.kind == TermOrderKind.BLOCK:
            return BlockOrder(self.block)
        return grevlex

    def __str__(self) -> str:
        if self.kind == TermOrderKind.BLOCK:
            return f"block({self.block})"
        return self.kind

    @classmethod
    def parse(cls, text: str) -> "TermOrder":
        text = text.strip()
        if text.startswith("block(") and text.endswith(")"):
            return cls(TermOrderKind.BLOCK, int(text[len("block("):-1]))
        return cls(text)


GREVLEX = TermOrder(TermOrderKind.GREVLEX)
LEX = TermOrder(TermOrderKind.LEX)


@dataclass(frozen=True)
class PolyContext:
    """
    Named variables, a term order and an optional rational-function parameter.

    The coefficient field is QQ, or QQ(parameter) when a parameter is set.
    Every polynomial of the package is an element of `ctx.ring`.
    """

    variables: Tuple[str, ...]
    order: TermOrder = field(default=GREVLEX)
    parameter: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise PolyException("A context needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise PolyException(f"Duplicate variables in context: {self.variables}")
        if self.parameter is not None and self.parameter in self.variables:
            raise PolyException(f"Parameter {self.parameter} is also a variable")
        if self.order.kind == TermOrderKind.BLOCK and self.order.block >= len(self.variables):
            raise PolyException("Block order must leave at least one variable in the second block")

    @property
    def ring(self) -> PolyRing:
        return _make_ring(self)

    @property
    def domain(self):
        return self.ring.domain

    @property
    def ngens(self) -> int:
        return len(self.variables)

    @property
    def zero(self) -> PolyElement:
        return self.ring.zero

    @property
    def one(self) -> PolyElement:
        return self.ring.one

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariableError(f"Unknown variable: {name}", [name])

    def gen(self, name: str) -> PolyElement:
        return self.ring.gens[self.index(name)]

    def gens(self) -> Dict[str, PolyElement]:
        return dict(zip(self.variables, self.ring.gens))

    def param(self):
        """The parameter k as an element of the coefficient field"""
        if self.parameter is None:
            raise ContextMismatchError("Context has no parameter", left=str(self))
        return self.domain.from_sympy(Symbol(self.parameter))

    def coefficient(self, value):
        """Convert an int, Fraction, decimal string or field element into the coefficient field"""
        domain = self.domain
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return domain.convert(value)
        if isinstance(value, Fraction):
            q = QQ(value.numerator, value.denominator)
            return q if self.parameter is None else domain.convert_from(q, QQ)
        return domain.convert(value)

    def constant(self, value) -> PolyElement:
        return self.ring.ground_new(self.coefficient(value))

    def with_order(self, order: TermOrder) -> "PolyContext":
        return PolyContext(self.variables, order, self.parameter)

    def with_parameter(self, parameter: Optional[str]) -> "PolyContext":
        return PolyContext(self.variables, self.order, parameter)

    def extend(self, names: Iterable[str], front: bool = False) -> "PolyContext":
        extra = tuple(n for n in names if n not in self.variables)
        variables = extra + self.variables if front else self.variables + extra
        return PolyContext(variables, self.order, self.parameter)

    def without(self, names: Iterable[str]) -> "PolyContext":
        dropped = set(names)
        kept = tuple(v for v in self.variables if v not in dropped)
        order = GREVLEX if self.order.kind == TermOrderKind.BLOCK else self.order
        return PolyContext(kept, order, self.parameter)

    def __str__(self) -> str:
        field_name = "QQ" if self.parameter is None else f"QQ({self.parameter})"
        return f"{field_name}[{', '.join(self.variables)}] / {self.order}"


_RING_CONTEXTS: Dict[PolyRing, PolyContext] = {}


@lru_cache(maxsize=None)
def _make_ring(ctx: PolyContext) -> PolyRing:
    domain = QQ if ctx.parameter is None else QQ.frac_field(Symbol(ctx.parameter))
    ring = PolyRing([Symbol(v) for v in ctx.variables], domain, ctx.order.monomial_order())
    _RING_CONTEXTS[ring] = ctx
    return ring


def context_of(p: PolyElement) -> PolyContext:
    """The context a ring element was built in"""
    try:
        return _RING_CONTEXTS[p.ring]
    except KeyError:
        raise ContextMismatchError(f"Polynomial ring not created by a PolyContext: {p.ring}")
