"""Polynomial systems (ideal bases) and basis statistics"""
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple

from sympy.polys.rings import PolyElement

from discvar.features.poly.domain.entities import PolyContext, context_of
from discvar.features.poly.exceptions import ContextMismatchError


@dataclass(frozen=True)
class PolySystem:
    """Ordered generators of an ideal in one context; `reduced` marks a reduced Groebner basis"""

    generators: Tuple[PolyElement, ...]
    context: PolyContext
    reduced: bool = False

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        ring = self.context.ring
        for g in self.generators:
            if g.ring != ring:
                raise ContextMismatchError(
                    "Generator outside the system context",
                    left=str(context_of(g)),
                    right=str(self.context),
                )

    @classmethod
    def of(
        cls,
        polys: Iterable[PolyElement],
        context: Optional[PolyContext] = None,
        reduced: bool = False,
    ) -> "PolySystem":
        polys = list(polys)
        if context is None:
            if not polys:
                raise ContextMismatchError("An empty system needs an explicit context")
            context = context_of(polys[0])
        return cls(tuple(polys), context, reduced)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[PolyElement]:
        return iter(self.generators)

    def __getitem__(self, index: int) -> PolyElement:
        return self.generators[index]

    @property
    def order(self):
        return self.context.order

    def leading_monomials(self) -> List[tuple]:
        return [g.LM for g in self.generators]

    def degrees(self) -> List[int]:
        return [max((sum(m) for m in g.itermonoms()), default=-1) for g in self.generators]

    def is_unit(self) -> bool:
        """True when the system generates the whole ring"""
        return any(g and g.is_ground for g in self.generators)

    def nonzero(self) -> "PolySystem":
        return PolySystem(tuple(g for g in self.generators if g), self.context, self.reduced)


@dataclass
class BasisStats:
    """Counters collected by one Buchberger run"""

    pairs_processed: int = 0
    pairs_pruned: int = 0
    zero_reductions: int = 0
    basis_size: int = 0
    max_degree: int = 0
    elapsed_seconds: float = 0.0

    def merge(self, other: "BasisStats") -> "BasisStats":
        return BasisStats(
            pairs_processed=self.pairs_processed + other.pairs_processed,
            pairs_pruned=self.pairs_pruned + other.pairs_pruned,
            zero_reductions=self.zero_reductions + other.zero_reductions,
            basis_size=other.basis_size,
            max_degree=max(self.max_degree, other.max_degree),
            elapsed_seconds=self.elapsed_seconds + other.elapsed_seconds,
        )
