"""Matrices with exact polynomial entries"""
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from sympy.polys.rings import PolyElement

from discvar.features.poly.domain.entities import PolyContext
from discvar.features.poly.exceptions import ContextMismatchError
from discvar.features.symform.exceptions import MatrixShapeError


@dataclass(frozen=True)
class PolyMatrix:
    """
    A rows x cols grid of polynomials sharing one context.

    Square matrices are the common case; frames of orthonormal columns are
    the rectangular exception.
    """

    rows: Tuple[Tuple[PolyElement, ...], ...]
    context: PolyContext

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or not rows[0]:
            raise MatrixShapeError("A matrix needs at least one entry")
        width = len(rows[0])
        ring = self.context.ring
        for r in rows:
            if len(r) != width:
                raise MatrixShapeError("Ragged matrix rows", (len(rows), width))
            for entry in r:
                if entry.ring != ring:
                    raise ContextMismatchError("Matrix entry outside the matrix context", right=str(self.context))

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], context: PolyContext) -> "PolyMatrix":
        """Build from polynomials or scalars; scalars become constants of the context"""
        def lift(value):
            return value if isinstance(value, PolyElement) else context.constant(value)
        return cls(tuple(tuple(lift(v) for v in r) for r in rows), context)

    @classmethod
    def identity(cls, context: PolyContext, n: int) -> "PolyMatrix":
        return cls.diagonal(context, [context.one] * n)

    @classmethod
    def diagonal(cls, context: PolyContext, values: Sequence) -> "PolyMatrix":
        n = len(values)
        return cls.from_rows(
            [[values[i] if i == j else context.zero for j in range(n)] for i in range(n)],
            context,
        )

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def size(self) -> int:
        """Side length of a square matrix"""
        self.require_square()
        return len(self.rows)

    @property
    def is_square(self) -> bool:
        rows, cols = self.shape
        return rows == cols

    def require_square(self) -> None:
        if not self.is_square:
            raise MatrixShapeError(f"Expected a square matrix, got {self.shape}", self.shape)

    def __getitem__(self, index: Tuple[int, int]) -> PolyElement:
        i, j = index
        return self.rows[i][j]

    def column(self, j: int) -> List[PolyElement]:
        return [r[j] for r in self.rows]

    def entries(self) -> Iterator[PolyElement]:
        for r in self.rows:
            yield from r

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple(fn(e) for e in r) for r in self.rows), self.context)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._require_same_shape(other)
        return PolyMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.context,
        )

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._require_same_shape(other)
        return PolyMatrix(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.context,
        )

    def scale(self, factor) -> "PolyMatrix":
        if not isinstance(factor, PolyElement):
            factor = self.context.constant(factor)
        return self.map(lambda e: e * factor)

    def _require_same_shape(self, other: "PolyMatrix") -> None:
        if self.context != other.context:
            raise ContextMismatchError("Matrices live in different contexts", str(self.context), str(other.context))
        if self.shape != other.shape:
            raise MatrixShapeError(f"Shape mismatch: {self.shape} vs {other.shape}", other.shape)
