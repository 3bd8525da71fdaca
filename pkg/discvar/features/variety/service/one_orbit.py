"""1-orbits of diag(1, 1, -2): rotations about the axis e1 + k e2 over QQ(k)"""
import logging
from fractions import Fraction
from typing import Dict, Optional, Union

from sympy.polys.rings import PolyElement

from discvar.core.cache import BasisCache, cached_basis
from discvar.features.groebner.constants import GroebnerLimits
from discvar.features.groebner.domain.entities import PolySystem
from discvar.features.groebner.service import buchberger, eliminate, reduce
from discvar.features.poly.domain.entities import PolyContext
from discvar.features.poly.service import (
    change_context,
    ratfunc_parts,
    specialize_parameter,
    substitute,
    to_fraction,
    to_text,
    total_degree,
    variables_of,
)
from discvar.features.symform.domain.entities import PolyMatrix
from discvar.features.symform.service import determinant, generic_symmetric, matmul, transpose
from discvar.features.variety.constants import (
    ELLIPSE_SHIFTED,
    LIMIT_FREE,
    LIMIT_SUBSTITUTED,
    ONE_ORBIT_DETERMINANT,
    ONE_ORBIT_DIAGONAL,
    RODRIGUES_COS,
    RODRIGUES_SIN,
    TASK_ONE_ORBIT,
    OneOrbitStrategy,
)
from discvar.features.variety.domain.entities import EllipseForm
from discvar.features.variety.exceptions import EllipseShapeError
from discvar.shared.constants import PARAMETER_NAME, frame_variable, matrix_variable, matrix_variables

logger = logging.getLogger(__name__)


def _matrix_equations(X: PolyMatrix, ctx: PolyContext) -> list:
    gens = ctx.gens()
    return [
        gens[matrix_variable(i + 1, j + 1)] - X[i, j]
        for i in range(3)
        for j in range(i, 3)
    ]


def _axis_system() -> tuple:
    """OrtEs on a full 3x3 frame Y with Y v = v"""
    frame = tuple(frame_variable(i, j) for i in range(1, 4) for j in range(1, 4))
    ctx = PolyContext(frame + tuple(matrix_variables(3)), parameter=PARAMETER_NAME)
    gens = ctx.gens()
    k = ctx.one.mul_ground(ctx.param())
    v = [ctx.one, k, ctx.zero]

    Y = PolyMatrix(tuple(tuple(gens[frame_variable(i, j)] for j in range(1, 4)) for i in range(1, 4)), ctx)
    D = PolyMatrix.diagonal(ctx, list(ONE_ORBIT_DIAGONAL))
    X = matmul(matmul(Y, D), transpose(Y))

    equations = _matrix_equations(X, ctx)
    for a in range(3):
        for b in range(a, 3):
            dot = sum((Y[a, c] * Y[b, c] for c in range(3)), ctx.zero)
            equations.append(dot - 1 if a == b else dot)
    for i in range(3):
        equations.append(sum((Y[i, c] * v[c] for c in range(3)), ctx.zero) - v[i])
    return PolySystem(tuple(equations), ctx), frame


def _rodrigues_system() -> tuple:
    """R = I + s K + (1 - c)(v v^T / (1 + k^2) - I) with c^2 + (1 + k^2) s^2 = 1"""
    chart = (RODRIGUES_COS, RODRIGUES_SIN)
    ctx = PolyContext(chart + tuple(matrix_variables(3)), parameter=PARAMETER_NAME)
    c, s = ctx.gen(RODRIGUES_COS), ctx.gen(RODRIGUES_SIN)
    k = ctx.param()
    norm2 = k ** 2 + 1
    v = [ctx.domain.one, k, ctx.domain.zero]
    K = [
        [0, -v[2], v[1]],
        [v[2], 0, -v[0]],
        [-v[1], v[0], 0],
    ]

    rows = []
    for i in range(3):
        row = []
        for j in range(3):
            projector = v[i] * v[j] / norm2 - (1 if i == j else 0)
            entry = (ctx.one if i == j else ctx.zero) + s.mul_ground(ctx.coefficient(K[i][j]))
            entry += (ctx.one - c).mul_ground(ctx.coefficient(projector))
            row.append(entry)
        rows.append(tuple(row))
    R = PolyMatrix(tuple(rows), ctx)
    D = PolyMatrix.diagonal(ctx, list(ONE_ORBIT_DIAGONAL))
    X = matmul(matmul(R, D), transpose(R))

    equations = _matrix_equations(X, ctx)
    equations.append(c ** 2 + s.mul_ground(norm2) * s - 1)
    return PolySystem(tuple(equations), ctx), chart


def one_orbit_eqs(
    strategy: Union[str, OneOrbitStrategy] = OneOrbitStrategy.RODRIGUES,
    limits: Optional[GroebnerLimits] = None,
    cache: Optional[BasisCache] = None,
) -> PolySystem:
    """Reduced basis over QQ(k) of the orbit of diag(1, 1, -2) under rotations about e1 + k e2"""
    strategy = OneOrbitStrategy(strategy)
    build = _axis_system if strategy == OneOrbitStrategy.AXIS else _rodrigues_system

    def compute() -> PolySystem:
        system, chart = build()
        return eliminate(system, chart, limits)

    basis = cached_basis(TASK_ONE_ORBIT, 3, {"strategy": strategy.value}, compute, cache)
    logger.info(f"1-orbit system ({strategy.value}): {len(basis)} members")
    return basis


def specialize_k(system: PolySystem, value) -> PolySystem:
    """Reduced basis over QQ after setting k to a rational value"""
    target = system.context.with_parameter(None)
    specialized = [specialize_parameter(p, Fraction(value)) for p in system]
    return buchberger(PolySystem(tuple(p for p in specialized if p), target))


def _leading_in_k(p: PolyElement, target: PolyContext) -> PolyElement:
    """Terms of p whose coefficient grows fastest as k -> infinity, with the limit ratio"""
    orders: Dict[tuple, tuple] = {}
    for monom, coeff in p.items():
        num, den = ratfunc_parts(coeff)
        orders[monom] = (len(num) - len(den), num[-1] / den[-1])
    top = max(order for order, _ in orders.values())
    return target.ring.from_dict({
        monom: target.coefficient(lead)
        for monom, (order, lead) in orders.items()
        if order == top
    })


def one_orbit_limit_infinity(system: Optional[PolySystem] = None) -> PolySystem:
    """
    Limit of the 1-orbit system as k -> infinity.

    x13 stays free and x23 = -x13 / k; every member is replaced by its
    leading part in k and x23 itself tends to zero.
    """
    system = system or one_orbit_eqs()
    ctx = system.context
    replacement = ctx.gen(LIMIT_FREE).mul_ground(-(ctx.param() ** -1))
    target = ctx.with_parameter(None)
    leading_ctx = ctx.without([LIMIT_SUBSTITUTED]).with_parameter(None)

    limits = []
    for p in system:
        q = substitute(p, {LIMIT_SUBSTITUTED: replacement})
        if q:
            limits.append(change_context(_leading_in_k(q, leading_ctx), target))
    limits.append(target.gen(LIMIT_SUBSTITUTED))
    return buchberger(PolySystem(tuple(limits), target))


def solved_matrix(system: PolySystem, n: int = 3) -> PolyMatrix:
    """
    The symmetric matrix with every entry that leads a linear member solved for.

    For the k = 0 system this is [[1, 0, 0], [0, -x33 - 1, x23], [0, x23, x33]].
    """
    ctx = system.context
    gens = ctx.gens()
    solved: Dict[str, PolyElement] = {}
    for p in system:
        if total_degree(p) != 1:
            continue
        lead = ctx.variables[p.LM.index(1)]
        solved[lead] = -(p - gens[lead].mul_ground(p.LC)).quo_ground(p.LC)
    return PolyMatrix(
        tuple(
            tuple(solved.get(matrix_variable(i, j), gens[matrix_variable(i, j)]) for j in range(1, n + 1))
            for i in range(1, n + 1)
        ),
        ctx,
    )


def _constant_value(ctx: PolyContext, c) -> Optional[Fraction]:
    if ctx.parameter is None:
        return to_fraction(c)
    num, den = ratfunc_parts(c)
    if len(num) == 1 and len(den) == 1:
        return num[0] / den[0]
    return None


def ellipse_form(system: PolySystem, shifted: str = ELLIPSE_SHIFTED) -> EllipseForm:
    """
    Complete the square in the single quadratic member a u^2 + b w^2 + c w + d:
    (a/b) u^2 + (w + c/2b)^2 = c^2/4b^2 - d/b.
    """
    quadratics = [p for p in system if total_degree(p) == 2]
    if len(quadratics) != 1:
        raise EllipseShapeError(f"Expected one quadratic member, found {len(quadratics)}", len(quadratics))
    q = quadratics[0]
    ctx = system.context
    names = set(variables_of(q))
    if shifted not in names or len(names) != 2:
        raise EllipseShapeError(f"Quadric must involve {shifted} and one other variable", len(quadratics))
    other = (names - {shifted}).pop()
    iu, iw = ctx.index(other), ctx.index(shifted)

    zero = ctx.domain.zero
    coeffs = {(2, 0): zero, (0, 2): zero, (0, 1): zero, (0, 0): zero}
    for monom, coeff in q.items():
        key = (monom[iu], monom[iw])
        if key not in coeffs:
            raise EllipseShapeError(f"Quadric has a term outside a*u^2 + b*w^2 + c*w + d: {to_text(q)}", 1)
        coeffs[key] = coeff
    a, b, c, d = coeffs[(2, 0)], coeffs[(0, 2)], coeffs[(0, 1)], coeffs[(0, 0)]
    if not a or not b:
        raise EllipseShapeError(f"Quadric is degenerate: {to_text(q)}", 1)

    two = ctx.coefficient(2)
    axis = a / b
    centre = -c / (two * b)
    radius2 = c * c / (two * two * b * b) - d / b

    def text(value) -> str:
        return to_text(ctx.ring.ground_new(value))

    return EllipseForm(
        square_variable=other,
        shifted_variable=shifted,
        axis_coefficient=text(axis),
        centre=text(centre),
        radius_squared=text(radius2),
        radius_squared_value=_constant_value(ctx, radius2),
    )


def determinant_residual(system: PolySystem) -> PolyElement:
    """Normal form of det(X) + 2 modulo the system; zero when every point has determinant -2"""
    X = generic_symmetric(3, system.context)
    basis = buchberger(system)
    return reduce(determinant(X) - ONE_ORBIT_DETERMINANT, basis)
