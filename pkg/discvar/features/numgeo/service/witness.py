"""Linear-independence witnesses: the singular vertex and the embracing plane"""
import logging
import math
from fractions import Fraction
from typing import List, Sequence

import numpy as np

from discvar.core.config import settings
from discvar.features.numgeo.constants import WITNESS_A, WITNESS_B
from discvar.features.numgeo.domain.entities import RankWitness, SymMatrixN
from discvar.features.numgeo.service.linalg import (
    antisymmetric_basis,
    commutator,
    conjugate,
    rotation_axis_angle,
)
from discvar.features.numgeo.service.rank import rank_with_tol, row_echelon

logger = logging.getLogger(__name__)

Exact = List[List[Fraction]]


def _upper(rows: Exact) -> List[Fraction]:
    n = len(rows)
    return [rows[i][j] for i in range(n) for j in range(i, n)]


def _diag(*values) -> Exact:
    n = len(values)
    return [[Fraction(values[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def _symmetric_unit(n: int, i: int, j: int) -> Exact:
    """E_ij + E_ji (0-based)"""
    rows = [[Fraction(0)] * n for _ in range(n)]
    rows[i][j] = rows[j][i] = Fraction(1)
    return rows


def _numeric(rows: Exact) -> SymMatrixN:
    return SymMatrixN(np.array([[float(x) for x in r] for r in rows]))


def _witness(labels: Sequence[str], exact: Sequence[Exact], expected: int, deviation: float) -> RankWitness:
    vectors = [_upper(m) for m in exact]
    staircase = row_echelon(vectors)
    numeric_rank = rank_with_tol([[float(x) for x in v] for v in vectors], settings.RANK_TOL)
    witness = RankWitness(
        labels=list(labels),
        matrices=[_numeric(m) for m in exact],
        exact_rows=vectors,
        exact_rank=staircase.rank,
        numeric_rank=numeric_rank,
        expected_rank=expected,
        staircase=staircase,
        construction_deviation=deviation,
    )
    logger.info(
        f"Rank witness {', '.join(labels)}: exact {witness.exact_rank}, numeric {numeric_rank}, expected {expected}"
    )
    return witness


def singularity_witness(a: Fraction = WITNESS_A, b: Fraction = WITNESS_B) -> RankWitness:
    """
    Four lines of the trace-zero cone through the origin with independent directions.

    D = diag(1, 1, -2) and D2 = diag(1, -2, 1) are diagonal points of the orbit;
    M1 and M2 are its turns by 45 degrees about e1 and e2. Four independent
    directions through the vertex rule out a three-dimensional tangent space there.
    """
    D = _diag(1, 1, -2)
    D2 = _diag(1, -2, 1)
    M1 = [[Fraction(1), Fraction(0), Fraction(0)],
          [Fraction(0), a, b],
          [Fraction(0), b, -a - 1]]
    M2 = [[a, Fraction(0), b],
          [Fraction(0), Fraction(1), Fraction(0)],
          [b, Fraction(0), -a - 1]]

    base = _numeric(D)
    rotated_m1 = conjugate(rotation_axis_angle([1.0, 0.0, 0.0], math.pi / 4), base)
    rotated_m2 = conjugate(rotation_axis_angle([0.0, 1.0, 0.0], -math.pi / 4), base)
    deviation = max(
        float(np.max(np.abs(rotated_m1.array - _numeric(M1).array))),
        float(np.max(np.abs(rotated_m2.array - _numeric(M2).array))),
    )
    return _witness(["D", "D2", "M1", "M2"], [D, D2, M1, M2], 4, deviation)


def embracing_plane_witness() -> RankWitness:
    """
    Five independent directions in every affine plane holding Orbit(diag(0, 0, 1)).

    T1 and T2 are tangent at D, B is tangent at D3 = diag(1, 0, 0), and
    D2' = D2 - D, D3' = D3 - D join D to the other diagonal points.
    """
    D = _diag(0, 0, 1)
    D2 = _diag(0, 1, 0)
    D3 = _diag(1, 0, 0)
    T1 = _symmetric_unit(3, 1, 2)
    T2 = _symmetric_unit(3, 0, 2)
    B = _symmetric_unit(3, 0, 1)
    D2p = [[x - y for x, y in zip(r, s)] for r, s in zip(D2, D)]
    D3p = [[x - y for x, y in zip(r, s)] for r, s in zip(D3, D)]

    # T1, T2 are the commutators of D with rotations about e1, e2; B that of D3 about e3
    A12, A13, A23 = antisymmetric_basis(3)
    deviation = max(
        float(np.max(np.abs(commutator(A23, _numeric(D)).array - _numeric(T1).array))),
        float(np.max(np.abs(commutator(A13, _numeric(D)).array - _numeric(T2).array))),
        float(np.max(np.abs(commutator(A12, _numeric(D3)).array + _numeric(B).array))),
    )
    return _witness(["T1", "T2", "B", "D2'", "D3'"], [T1, T2, B, D2p, D3p], 5, deviation)
