"""Conjugation orbits: spectra, spheres, circles, samples and diameters"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

import numpy as np

from discvar.core.config import settings
from discvar.features.numgeo.constants import CIRCUMFERENCE_GRID, SpectrumKind
from discvar.features.numgeo.domain.entities import (
    CircleFit,
    DiameterEstimate,
    EigenMultiset,
    OrbitSample,
    SymMatrixN,
)
from discvar.features.numgeo.exceptions import DimensionMismatchError, NumgeoException
from discvar.features.numgeo.service.linalg import (
    Seed,
    conjugate,
    conjugate_batch,
    jacobi_eigs,
    random_so_batch,
    rotation_axis_angle,
    s_dist,
    s_inner,
    s_quad,
    tangent_basis,
)
from discvar.features.numgeo.service.rank import rank_with_tol

logger = logging.getLogger(__name__)


def spectrum_width(eigs: EigenMultiset) -> int:
    return eigs.width


def is_maximal_spectrum(eigs: EigenMultiset) -> bool:
    """Exactly n - 1 distinct eigenvalues"""
    return eigs.kind() == SpectrumKind.MAXIMAL


def spectrum_kind(eigs: EigenMultiset) -> SpectrumKind:
    return eigs.kind()


def diagonal_ordered(X: SymMatrixN) -> SymMatrixN:
    """The unique diag(l_1 <= ... <= l_n) in Orbit(X)"""
    eigs, _ = jacobi_eigs(X)
    return SymMatrixN.diag(eigs.values)


def scal_projection(X: SymMatrixN) -> SymMatrixN:
    """Orthogonal projection to the line of scalar matrices"""
    return SymMatrixN.scalar(X.n, X.trace() / X.n)


def distance_to_scal(X: SymMatrixN) -> float:
    return s_dist(X, scal_projection(X))


def orbit_sphere_radius(D: SymMatrixN) -> float:
    """Radius of the sphere about scal_projection(D) that holds Orbit(D)"""
    return distance_to_scal(D)


def orbit_dimension(D: SymMatrixN, tol: Optional[float] = None) -> int:
    """Rank of the commutator tangent vectors at D"""
    tol = settings.RANK_TOL if tol is None else tol
    vectors = [T.flatten_upper() for T in tangent_basis(D)]
    return rank_with_tol(vectors, tol, floor=tol * math.sqrt(s_quad(D)))


def orthogonality_witness(D: SymMatrixN, tol: float = 1e-9) -> bool:
    """Every tangent vector at the diagonal D is s-orthogonal to every diagonal direction"""
    if not D.is_diagonal():
        raise NumgeoException("Orthogonality witness needs a diagonal matrix")
    bound = tol * (1.0 + float(np.max(np.abs(D.array))))
    for T in tangent_basis(D):
        for i in range(D.n):
            E = np.zeros((D.n, D.n))
            E[i, i] = 1.0
            if abs(s_inner(T, SymMatrixN(E))) > bound:
                return False
    return True


def family_axis(psi: float) -> np.ndarray:
    """e1 turned by psi about e3"""
    return np.array([math.cos(psi), math.sin(psi), 0.0])


def uniform_angles(count: int) -> np.ndarray:
    """count angles spread evenly over one period [0, pi) of the conjugation"""
    return np.pi * np.arange(count) / count


def circumference_family(D: SymMatrixN, psi: float, phis: Sequence[float]) -> List[SymMatrixN]:
    """Points of the 1-orbit of D about family_axis(psi) (n = 3)"""
    if D.n != 3:
        raise DimensionMismatchError("Circumference family is defined for n = 3", 3, D.n)
    axis = family_axis(psi)
    return [conjugate(rotation_axis_angle(axis, float(phi)), D) for phi in phis]


def circle_fit_deviation(points: Sequence[SymMatrixN], center: Optional[SymMatrixN] = None) -> CircleFit:
    """
    Radius and max radial deviation of points about a center.

    The default center is the mean, which is the circle center when the
    points come from uniform_angles.
    """
    if not points:
        raise NumgeoException("No points to fit")
    if center is None:
        center = SymMatrixN(np.mean([p.array for p in points], axis=0))
    radii = np.array([s_dist(p, center) for p in points])
    radius = float(np.mean(radii))
    return CircleFit(center=center, radius=radius, deviation=float(np.max(np.abs(radii - radius))))


def _chunk_sizes(count: int, workers: int) -> List[int]:
    base, extra = divmod(count, workers)
    return [base + (1 if i < extra else 0) for i in range(workers)]


def sample_orbit(D: SymMatrixN, count: int, seed: Optional[int] = None, workers: int = 1) -> OrbitSample:
    """
    count points g D g^T with Haar-random g.

    Each worker draws from its own stream spawned from the master seed, so
    the sample depends only on (seed, workers).
    """
    if count < 0 or workers < 1:
        raise NumgeoException("Sample count must be >= 0 and workers >= 1")
    seed = settings.SEED if seed is None else seed
    children = np.random.SeedSequence(seed).spawn(workers)
    sizes = _chunk_sizes(count, workers)

    def task(child: np.random.SeedSequence, size: int) -> np.ndarray:
        return conjugate_batch(random_so_batch(D.n, size, child), D)

    if workers == 1:
        parts = [task(children[0], count)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(task, children, sizes))
    points = np.concatenate(parts, axis=0) if parts else np.zeros((0, D.n, D.n))
    return OrbitSample(points=points, seed=seed, workers=workers)


def _circumference_rotations(grid: int) -> np.ndarray:
    """Frame changes for every (psi, phi) on a grid x grid lattice"""
    angles = uniform_angles(grid)
    return np.array([
        rotation_axis_angle(family_axis(psi), phi).matrix
        for psi in angles
        for phi in angles
    ])


def _transposed_diagonals(values: Sequence[float]) -> np.ndarray:
    n = len(values)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            v = list(values)
            v[i], v[j] = v[j], v[i]
            out.append(np.diag(v))
    return np.array(out) if out else np.zeros((0, n, n))


def _distances(points: np.ndarray, D: SymMatrixN) -> np.ndarray:
    if not len(points):
        return np.zeros(0)
    diff = points - D.array[None, :, :]
    return np.sqrt(np.sum(diff ** 2, axis=(1, 2)) / 2.0)


def diameter_bounds(eigs: EigenMultiset):
    """(max |l_i - l_j|, 2 * sqrt(sum (l_i - m)^2))"""
    m = eigs.mean()
    return eigs.max_gap(), 2.0 * math.sqrt(sum((v - m) ** 2 for v in eigs.values))


def orbit_diameter_estimate(
    eigs: EigenMultiset,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    workers: int = 1,
) -> DiameterEstimate:
    """
    Largest s-distance from D = diag(eigs) to sampled points of its orbit.

    The orbit is homogeneous, so this is a lower estimate of the diameter.
    Candidates are a fixed grid over the circumference family when n = 3 and
    Haar samples; adding samples never lowers the estimate. The transposed
    diagonals are measured apart and never enter the estimate.
    """
    samples = settings.SAMPLES if samples is None else samples
    maximal = is_maximal_spectrum(eigs)
    if not maximal:
        logger.warning(f"Spectrum {eigs} is {eigs.kind().value}, not maximal; estimating anyway")

    D = SymMatrixN.diag(eigs.values)
    transposition = float(np.max(_distances(_transposed_diagonals(eigs.values), D), initial=0.0))
    best = 0.0

    grid_points = 0
    if D.n == 3:
        rotations = _circumference_rotations(CIRCUMFERENCE_GRID)
        grid_points = len(rotations)
        best = max(best, float(np.max(_distances(conjugate_batch(rotations, D), D))))

    sample = sample_orbit(D, samples, seed, workers)
    best = max(best, float(np.max(_distances(sample.points, D), initial=0.0)))

    lower, upper = diameter_bounds(eigs)
    logger.info(f"Diameter estimate {best:.12f} for {eigs}, transposition {transposition:.12f} (bounds {lower:.6f}, {upper:.6f})")
    return DiameterEstimate(
        estimate=best,
        transposition=transposition,
        lower_bound=lower,
        upper_bound=upper,
        samples=samples,
        grid_points=grid_points,
        maximal_spectrum=maximal,
    )
