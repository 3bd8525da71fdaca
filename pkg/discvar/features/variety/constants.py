"""Variety feature constants"""
from enum import Enum
from fractions import Fraction

# What the reference listings announce for n = 3: simplified forms, trace-zero
# cubics and the degree profile of Rels
STATED_SIMPLIFIED_COUNT = 4
STATED_M0EQS_COUNT = 4
STATED_RELS_PROFILE = {3: 7, 4: 1}

# No member of the simplified system has a lower total degree
DEGREE_FLOOR = 3

# Base matrix and determinant of the 1-orbit systems
ONE_ORBIT_DIAGONAL = (1, 1, -2)
ONE_ORBIT_DETERMINANT = -2

# Variables of the k -> infinity limit: x23 = -x13 / k
LIMIT_SUBSTITUTED = "x23"
LIMIT_FREE = "x13"

# Variable whose square is completed in ellipse_form
ELLIPSE_SHIFTED = "x33"

# Variables of the Rodrigues chart of a rotation about e1 + k e2
RODRIGUES_COS = "c"
RODRIGUES_SIN = "s"

# Cache task names
TASK_RELATIONS = "rels"
TASK_ORBIT = "orbit"
TASK_ONE_ORBIT = "one-orbit"

# Golden systems under resources/golden
GOLDEN_RELS_S = "rels_s_n3"
GOLDEN_M0EQS = "m0eqs_n3"
GOLDEN_ORBIT = "orbit_eqs_1_1_m2"
GOLDEN_ONE_ORBIT = "one_orbit_eqs"
GOLDEN_ONE_ORBIT_K0 = "one_orbit_k0"
GOLDEN_ONE_ORBIT_INFINITY = "one_orbit_k_infinity"


class GoldenMatch(str, Enum):
    """Outcome of comparing a computed system with a printed one"""
    IDENTICAL = "identical"
    EQUIVALENT = "equivalent, different basis"
    DIFFERENT = "different"


class DerivationStatus(str, Enum):
    COMPLETE = "complete"
    ABORTED = "aborted"


class OneOrbitStrategy(str, Enum):
    """How the rotations about e1 + k e2 are written"""
    AXIS = "axis"            # orthogonal Y with Y v = v
    RODRIGUES = "rodrigues"  # I + s K + (1 - c)(v v^T / |v|^2 - I), c^2 + |v|^2 s^2 = 1


class KMode(str, Enum):
    SYMBOLIC = "symbolic"
    VALUE = "value"
    INFINITY = "infinity"

# Radius squared of the circles of the 1-orbits of diag(1, 1, -2)
CIRCLE_RADIUS_SQUARED = Fraction(9, 4)

# Verification battery
DIAMETER_SAMPLES = 10_000
DIAMETER_FLOOR = 2.97
BOUND_TRIALS = 100
BOUND_SAMPLES = 200
REGULAR_POINTS = 100
SCALAR_POINTS = 10
CYLINDER_POINTS = 100
CIRCLE_POINTS = 100
QUADRATIC_FORM_FLOOR = 0.1
# k of the numeric 1-orbit check and the shift/factor of the homothety check
CHECK_K = 2
HOMOTHETY_SHIFT = Fraction(1, 2)
HOMOTHETY_FACTOR = Fraction(2)
# The n = 4 attempt of verify --deep
DEEP_N = 4
DEEP_MAX_PAIRS = 20_000
DEEP_MAX_SECONDS = 300.0
DEEP_MAX_REDUCTION_STEPS = 2_000_000
