"""Index of torsors under adjoint groups of types A1 and A2n over Q, computed exactly.

Brauer classes over Q and quadratic fields (by local invariants), quaternion
algebras with unitary descent, quadratic and hermitian forms with the Scharlau
transfer, and an engine that computes torsor indices together with a verified
field of that degree.
"""
__version__ = "0.1.0"

from .brauer import (
    BrauerClassK,
    BrauerClassQ,
    PlaceOverK,
    admits_unitary_involution,
    corestrict,
    find_quaternion_symbol,
    opposite,
    quaternion_class,
    restrict_to_quadratic,
    schur_index,
    splits_over,
    tensor,
)
from .engine import (
    TorsorSpec,
    TotaroReport,
    case_odd,
    case_quaternion,
    case_split_etale,
    run_totaro,
    swap_check,
)
from .errors import *  # noqa: F401,F403
from .places import (
    INF,
    IntegerPolynomial,
    Place,
    QuadraticField,
    hilbert_symbol,
    local_degrees,
)
from .quat import QuaternionAlgebra, albert_descent, multiply, splitting_quadratic
from .witt import (
    HermitianForm,
    QuadraticForm,
    SimpleExtension,
    WittInvariants,
    diagonalize,
    hermitian_similar,
    invariants,
    is_isotropic,
    odd_degree_descent,
    projection_formula_check,
    trace_form,
    transfer,
    witt_equivalent,
)
