"""
Exact scalars and linear algebra.

- ScalarMode: the coefficient field plus the values of delta, q and rho
- nullspace / determinant / rank / solve: fraction-free elimination
- LinearSpan: incremental span of sparse vectors
- check_at_specializations: identity testing at random rational (q, rho)
"""

from .identity_testing import (
    MIN_SPECIALIZATIONS,
    SpecializationReport,
    check_at_specializations,
    random_specializations,
)
from .linalg import (
    LinearSpan,
    determinant,
    fraction_free_echelon,
    normalize_vector,
    nullspace,
    rank,
    solve,
    sparse_nullspace,
)
from .modes import (
    DELTA,
    DELTA_FIELD,
    Q,
    Q_FIELD,
    ModeKind,
    Scalar,
    ScalarLike,
    ScalarMode,
    from_qq,
    specialize,
    to_qq,
)

__all__ = [
    # Modes
    "ScalarMode",
    "ModeKind",
    "Scalar",
    "ScalarLike",
    "DELTA",
    "DELTA_FIELD",
    "Q",
    "Q_FIELD",
    "specialize",
    "to_qq",
    "from_qq",
    # Linear algebra
    "fraction_free_echelon",
    "determinant",
    "nullspace",
    "rank",
    "solve",
    "sparse_nullspace",
    "normalize_vector",
    "LinearSpan",
    # Identity testing
    "MIN_SPECIALIZATIONS",
    "SpecializationReport",
    "check_at_specializations",
    "random_specializations",
]
