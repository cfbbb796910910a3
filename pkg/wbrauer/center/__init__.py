"""
The center of B_{r,s}(delta), central characters and path idempotents.

Example:
    >>> from wbrauer.center import SupersymPoly, expand_in_basis
    >>> p1 = SupersymPoly.power_sum(1).evaluate(jm_family(wall, mode))
    >>> expand_in_basis(p1, basis)
"""

from .center import (
    CenterBasis,
    SupersymRankReport,
    central_character,
    character_classes,
    compute_center,
    evaluation_matrix,
    expand_in_basis,
    select_spanning_polys,
    supersym_rank,
)
from .idempotents import (
    EigenCheck,
    IdempotentReport,
    content_steps,
    gz_basis_count,
    gz_dimension,
    idempotent,
    verify_idempotents,
)
from .supersym import MAX_DEGREE, SupersymPoly, degree_ordered_candidates

__all__ = [
    # Supersymmetric polynomials
    "SupersymPoly",
    "MAX_DEGREE",
    "degree_ordered_candidates",
    # Center
    "CenterBasis",
    "compute_center",
    "central_character",
    "evaluation_matrix",
    "select_spanning_polys",
    "character_classes",
    "expand_in_basis",
    "SupersymRankReport",
    "supersym_rank",
    # Idempotents
    "gz_dimension",
    "gz_basis_count",
    "content_steps",
    "idempotent",
    "EigenCheck",
    "IdempotentReport",
    "verify_idempotents",
]
