"""
The center of B_{r,s}(delta) and supersymmetric central characters.

The center is computed from scratch as the common kernel of ad_g = [., g]
over the algebra generators g, acting on the diagram basis. Central
characters come from evaluating supersymmetric polynomials at content
vectors.

Example:
    >>> basis = compute_center(Wall(2, 2), ScalarMode.generic_delta())
    >>> basis.dimension
    6
"""

from __future__ import annotations

import logging
import typing as t
from dataclasses import dataclass, field

from ..algebra import AlgebraElement, JmFamily, generator_elements, jm_family
from ..common.config import Limits
from ..common.exceptions import NotInSpanError, RankDeficientError
from ..common.types import Wall
from ..diagrams import WalledDiagram, enumerate_diagrams
from ..scalars import LinearSpan, Scalar, ScalarMode, solve, sparse_nullspace
from ..weights import DeltaLike, Weight, as_delta, contents, dot_variant, is_semisimple
from .supersym import SupersymPoly, degree_ordered_candidates

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class CenterBasis:
    """
    A basis of (a subspace of) the center.

    Attributes:
        wall: The wall of the algebra.
        mode: Scalar mode of every element.
        elements: Linearly independent central elements.
        provenance: One tag per element: ``"nullspace"`` or ``"supersym"``.
    """

    wall: Wall
    mode: ScalarMode
    elements: tuple[AlgebraElement, ...]
    provenance: tuple[str, ...] = field(default_factory=tuple)

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def to_dict(self) -> dict[str, t.Any]:
        return {
            "wall": self.wall.to_dict(),
            "mode": self.mode.label,
            "dimension": self.dimension,
            "elements": [e.to_dict() for e in self.elements],
            "provenance": list(self.provenance),
        }


# =============================================================================
# Center by commutant nullspace
# =============================================================================


def compute_center(wall: Wall, mode: ScalarMode, limits: Limits | None = None) -> CenterBasis:
    """
    Exact basis of {x : xg = gx for every generator g}.

    Raises:
        SizeLimitExceededError: If r + s exceeds the size cap.
    """
    diagrams = enumerate_diagrams(wall, limits)
    index = {d: i for i, d in enumerate(diagrams)}
    generators = generator_elements(wall, mode)

    # equations[(g, target)][column] = coefficient of target in ad_g(column)
    equations: dict[tuple[int, int], dict[int, Scalar]] = {}
    for g_index, g in enumerate(generators):
        for column, diagram in enumerate(diagrams):
            basis = AlgebraElement.basis(diagram, mode)
            for target, coeff in (basis * g - g * basis).terms.items():
                equations.setdefault((g_index, index[target]), {})[column] = coeff

    vectors = sparse_nullspace((equations[key] for key in sorted(equations)), len(diagrams), mode.one)
    elements = tuple(AlgebraElement.from_terms(wall, mode, zip(diagrams, vector)) for vector in vectors)
    logger.info("center of B%s in %s has dimension %d", wall, mode.label, len(elements))
    return CenterBasis(wall, mode, elements, ("nullspace",) * len(elements))


# =============================================================================
# Central characters
# =============================================================================


def central_character(weight: Weight, poly: SupersymPoly, delta: DeltaLike) -> Scalar:
    """``poly`` evaluated at the content vector of ``weight``."""
    return poly.evaluate_at(contents(weight, delta).values, weight.wall.r)


def evaluation_matrix(polys: t.Sequence[SupersymPoly], weights: t.Sequence[Weight], delta: DeltaLike) -> list[list[Scalar]]:
    """M[i][j] = central character of weights[j] at polys[i]."""
    vectors = [contents(w, delta).values for w in weights]
    return [[p.evaluate_at(v, w.wall.r) for v, w in zip(vectors, weights)] for p in polys]


def _degree_cap(wall: Wall) -> int:
    return max(2 * wall.n, 2)


def select_spanning_polys(wall: Wall, delta: DeltaLike) -> list[SupersymPoly]:
    """
    Greedily pick supersymmetric polynomials whose central characters
    separate the simple modules.

    Candidates come in degree order (unit, p_1, p_2, p_1^2, p_3, ...); a
    candidate is kept when it raises the rank of the evaluation matrix on the
    weights of simple modules.

    Raises:
        RankDeficientError: If a semisimple algebra does not reach full rank.
    """
    weights = dot_variant(wall, delta)
    target = len(weights)
    vectors = [contents(w, delta).values for w in weights]
    span: LinearSpan[int] = LinearSpan()
    chosen: list[SupersymPoly] = []
    for poly in degree_ordered_candidates(_degree_cap(wall)):
        row = {j: poly.evaluate_at(v, wall.r) for j, v in enumerate(vectors)}
        if span.add(row):
            chosen.append(poly)
            if span.rank == target:
                return chosen
    if is_semisimple(wall, delta):
        raise RankDeficientError(span.rank, target)
    logger.warning(
        "%s at delta=%s is not semisimple; supersymmetric characters reach rank %d of %d",
        wall,
        as_delta(delta),
        span.rank,
        target,
    )
    return chosen


def character_classes(wall: Wall, delta: DeltaLike, max_degree: int | None = None) -> list[list[Weight]]:
    """
    Group the weights of simple modules by their central characters at
    p_1, ..., p_{max_degree} (default 2(r+s)).
    """
    degree = max_degree if max_degree is not None else _degree_cap(wall)
    polys = [SupersymPoly.power_sum(k) for k in range(1, degree + 1)]
    classes: dict[tuple[Scalar, ...], list[Weight]] = {}
    for weight in dot_variant(wall, delta):
        values = contents(weight, delta).values
        key = tuple(p.evaluate_at(values, wall.r) for p in polys)
        classes.setdefault(key, []).append(weight)
    return list(classes.values())


# =============================================================================
# Coordinates in a center basis
# =============================================================================


def expand_in_basis(x: AlgebraElement, basis: CenterBasis | t.Sequence[AlgebraElement]) -> list[Scalar]:
    """
    The unique coefficients of ``x`` in ``basis``.

    Raises:
        NotInSpanError: If ``x`` is not in the span, or the basis is dependent.
    """
    elements = list(basis.elements) if isinstance(basis, CenterBasis) else list(basis)
    if not elements:
        if x:
            raise NotInSpanError("Nonzero element cannot lie in the span of an empty basis")
        return []
    support: set[WalledDiagram] = set(x.terms)
    for element in elements:
        support.update(element.terms)
    rows = sorted(support)
    matrix = [[element.coefficient(d) for element in elements] for d in rows]
    rhs = [x.coefficient(d) for d in rows]
    return solve(matrix, rhs)


# =============================================================================
# Supersymmetric rank
# =============================================================================


@dataclass(frozen=True, slots=True)
class SupersymRankReport:
    """
    Rank of supersymmetric evaluations inside the center.

    Attributes:
        rank: Dimension of the span of the evaluated candidates.
        center_dimension: Dimension of the full center.
        in_center: Whether every evaluated candidate lies in the center.
        degree_bound: Largest weighted degree tried.
        polys: Labels of the candidates that raised the rank.
    """

    rank: int
    center_dimension: int
    in_center: bool
    degree_bound: int
    polys: tuple[str, ...]

    @property
    def spans_center(self) -> bool:
        return self.rank == self.center_dimension

    def to_dict(self) -> dict[str, t.Any]:
        return {
            "rank": self.rank,
            "center_dimension": self.center_dimension,
            "spans_center": self.spans_center,
            "in_center": self.in_center,
            "degree_bound": self.degree_bound,
            "polys": list(self.polys),
        }


def supersym_rank(
    wall: Wall,
    mode: ScalarMode,
    center: CenterBasis | None = None,
    family: JmFamily | None = None,
    max_degree: int | None = None,
) -> SupersymRankReport:
    """
    Rank of {p(L)} over degree-ordered supersymmetric candidates, and whether
    each lies in the span of ``center``.

    The comparison with the center dimension is reported as data only.
    """
    center = center if center is not None else compute_center(wall, mode)
    family = family if family is not None else jm_family(wall, mode)
    degree = max_degree if max_degree is not None else wall.n + 2

    center_span: LinearSpan[WalledDiagram] = LinearSpan()
    for element in center.elements:
        center_span.add(element.terms)

    span: LinearSpan[WalledDiagram] = LinearSpan()
    chosen: list[str] = []
    in_center = True
    for poly in degree_ordered_candidates(degree):
        element = poly.evaluate(family)
        if not center_span.contains(element.terms):
            logger.warning("%s(L) is not in the computed center of B%s", poly, wall)
            in_center = False
        if span.add(element.terms):
            chosen.append(str(poly))
            if span.rank == center.dimension and in_center:
                break
    return SupersymRankReport(span.rank, center.dimension, in_center, degree, tuple(chosen))
