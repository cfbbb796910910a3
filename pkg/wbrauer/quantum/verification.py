"""
Checks on the quantized walled Brauer algebra.

- verify_q_relations: the commutation relations of quantum transpositions,
  turnbacks and Jucys-Murphy elements, at every admissible index
- q_supersym_central_check: power sums in the quantum Jucys-Murphy elements
  commute with every generator
- classical_limit_check: at q = 1 (rho = q^N) the structure constants and the
  Jucys-Murphy elements become those of B_{r,s}(N)
- q_center_dimension: the commutant of the generators and the rank of the
  supersymmetric evaluations inside it
- check_at_seeds: the above at random rational (q, rho)
"""

from __future__ import annotations

import itertools
import logging
import typing as t
from dataclasses import dataclass

from ..algebra import AlgebraElement, RelationCheck, RelationReport, jm_element
from ..center.supersym import SupersymPoly, degree_ordered_candidates
from ..common.config import Limits, get_limits
from ..common.exceptions import (
    ClosedFormMismatchError,
    DimensionMismatchError,
    DivisionByZeroError,
    InvalidParameterError,
    LimitMismatchError,
    PoleAtQ1Error,
)
from ..common.serialization import format_scalar
from ..common.types import Wall
from ..diagrams import WalledDiagram, word_to_diagram
from ..scalars import LinearSpan, ModeKind, ScalarMode, SpecializationReport, check_at_specializations, specialize, sparse_nullspace
from .element import QElement, q_generators
from .jucys_murphy import QJmFamily, q_e, q_jm_family, q_power_sum, q_s, q_transposition, q_turnback
from .presentation import Presentation, Word
from .rewriting import RewriteSystem, complete

logger = logging.getLogger(__name__)

Q_RELATION_IDS: tuple[str, ...] = (
    "q-transposition-commutes",
    "q-turnback-commutes",
    "q-turnback-shift",
    "q-disjoint-turnbacks",
    "q-turnbacks-sharing-vertex",
    "q-jm-adjacent-left",
    "q-jm-adjacent-right",
    "q-jm-wall-annihilation",
    "q-transposition-commutes-with-jm",
    "q-turnback-commutes-with-jm",
    "q-jm-commute",
    "q-power-sum-central",
)


class _QSuite:
    """Collects checks for one completed system, caching the building blocks."""

    def __init__(self, system: RewriteSystem) -> None:
        self.system = system
        self.wall = system.presentation.wall
        self.mode = system.presentation.mode
        self.checks: list[RelationCheck] = []
        self._cache: dict[tuple[t.Any, ...], QElement] = {}

    def _cached(self, key: tuple[t.Any, ...], build: t.Callable[[], QElement]) -> QElement:
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def s(self, i: int) -> QElement:
        return self._cached(("S", i), lambda: q_s(self.system, i))

    def tr(self, a: int, b: int) -> QElement:
        a, b = min(a, b), max(a, b)
        return self._cached(("T", a, b), lambda: q_transposition(self.system, a, b))

    def e(self, j: int, k: int) -> QElement:
        return self._cached(("E", j, k), lambda: q_turnback(self.system, j, k))

    def record(self, relation: str, indices: tuple[t.Any, ...], passed: bool) -> None:
        if not passed:
            logger.warning("%s failed at %s on H%s", relation, indices, self.wall)
        self.checks.append(RelationCheck(relation, indices, passed))

    def report(self) -> RelationReport:
        return RelationReport(self.wall, self.mode.label, tuple(self.checks))

    @property
    def s_indices(self) -> list[int]:
        return [i for i in range(1, self.wall.n) if i != self.wall.r]


def _lemma_relations(suite: _QSuite) -> None:
    wall, r, n = suite.wall, suite.wall.r, suite.wall.n
    q_diff = suite.mode.q_diff
    pairs = [(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1) if wall.same_side(j, k)]
    turnbacks = [(j, k) for j in range(1, r + 1) for k in range(r + 1, n + 1)]

    for i in suite.s_indices:
        for j, k in pairs:
            if {i, i + 1}.isdisjoint({j, k}):
                ok = suite.s(i) * suite.tr(j, k) == suite.tr(j, k) * suite.s(i)
                suite.record("q-transposition-commutes", (i, j, k), ok)
        for j, k in turnbacks:
            if {i, i + 1}.isdisjoint({j, k}):
                ok = suite.s(i) * suite.e(j, k) == suite.e(j, k) * suite.s(i)
                suite.record("q-turnback-commutes", (i, j, k), ok)

    for i in range(1, r):
        for k in range(r + 1, n + 1):
            s, lower, upper = suite.s(i), suite.e(i, k), suite.e(i + 1, k)
            ok = s * lower == upper * s - upper.scale(q_diff) and lower * s == s * upper - upper.scale(q_diff)
            suite.record("q-turnback-shift", (i, k), ok)

    if not (r and wall.s):
        return
    e = suite.e(r, r + 1)
    rho = suite.mode.rho
    for j, k in turnbacks:
        if j != r and k != r + 1:
            suite.record("q-disjoint-turnbacks", (j, k), e * suite.e(j, k) == suite.e(j, k) * e)
    for i in range(1, r):
        other, t_ir = suite.e(i, r + 1), suite.tr(i, r)
        ok = e * other == (e * t_ir).scale(1 / rho) and other * e == (t_ir * e).scale(1 / rho)
        suite.record("q-turnbacks-sharing-vertex", (i, r + 1), ok)
    for k in range(r + 2, n + 1):
        other, t_rk = suite.e(r, k), suite.tr(r + 1, k)
        ok = e * other == (e * t_rk).scale(rho) and other * e == (t_rk * e).scale(rho)
        suite.record("q-turnbacks-sharing-vertex", (r, k), ok)


def _jm_relations(suite: _QSuite, family: QJmFamily) -> None:
    wall, r, n = suite.wall, suite.wall.r, suite.wall.n
    q_diff = suite.mode.q_diff
    for i in range(1, r):
        s, low, high = suite.s(i), family[i], family[i + 1]
        expected = 1 - low.scale(q_diff)
        ok = s * high - low * s == expected and high * s - s * low == expected
        suite.record("q-jm-adjacent-left", (i,), ok)
    for i in range(r + 1, n):
        s, low, high = suite.s(i), family[i], family[i + 1]
        expected = 1 + high.scale(q_diff)
        ok = s * high - low * s == expected and high * s - s * low == expected
        suite.record("q-jm-adjacent-right", (i,), ok)
    for i in suite.s_indices:
        for k in range(1, n + 1):
            if k not in (i, i + 1):
                suite.record("q-transposition-commutes-with-jm", (i, k), suite.s(i) * family[k] == family[k] * suite.s(i))
    if r and wall.s:
        e = q_e(suite.system)
        pair = family[r] + family[r + 1]
        suite.record("q-jm-wall-annihilation", (r,), not (e * pair) and not (pair * e))
        for k in range(1, n + 1):
            if k not in (r, r + 1):
                suite.record("q-turnback-commutes-with-jm", (k,), e * family[k] == family[k] * e)
    for j, k in itertools.combinations(range(1, n + 1), 2):
        suite.record("q-jm-commute", (j, k), family[j] * family[k] == family[k] * family[j])


def verify_q_relations(system: RewriteSystem, family: QJmFamily | None = None) -> RelationReport:
    """
    Check every admissible instance of the quantum commutation relations.

    Pass a perturbed ``family`` to exercise the failure path.
    """
    suite = _QSuite(system)
    family = family if family is not None else q_jm_family(system)
    _lemma_relations(suite)
    _jm_relations(suite, family)
    report = suite.report()
    logger.info("quantum relations on H%s in %s: %d checks, passed=%s", suite.wall, suite.mode.label, len(report.checks), report.passed)
    return report


def q_supersym_central_check(system: RewriteSystem, m_max: int, family: QJmFamily | None = None) -> RelationReport:
    """Whether each power sum p_m(L), m = 0..m_max, commutes with every generator."""
    suite = _QSuite(system)
    family = family if family is not None else q_jm_family(system)
    generators = q_generators(system)
    for m in range(m_max + 1):
        element = q_power_sum(family, m)
        central = all(element * g == g * element for g in generators)
        suite.record("q-power-sum-central", (m,), central)
    return suite.report()


# =============================================================================
# Classical limit
# =============================================================================


@dataclass(frozen=True, slots=True)
class ClassicalLimitReport:
    """
    Outcome of :func:`classical_limit_check`.

    Attributes:
        wall: The wall (r, s).
        n: The exponent N with rho = q^N; delta becomes N at q = 1.
        basis_rank: Rank of the specialized normal words in B_{r,s}(N).
        words_checked: Number of generator words compared.
        word_mismatches: Words whose specialized normal form differs from the
            classical product.
        jm_matches: For each k, whether L_k at q = 1 equals the classical L_k.
    """

    wall: Wall
    n: int
    basis_rank: int
    words_checked: int
    word_mismatches: tuple[str, ...]
    jm_matches: tuple[bool, ...]

    @property
    def passed(self) -> bool:
        return self.basis_rank == self.wall.dimension and not self.word_mismatches and all(self.jm_matches)

    def to_dict(self) -> dict[str, t.Any]:
        return {
            "wall": self.wall.to_dict(),
            "N": self.n,
            "basis_rank": self.basis_rank,
            "words_checked": self.words_checked,
            "word_mismatches": list(self.word_mismatches),
            "jm_matches": list(self.jm_matches),
            "passed": self.passed,
        }


class _Specializer:
    """Maps elements over Q(q) to B_{r,s}(N) by q -> 1 and letters to generator diagrams."""

    def __init__(self, system: RewriteSystem) -> None:
        presentation = system.presentation
        self.presentation = presentation
        self.wall = presentation.wall
        self.classical = ScalarMode.rational(t.cast(int, presentation.mode.n))
        self._images: dict[Word, AlgebraElement] = {}

    def image(self, word: Word) -> AlgebraElement:
        """The classical product of the letters of ``word``."""
        if word not in self._images:
            kinds = [self.presentation.letters[i].classical(self.wall) for i in word]
            diagram, loops = word_to_diagram(self.wall, kinds)
            self._images[word] = AlgebraElement.basis(diagram, self.classical, self.classical.delta**loops)
        return self._images[word]

    def coefficient(self, entry: t.Any, value: t.Any) -> t.Any:
        try:
            return specialize(value, 1)
        except DivisionByZeroError:
            raise PoleAtQ1Error(entry, format_scalar(value)) from None

    def element(self, terms: t.Mapping[Word, t.Any]) -> AlgebraElement:
        total = AlgebraElement.zero(self.wall, self.classical)
        fmt = self.presentation.format_word
        for word, coeff in terms.items():
            total = total + self.image(word).scale(self.coefficient(fmt(word), coeff))
        return total


def classical_limit_check(system: RewriteSystem, limits: Limits | None = None, family: QJmFamily | None = None) -> ClassicalLimitReport:
    """
    Specialize a system over Q(q) with rho = q^N at q = 1.

    Every rule coefficient must be regular at q = 1. The normal words must map
    to a basis of B_{r,s}(N); every generator word up to the configured length
    (default r+s+2) must reduce to the classical product; and each quantum
    L_k must specialize to the classical L_k.

    Raises:
        InvalidParameterError: If the system is not over ``generic-q``.
        PoleAtQ1Error: If a coefficient has a pole at q = 1.
        LimitMismatchError: If the normal words do not specialize to a basis.
    """
    presentation = system.presentation
    if presentation.mode.kind is not ModeKind.GENERIC_Q:
        raise InvalidParameterError(f"The classical limit needs a generic-q system, got {presentation.mode.label}")
    limits = limits or get_limits()
    wall = presentation.wall
    fmt = presentation.format_word
    specializer = _Specializer(system)

    for lead, rhs in system.rules.items():
        for word, coeff in rhs.items():
            specializer.coefficient((fmt(lead), fmt(word)), coeff)

    span: LinearSpan[WalledDiagram] = LinearSpan()
    for word in system.normal_words():
        span.add(specializer.image(word).terms)
    if span.rank != wall.dimension:
        raise LimitMismatchError(f"Normal words of H{wall} specialize to rank {span.rank}, expected {wall.dimension}")

    mismatches: list[str] = []
    checked = 0
    letters = range(len(presentation.letters))
    for length in range(limits.word_length(wall) + 1):
        for word in itertools.product(letters, repeat=length):
            checked += 1
            if specializer.element(system.normal_form_word(word)) != specializer.image(word):
                mismatches.append(fmt(word))

    family = family if family is not None else q_jm_family(system)
    jm_matches = tuple(
        specializer.element(family[k].terms) == jm_element(wall, specializer.classical, k) for k in range(1, wall.n + 1)
    )
    report = ClassicalLimitReport(wall, t.cast(int, presentation.mode.n), span.rank, checked, tuple(mismatches), jm_matches)
    logger.info("classical limit of H%s: %d words, passed=%s", wall, checked, report.passed)
    return report


# =============================================================================
# Center
# =============================================================================


@dataclass(frozen=True, slots=True)
class QCenterReport:
    """
    Dimension of the center of H_{r,s} and the rank of its supersymmetric part.

    Attributes:
        dimension: Dimension of the commutant of the generators.
        supersym_rank: Rank of the evaluated supersymmetric candidates.
        in_center: Whether every evaluated candidate was central.
        degree_bound: Largest weighted degree tried.
        polys: Candidates that raised the rank.
    """

    dimension: int
    supersym_rank: int
    in_center: bool
    degree_bound: int
    polys: tuple[str, ...]

    @property
    def spans_center(self) -> bool:
        return self.supersym_rank == self.dimension

    def to_dict(self) -> dict[str, t.Any]:
        return {
            "dimension": self.dimension,
            "supersym_rank": self.supersym_rank,
            "spans_center": self.spans_center,
            "in_center": self.in_center,
            "degree_bound": self.degree_bound,
            "polys": list(self.polys),
        }


def q_supersym_evaluate(poly: SupersymPoly, family: QJmFamily) -> QElement:
    """Substitute p_k -> p_k(L) into ``poly``."""
    system = family.system
    power_sums: dict[int, QElement] = {}
    result = QElement.zero(system)
    for monom, coeff in poly.terms():
        product = QElement.one(system)
        for k, exponent in enumerate(monom):
            if not exponent:
                continue
            if k not in power_sums:
                power_sums[k] = q_power_sum(family, k)
            for _ in range(exponent):
                product = product * power_sums[k]
        result = result + product.scale(coeff)
    return result


def q_center_dimension(system: RewriteSystem, family: QJmFamily | None = None, max_degree: int | None = None) -> QCenterReport:
    """
    Exact commutant of the generators over the normal-word basis, and the
    rank of supersymmetric evaluations inside it (reported, not asserted).
    """
    words = system.normal_words()
    index = {w: i for i, w in enumerate(words)}
    mode = system.presentation.mode
    equations: dict[tuple[int, int], dict[int, t.Any]] = {}
    for g_index, g in enumerate(q_generators(system)):
        for column, word in enumerate(words):
            basis = QElement(system, {word: mode.one})
            for target, coeff in (basis * g - g * basis).terms.items():
                equations.setdefault((g_index, index[target]), {})[column] = coeff
    vectors = sparse_nullspace((equations[k] for k in sorted(equations)), len(words), mode.one)

    center: LinearSpan[Word] = LinearSpan()
    for vector in vectors:
        center.add({w: c for w, c in zip(words, vector) if c})

    family = family if family is not None else q_jm_family(system)
    degree = max_degree if max_degree is not None else system.presentation.wall.n + 2
    span: LinearSpan[Word] = LinearSpan()
    chosen: list[str] = []
    in_center = True
    for poly in degree_ordered_candidates(degree):
        element = q_supersym_evaluate(poly, family)
        if not center.contains(element.terms):
            in_center = False
        if span.add(element.terms):
            chosen.append(str(poly))
            if span.rank == len(vectors) and in_center:
                break
    logger.info("center of H%s has dimension %d, supersymmetric rank %d", system.presentation.wall, len(vectors), span.rank)
    return QCenterReport(len(vectors), span.rank, in_center, degree, tuple(chosen))


# =============================================================================
# Random specializations
# =============================================================================


def check_at_seeds(
    wall: Wall,
    m_max: int = 2,
    count: int = 3,
    seed: int = 0,
    limits: Limits | None = None,
) -> SpecializationReport:
    """
    Complete and verify H_{r,s}(q0, rho0) at ``count`` random rational points.

    At each point the normal words must number (r+s)!, the Jucys-Murphy
    closed forms must hold, and the relation and centrality suites must pass.
    """

    def check(mode: ScalarMode) -> bool:
        try:
            system = complete(Presentation.build(wall, mode), limits)
            family = q_jm_family(system)
        except (DimensionMismatchError, ClosedFormMismatchError) as exc:
            logger.warning("H%s at %s: %s", wall, mode.label, exc)
            return False
        return verify_q_relations(system, family).passed and q_supersym_central_check(system, m_max, family).passed

    return check_at_specializations(check, count=count, seed=seed)
