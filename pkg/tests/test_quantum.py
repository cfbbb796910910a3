"""Tests for the quantized algebra: presentation, completion and checks."""

from fractions import Fraction

import pytest

from wbrauer.common.config import Limits
from wbrauer.common.exceptions import (
    ClosedFormMismatchError,
    CompletionBudgetExceededError,
    CrossesWallError,
    IndexOutOfRangeError,
    InvalidParameterError,
    SizeLimitExceededError,
)
from wbrauer.common.types import Wall
from wbrauer.quantum import (
    EMPTY_WORD,
    Presentation,
    QElement,
    check_at_seeds,
    check_closed_forms,
    classical_limit_check,
    closed_form_jm,
    complete,
    q_center_dimension,
    q_e,
    q_jm_family,
    q_power_sum,
    q_s,
    q_s_inverse,
    q_supersym_central_check,
    q_transposition,
    q_turnback,
    verify_q_relations,
    word_key,
)
from wbrauer.scalars import ScalarMode


@pytest.fixture
def qr23() -> ScalarMode:
    return ScalarMode.rational_qr(2, 3)


@pytest.fixture
def h21(qr23: ScalarMode):  # type: ignore[no-untyped-def]
    return complete(Presentation.build(Wall(2, 1), qr23))


@pytest.fixture
def h21_generic():  # type: ignore[no-untyped-def]
    return complete(Presentation.build(Wall(2, 1), ScalarMode.generic_q(2)))


class TestPresentation:
    def test_one_one(self) -> None:
        presentation = Presentation.build(Wall(1, 1), ScalarMode.generic_q(2))
        assert [str(letter) for letter in presentation.letters] == ["E"]
        assert [r.name for r in presentation.relations] == ["turnback-square"]

    def test_two_two(self, qr23: ScalarMode) -> None:
        presentation = Presentation.build(Wall(2, 2), qr23)
        assert presentation.to_dict()["letters"] == ["S1", "S3", "E"]
        assert [r.name for r in presentation.relations] == [
            "quadratic-S1",
            "quadratic-S3",
            "far-S1-S3",
            "turnback-square",
            "turnback-S1-turnback",
            "turnback-S3-turnback",
            "long-right",
            "long-left",
        ]

    def test_hecke_algebra(self, qr23: ScalarMode) -> None:
        presentation = Presentation.build(Wall(3, 0), qr23)
        assert not presentation.has_e
        assert [r.name for r in presentation.relations] == ["quadratic-S1", "quadratic-S2", "braid-S1"]

    def test_needs_q_mode(self, generic: ScalarMode) -> None:
        with pytest.raises(InvalidParameterError):
            Presentation.build(Wall(2, 1), generic)

    def test_words(self, qr23: ScalarMode) -> None:
        presentation = Presentation.build(Wall(2, 2), qr23)
        assert presentation.format_word((0, 2)) == "S1*E"
        assert presentation.format_word(EMPTY_WORD) == "1"
        assert presentation.parse_word("S1*E") == (0, 2)
        assert presentation.parse_word("1") == EMPTY_WORD
        with pytest.raises(InvalidParameterError):
            presentation.parse_word("S2")
        with pytest.raises(IndexOutOfRangeError):
            presentation.s(2)

    def test_degree_lexicographic_order(self) -> None:
        assert sorted([(1, 0), (2,), (0, 0, 0), ()], key=word_key) == [(), (2,), (1, 0), (0, 0, 0)]


class TestCompletion:
    @pytest.mark.parametrize(
        ("wall", "mode"),
        [
            (Wall(1, 1), ScalarMode.generic_q(2)),
            (Wall(2, 1), ScalarMode.generic_q(3)),
            (Wall(2, 1), ScalarMode.rational_qr(2, 3)),
            (Wall(1, 2), ScalarMode.rational_qr(Fraction(1, 2), 5)),
            (Wall(3, 0), ScalarMode.rational_qr(2, 3)),
            (Wall(0, 3), ScalarMode.generic_q(1)),
        ],
        ids=lambda value: str(value) if isinstance(value, Wall) else value.label,
    )
    def test_dimension_is_factorial(self, wall: Wall, mode: ScalarMode) -> None:
        system = complete(Presentation.build(wall, mode))
        assert system.dimension == wall.dimension
        assert system.normal_words()[0] == EMPTY_WORD

    @pytest.mark.slow
    def test_two_two(self, qr23: ScalarMode) -> None:
        assert complete(Presentation.build(Wall(2, 2), qr23)).dimension == 24

    def test_completed_system_is_confluent(self, h21) -> None:  # type: ignore[no-untyped-def]
        assert h21.is_confluent()
        assert h21.unresolved() == []
        for lead in h21.rules:
            assert not h21.is_normal(lead)

    def test_normal_words_are_sorted(self, h21) -> None:  # type: ignore[no-untyped-def]
        words = h21.normal_words()
        assert list(words) == sorted(words, key=word_key)
        assert all(h21.is_normal(w) for w in words)

    def test_budget(self, qr23: ScalarMode) -> None:
        with pytest.raises(CompletionBudgetExceededError):
            complete(Presentation.build(Wall(2, 1), qr23), Limits(completion_budget=1))

    def test_size_cap(self, qr23: ScalarMode) -> None:
        with pytest.raises(SizeLimitExceededError):
            complete(Presentation.build(Wall(3, 3), qr23))


class TestQElement:
    def test_quadratic_relation(self, h21) -> None:  # type: ignore[no-untyped-def]
        mode = h21.presentation.mode
        s = q_s(h21, 1)
        assert s * s == QElement.one(h21) + s.scale(mode.q_diff)
        assert s * q_s_inverse(h21, 1) == QElement.one(h21)

    def test_turnback_square(self, h21) -> None:  # type: ignore[no-untyped-def]
        e = q_e(h21)
        assert e * e == e.scale(h21.presentation.mode.delta)

    def test_turnback_transposition_turnback(self, h21) -> None:  # type: ignore[no-untyped-def]
        e = q_e(h21)
        assert e * q_s(h21, 1) * e == e.scale(h21.presentation.mode.rho)

    def test_left_transposition_uses_inverses(self, h21) -> None:  # type: ignore[no-untyped-def]
        assert q_transposition(h21, 1, 2) == q_s_inverse(h21, 1)

    def test_invalid_indices(self, h21) -> None:  # type: ignore[no-untyped-def]
        with pytest.raises(CrossesWallError):
            q_transposition(h21, 2, 3)
        with pytest.raises(CrossesWallError):
            q_turnback(h21, 3, 3)


class TestJucysMurphy:
    def test_closed_forms(self, h21) -> None:  # type: ignore[no-untyped-def]
        family = q_jm_family(h21)
        assert not family[1]
        assert family[2] == q_s_inverse(h21, 1)
        for k in range(1, 4):
            assert family[k] == closed_form_jm(h21, k)

    def test_no_left_strands(self, qr23: ScalarMode) -> None:
        system = complete(Presentation.build(Wall(0, 2), qr23))
        family = q_jm_family(system)
        assert family[1] == QElement.scalar(system, qr23.rho * qr23.delta)

    def test_perturbed_family_fails_closed_form(self, h21) -> None:  # type: ignore[no-untyped-def]
        family = q_jm_family(h21)
        with pytest.raises(ClosedFormMismatchError):
            check_closed_forms(family.replace(2, family[2] + 1))

    def test_power_sum_zero(self, h21) -> None:  # type: ignore[no-untyped-def]
        assert q_power_sum(q_jm_family(h21), 0) == QElement.scalar(h21, 1)


class TestVerification:
    def test_relations(self, h21) -> None:  # type: ignore[no-untyped-def]
        assert verify_q_relations(h21).passed

    def test_relations_generic(self, h21_generic) -> None:  # type: ignore[no-untyped-def]
        assert verify_q_relations(h21_generic).passed

    def test_perturbed_relations_fail(self, h21) -> None:  # type: ignore[no-untyped-def]
        family = q_jm_family(h21)
        report = verify_q_relations(h21, family.replace(3, family[3] + 1))
        assert not report.passed

    def test_power_sums_central(self, h21) -> None:  # type: ignore[no-untyped-def]
        report = q_supersym_central_check(h21, 3)
        assert report.passed
        assert len(report.checks) == 4

    def test_classical_limit(self, h21_generic) -> None:  # type: ignore[no-untyped-def]
        report = classical_limit_check(h21_generic)
        assert report.passed
        assert report.n == 2
        assert report.basis_rank == 6
        assert report.jm_matches == (True, True, True)

    def test_classical_limit_three(self) -> None:
        system = complete(Presentation.build(Wall(2, 1), ScalarMode.generic_q(3)))
        report = classical_limit_check(system, Limits(max_word_length=5))
        assert report.passed
        assert report.n == 3

    def test_classical_limit_needs_generic_q(self, h21) -> None:  # type: ignore[no-untyped-def]
        with pytest.raises(InvalidParameterError):
            classical_limit_check(h21)

    def test_center_two_one(self, h21_generic) -> None:  # type: ignore[no-untyped-def]
        report = q_center_dimension(h21_generic)
        assert report.dimension == 3
        assert report.in_center
        assert report.polys[0] == "1"

    @pytest.mark.slow
    def test_center_two_two(self) -> None:
        system = complete(Presentation.build(Wall(2, 2), ScalarMode.generic_q(5)))
        assert q_center_dimension(system).dimension == 6

    def test_random_seeds(self) -> None:
        report = check_at_seeds(Wall(2, 1), count=3, seed=0)
        assert report.passed
        assert len(report.points) == 3
