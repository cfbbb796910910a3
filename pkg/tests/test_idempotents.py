"""Tests for the Gelfand-Zetlin subalgebra and path idempotents."""

import logging
from fractions import Fraction

import pytest

from wbrauer.algebra import AlgebraElement
from wbrauer.center import content_steps, gz_basis_count, gz_dimension, idempotent, verify_idempotents
from wbrauer.common.config import Limits
from wbrauer.common.exceptions import SizeLimitExceededError, ZeroDenominatorError
from wbrauer.common.types import Wall
from wbrauer.diagrams import E
from wbrauer.scalars import ScalarMode
from wbrauer.weights import Weight, all_paths, paths_to, transpose_wall


def test_content_steps_one_one() -> None:
    assert content_steps(Wall(1, 1)) == (((0, 0),), ((0, 0), (0, 1)))


def test_content_steps_two_one() -> None:
    assert content_steps(Wall(2, 1))[2] == ((-1, 0), (1, 0), (0, 1))


def test_one_one_idempotents_by_hand() -> None:
    wall, mode = Wall(1, 1), ScalarMode.rational(3)
    e = AlgebraElement.generator(wall, mode, E(1, 2))
    (through_arc,) = paths_to(Weight(wall))
    assert idempotent(through_arc, mode) == e.scale(Fraction(1, 3))
    (no_arc,) = paths_to(Weight(wall, (1,), (1,)))
    assert idempotent(no_arc, mode) == AlgebraElement.one(wall, mode) - e.scale(Fraction(1, 3))


@pytest.mark.parametrize(
    ("wall", "mode"),
    [
        (Wall(1, 1), ScalarMode.rational(3)),
        (Wall(2, 1), ScalarMode.generic_delta()),
        (Wall(1, 2), ScalarMode.rational(Fraction(-1, 2))),
        (Wall(2, 1), ScalarMode.rational(5)),
        (Wall(2, 2), ScalarMode.rational(6)),
        (Wall(2, 2), ScalarMode.rational(Fraction(7, 3))),
        (Wall(3, 0), ScalarMode.rational(1)),
        (Wall(1, 2), ScalarMode.rational(0)),
        (Wall(1, 3), ScalarMode.rational(0)),
        (Wall(3, 1), ScalarMode.rational(0)),
    ],
    ids=lambda value: str(value) if isinstance(value, Wall) else value.label,
)
def test_idempotents_verify(wall: Wall, mode: ScalarMode) -> None:
    report = verify_idempotents(wall, mode)
    assert report.passed
    assert report.path_count == gz_basis_count(wall)
    assert report.to_dict()["passed"] is True


def test_colliding_steps_raise() -> None:
    with pytest.raises(ZeroDenominatorError):
        verify_idempotents(Wall(1, 1), ScalarMode.rational(0))


def test_integral_loop_value_collides(wall22: Wall) -> None:
    with pytest.raises(ZeroDenominatorError):
        verify_idempotents(wall22, ScalarMode.rational(1))


def test_size_cap(generic: ScalarMode) -> None:
    with pytest.raises(SizeLimitExceededError):
        verify_idempotents(Wall(2, 2), generic, Limits(size_cap=3))


class TestGelfandZetlin:
    def test_generic_two_one(self, wall21: Wall, generic: ScalarMode) -> None:
        assert gz_dimension(wall21, generic) == gz_basis_count(wall21) == 4

    def test_rational_two_two(self, wall22: Wall, seven_thirds: ScalarMode) -> None:
        assert gz_dimension(wall22, seven_thirds) == gz_basis_count(wall22) == 10

    def test_warns_when_not_semisimple(self, caplog: pytest.LogCaptureFixture) -> None:
        with caplog.at_level(logging.WARNING, logger="wbrauer.center.idempotents"):
            assert gz_dimension(Wall(1, 1), ScalarMode.rational(0)) == 2
        assert "not semisimple" in caplog.text

    def test_short_left_side_at_zero(self) -> None:
        wall, mode = Wall(1, 2), ScalarMode.rational(0)
        assert gz_dimension(wall, mode) == gz_basis_count(wall) == 4


def test_short_left_side_uses_transposed_labels() -> None:
    report = verify_idempotents(Wall(1, 2), ScalarMode.rational(0))
    labels = {check.path for check in report.eigen_relations}
    assert labels == {str(transpose_wall(path)) for path in all_paths(Wall(2, 1))}
