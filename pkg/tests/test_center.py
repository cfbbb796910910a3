"""Tests for supersymmetric polynomials, the center and central characters."""

import logging
from fractions import Fraction

import pytest

from wbrauer.algebra import AlgebraElement, annihilator_check, is_central, jm_family, power_sum_jm
from wbrauer.center import (
    SupersymPoly,
    central_character,
    character_classes,
    compute_center,
    degree_ordered_candidates,
    evaluation_matrix,
    expand_in_basis,
    select_spanning_polys,
    supersym_rank,
)
from wbrauer.common.exceptions import InvalidParameterError, NotInSpanError
from wbrauer.common.types import Wall
from wbrauer.diagrams import S
from wbrauer.scalars import DELTA, ScalarMode, determinant
from wbrauer.weights import Weight, blocks, dot_variant


class TestSupersymPoly:
    def test_candidate_order(self) -> None:
        labels = [str(p) for p in degree_ordered_candidates(3)]
        assert labels == ["1", "p1", "p2", "p1*p1", "p3", "p2*p1", "p1*p1*p1"]

    def test_degrees(self) -> None:
        assert SupersymPoly.unit().degree == 0
        assert SupersymPoly.elementary(3).degree == 3
        assert SupersymPoly.monomial((2, 1)).degree == 3

    def test_power_sum_zero_is_r_minus_s(self) -> None:
        values = [Fraction(1), Fraction(2), Fraction(3)]
        assert SupersymPoly.power_sum(0).evaluate_at(values, 1) == -1

    def test_elementary_without_y_variables(self) -> None:
        values = [Fraction(1), Fraction(2), Fraction(3)]
        assert SupersymPoly.elementary(2).evaluate_at(values, 3) == 11
        assert SupersymPoly.elementary(3).evaluate_at(values, 3) == 6

    def test_elementary_is_generating_function_coefficient(self) -> None:
        # (1 + 2z) / (1 - 3z) = 1 + 5z + 15z^2 + ...
        values = [Fraction(2), Fraction(3)]
        assert SupersymPoly.elementary(1).evaluate_at(values, 1) == 5
        assert SupersymPoly.elementary(2).evaluate_at(values, 1) == 15

    def test_cancelling_pair_drops_out(self) -> None:
        poly = SupersymPoly.elementary(2) + SupersymPoly.power_sum(3)
        with_pair = [Fraction(2), Fraction(5), Fraction(-5), Fraction(3)]
        without = [Fraction(2), Fraction(3)]
        assert poly.evaluate_at(with_pair, 2) == poly.evaluate_at(without, 1)

    def test_arithmetic_labels(self) -> None:
        p1, p2 = SupersymPoly.power_sum(1), SupersymPoly.power_sum(2)
        assert str(p1 * p2) == "p1*p2"
        assert str(p1 - p2) == "p1-p2"
        assert (p1 * p1 - p2).scale(Fraction(1, 2)).expr == SupersymPoly.elementary(2).expr

    def test_degree_out_of_range(self) -> None:
        with pytest.raises(InvalidParameterError):
            SupersymPoly.power_sum(25)


class TestCenter:
    def test_two_two_generic(self, wall22: Wall, generic: ScalarMode) -> None:
        basis = compute_center(wall22, generic)
        assert basis.dimension == 6
        assert basis.provenance == ("nullspace",) * 6
        assert all(is_central(element) for element in basis.elements)

    def test_one_one_is_commutative(self) -> None:
        assert compute_center(Wall(1, 1), ScalarMode.rational(0)).dimension == 2

    def test_symmetric_group_center(self) -> None:
        # class sums of S_3
        assert compute_center(Wall(3, 0), ScalarMode.rational(2)).dimension == 3

    def test_class_basis_is_central(self, b22_basis: list[AlgebraElement]) -> None:
        assert all(is_central(element) for element in b22_basis)

    def test_class_basis_spans_computed_center(self, wall22: Wall, generic: ScalarMode, b22_basis: list[AlgebraElement]) -> None:
        for element in compute_center(wall22, generic).elements:
            assert len(expand_in_basis(element, b22_basis)) == 6


class TestExpansions:
    @pytest.fixture
    def family(self, wall22: Wall, generic: ScalarMode):  # type: ignore[no-untyped-def]
        return jm_family(wall22, generic)

    @pytest.mark.parametrize(
        ("poly", "expected"),
        [
            (SupersymPoly.power_sum(1), [2 * DELTA, -1, 0, 0, 0, 0]),
            (SupersymPoly.elementary(2), [3 * DELTA**2 + 1, -2 * DELTA, -1, 0, 0, 0]),
            (SupersymPoly.power_sum(2), [-2 * DELTA**2, DELTA, 1, -1, 0, 0]),
            (SupersymPoly.elementary(3), [4 * DELTA**3 + 4 * DELTA, -3 * DELTA**2 - 1, -3 * DELTA, 0, 1, 0]),
            (SupersymPoly.power_sum(3), [2 * DELTA**3 + 3 * DELTA, -(DELTA**2) - 2, -2 * DELTA, DELTA, 1, 1]),
        ],
        ids=["p1", "e2", "p2", "e3", "p3"],
    )
    def test_expansion(self, family, b22_basis: list[AlgebraElement], poly: SupersymPoly, expected: list) -> None:  # type: ignore[no-untyped-def]
        assert expand_in_basis(poly.evaluate(family), b22_basis) == expected

    def test_six_polys_form_a_basis(self, family, b22_basis: list[AlgebraElement]) -> None:  # type: ignore[no-untyped-def]
        polys = [
            SupersymPoly.unit(),
            SupersymPoly.power_sum(1),
            SupersymPoly.elementary(2),
            SupersymPoly.power_sum(2),
            SupersymPoly.elementary(3),
            SupersymPoly.power_sum(3),
        ]
        matrix = [expand_in_basis(p.evaluate(family), b22_basis) for p in polys]
        assert determinant(matrix) == -1

    def test_non_central_element(self, wall22: Wall, generic: ScalarMode, b22_basis: list[AlgebraElement]) -> None:
        with pytest.raises(NotInSpanError):
            expand_in_basis(AlgebraElement.generator(wall22, generic, S(1)), b22_basis)

    def test_empty_basis(self, wall22: Wall, generic: ScalarMode) -> None:
        assert expand_in_basis(AlgebraElement.zero(wall22, generic), []) == []
        with pytest.raises(NotInSpanError):
            expand_in_basis(AlgebraElement.one(wall22, generic), [])


class TestCentralCharacters:
    def test_first_power_sum(self, wall21: Wall) -> None:
        weight = Weight(wall21, (2,), (1,))
        assert central_character(weight, SupersymPoly.power_sum(1), 3) == 4

    def test_generic_first_power_sums(self, wall22: Wall) -> None:
        (row,) = evaluation_matrix([SupersymPoly.power_sum(1)], dot_variant(wall22, DELTA), DELTA)
        assert row == [2 * DELTA + 2, 2 * DELTA, 2 * DELTA, 2 * DELTA - 2, DELTA, 0]

    def test_spanning_polys_generic(self, wall22: Wall) -> None:
        chosen = select_spanning_polys(wall22, DELTA)
        assert len(chosen) == 6
        assert str(chosen[0]) == "1"
        assert determinant(evaluation_matrix(chosen, dot_variant(wall22, DELTA), DELTA)) != 0

    def test_spanning_polys_non_semisimple(self, wall22: Wall, caplog: pytest.LogCaptureFixture) -> None:
        with caplog.at_level(logging.WARNING, logger="wbrauer.center.center"):
            chosen = select_spanning_polys(wall22, 0)
        assert len(chosen) == 3
        assert "not semisimple" in caplog.text

    @pytest.mark.parametrize(("wall", "delta"), [(Wall(2, 2), 0), (Wall(2, 1), -1), (Wall(2, 2), 1), (Wall(3, 1), -2)], ids=str)
    def test_character_classes_are_blocks(self, wall: Wall, delta: int) -> None:
        assert character_classes(wall, delta) == blocks(wall, delta)

    def test_second_power_sum_annihilator(self, wall22: Wall) -> None:
        mode = ScalarMode.rational(6)
        p2 = SupersymPoly.power_sum(2)
        scalars = [central_character(w, p2, 6) for w in dot_variant(wall22, 6)]
        assert annihilator_check(power_sum_jm(jm_family(wall22, mode), 2), scalars)

    def test_generic_classes_are_singletons(self, wall22: Wall) -> None:
        assert all(len(c) == 1 for c in character_classes(wall22, DELTA))


class TestSupersymRank:
    def test_spans_generic_center(self, wall22: Wall, generic: ScalarMode) -> None:
        report = supersym_rank(wall22, generic)
        assert report.in_center
        assert report.spans_center
        assert report.rank == 6
        assert report.polys[0] == "1"

    def test_reports_partial_rank(self, wall22: Wall, generic: ScalarMode) -> None:
        report = supersym_rank(wall22, generic, max_degree=1)
        assert report.rank == 2
        assert not report.spans_center
        assert report.to_dict()["spans_center"] is False

    def test_power_sums_central_when_not_semisimple(self, wall22: Wall) -> None:
        report = supersym_rank(wall22, ScalarMode.rational(1), max_degree=6)
        assert report.in_center
        assert report.degree_bound == 6
