"""Tests for exact fraction-free linear algebra over Q and Q(d)."""

from fractions import Fraction

import pytest

from wbrauer.common.exceptions import MixedModesError, NotInSpanError, NotSquareError
from wbrauer.scalars import (
    DELTA,
    Q,
    LinearSpan,
    determinant,
    normalize_vector,
    nullspace,
    rank,
    solve,
    sparse_nullspace,
)


class TestDeterminant:
    def test_rational(self) -> None:
        assert determinant([[1, 2], [3, 4]]) == Fraction(-2)

    def test_needs_row_swap(self) -> None:
        assert determinant([[0, 1], [1, 0]]) == Fraction(-1)

    def test_singular(self) -> None:
        assert determinant([[1, 2], [2, 4]]) == 0

    def test_empty_matrix(self) -> None:
        assert determinant([]) == 1

    def test_symbolic(self) -> None:
        assert determinant([[DELTA, 1], [1, DELTA]]) == DELTA**2 - 1

    def test_not_square(self) -> None:
        with pytest.raises(NotSquareError):
            determinant([[1, 2, 3], [4, 5, 6]])

    def test_mixed_fields(self) -> None:
        with pytest.raises(MixedModesError):
            determinant([[DELTA, 1], [1, Q]])


class TestNullspace:
    def test_rank_plus_nullity(self) -> None:
        matrix = [[1, 2, 3, 4], [2, 4, 6, 8], [1, 0, 1, 0]]
        basis = nullspace(matrix)
        assert rank(matrix) == 2
        assert len(basis) == 2
        for vector in basis:
            assert all(sum(a * x for a, x in zip(row, vector)) == 0 for row in matrix)

    def test_vectors_are_primitive_integers(self) -> None:
        (vector,) = nullspace([[2, 3]])
        assert vector == [Fraction(3), Fraction(-2)]

    def test_symbolic_vectors_are_polynomial(self) -> None:
        (vector,) = nullspace([[DELTA, 1]])
        assert vector == [DELTA / DELTA, -DELTA] or vector == [-(DELTA / DELTA), DELTA]
        assert all(v.denom == 1 for v in vector)

    def test_empty_rows_need_column_count(self) -> None:
        assert len(nullspace([], ncols=3)) == 3


class TestSolve:
    def test_unique_solution(self) -> None:
        assert solve([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]

    def test_symbolic(self) -> None:
        x = solve([[DELTA, 0], [0, 1]], [DELTA**2, 2])
        assert x == [DELTA, 2 * DELTA / DELTA]

    def test_inconsistent(self) -> None:
        with pytest.raises(NotInSpanError):
            solve([[1], [1]], [1, 2])

    def test_dependent_columns(self) -> None:
        with pytest.raises(NotInSpanError):
            solve([[1, 2], [2, 4]], [1, 2])


class TestNormalizeVector:
    def test_clears_denominators_and_sign(self) -> None:
        assert normalize_vector([Fraction(-1, 2), Fraction(1, 3)]) == [Fraction(3), Fraction(-2)]

    def test_zero_vector(self) -> None:
        assert normalize_vector([Fraction(0), Fraction(0)]) == [0, 0]

    def test_polynomial_content_removed(self) -> None:
        one = DELTA / DELTA
        assert normalize_vector([2 * DELTA, 4 * one]) == [DELTA, 2 * one]


class TestLinearSpan:
    def test_add_reports_growth(self) -> None:
        span: LinearSpan[str] = LinearSpan()
        assert span.add({"a": Fraction(1), "b": Fraction(2)})
        assert not span.add({"a": Fraction(2), "b": Fraction(4)})
        assert span.add({"b": Fraction(1)})
        assert span.rank == 2
        assert span.contains({"a": Fraction(5)})

    def test_reduce_returns_residue(self) -> None:
        span: LinearSpan[int] = LinearSpan()
        span.add({0: Fraction(1), 1: Fraction(1)})
        assert span.reduce({0: Fraction(1), 2: Fraction(3)}) == {1: Fraction(-1), 2: Fraction(3)}

    def test_zero_vector_is_contained(self) -> None:
        assert LinearSpan().contains({})


def test_sparse_nullspace_matches_dense() -> None:
    matrix = [[1, 2, 3, 4], [2, 4, 6, 8], [1, 0, 1, 0]]
    sparse = [{j: Fraction(v) for j, v in enumerate(row) if v} for row in matrix]
    found = sparse_nullspace(sparse, 4, Fraction(1))
    assert len(found) == len(nullspace(matrix))
    for vector in found:
        assert all(sum(a * x for a, x in zip(row, vector)) == 0 for row in matrix)
