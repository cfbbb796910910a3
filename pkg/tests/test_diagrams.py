"""Tests for walled Brauer diagrams, composition and enumeration."""

import math

import pytest

from wbrauer.common.config import Limits
from wbrauer.common.exceptions import (
    CrossesWallError,
    IndexOutOfRangeError,
    InvalidParameterError,
    SizeLimitExceededError,
    WallMismatchError,
)
from wbrauer.common.types import Wall
from wbrauer.diagrams import (
    E,
    S,
    Tau,
    Transposition,
    WalledDiagram,
    algebra_generators,
    compose,
    enumerate_diagrams,
    expected_filtration,
    generator,
    ideal_filtration,
    permutation_to_walled,
    walled_to_permutation,
    word_to_diagram,
)

WALLS = [Wall(0, 0), Wall(1, 0), Wall(0, 2), Wall(1, 1), Wall(2, 1), Wall(1, 2), Wall(2, 2), Wall(3, 1)]


class TestWalledDiagram:
    def test_identity_has_no_arcs(self) -> None:
        identity = WalledDiagram.identity(Wall(2, 2))
        assert identity.is_identity
        assert identity.top_arcs() == []
        assert identity.bottom_arcs() == []

    def test_rejects_vertical_strand_across_wall(self) -> None:
        with pytest.raises(InvalidParameterError):
            WalledDiagram.from_pairs(Wall(1, 1), [(1, 4), (2, 3)])

    def test_rejects_same_side_arc(self) -> None:
        with pytest.raises(InvalidParameterError):
            WalledDiagram.from_pairs(Wall(2, 0), [(1, 2), (3, 4)])

    def test_rejects_non_involution(self) -> None:
        with pytest.raises(InvalidParameterError):
            WalledDiagram(Wall(1, 0), (0, 1))

    @pytest.mark.parametrize("wall", [Wall(2, 1), Wall(1, 3), Wall(2, 2)], ids=str)
    def test_mirrored(self, wall: Wall) -> None:
        diagrams = enumerate_diagrams(wall)
        for d in diagrams:
            assert d.mirrored().wall == wall.transposed()
            assert d.mirrored().mirrored() == d
        for d1 in diagrams[:6]:
            for d2 in diagrams:
                product, loops = compose(d1, d2)
                assert compose(d1.mirrored(), d2.mirrored()) == (product.mirrored(), loops)

    def test_mirrored_generators(self) -> None:
        assert generator(Wall(2, 1), E(2, 3)).mirrored() == generator(Wall(1, 2), E(1, 2))
        assert generator(Wall(2, 1), S(1)).mirrored() == generator(Wall(1, 2), S(2))

    def test_from_pairs_and_dict(self) -> None:
        e = WalledDiagram.from_pairs(Wall(1, 1), [(1, 2), (3, 4)])
        assert e == generator(Wall(1, 1), E(1, 2))
        assert WalledDiagram.from_dict(e.to_dict()) == e
        assert e.to_dict() == {"r": 1, "s": 1, "pairing": [2, 1, 4, 3]}

    def test_flip_is_an_involution(self) -> None:
        for diagram in enumerate_diagrams(Wall(2, 1)):
            assert diagram.flip().flip() == diagram
            assert diagram.flip().top_arc_count == diagram.bottom_arc_count

    def test_str(self) -> None:
        assert str(generator(Wall(1, 1), E(1, 2))) == "{1-2 1'-2'}"


class TestCompose:
    def test_turnback_squares_to_one_loop(self) -> None:
        wall = Wall(2, 2)
        e = generator(wall, E(2, 3))
        product, loops = compose(e, e)
        assert product == e
        assert loops == 1

    def test_transposition_squares_to_identity(self) -> None:
        wall = Wall(3, 0)
        s = generator(wall, S(1))
        product, loops = compose(s, s)
        assert product.is_identity
        assert loops == 0

    def test_turnback_transposition_turnback(self) -> None:
        wall = Wall(2, 2)
        e = generator(wall, E(2, 3))
        s = generator(wall, S(1))
        middle, _ = compose(e, s)
        product, loops = compose(middle, e)
        assert product == e
        assert loops == 0

    def test_identity_is_neutral(self) -> None:
        wall = Wall(2, 1)
        identity = WalledDiagram.identity(wall)
        for diagram in enumerate_diagrams(wall):
            assert compose(identity, diagram) == (diagram, 0)
            assert compose(diagram, identity) == (diagram, 0)

    def test_associative(self) -> None:
        wall = Wall(1, 2)
        diagrams = enumerate_diagrams(wall)
        for a in diagrams:
            for b in diagrams:
                for c in diagrams:
                    ab, l1 = compose(a, b)
                    left, l2 = compose(ab, c)
                    bc, l3 = compose(b, c)
                    right, l4 = compose(a, bc)
                    assert left == right
                    assert l1 + l2 == l3 + l4

    def test_closed_under_composition(self) -> None:
        wall = Wall(2, 1)
        diagrams = set(enumerate_diagrams(wall))
        for a in diagrams:
            for b in diagrams:
                assert compose(a, b)[0] in diagrams

    def test_wall_mismatch(self) -> None:
        with pytest.raises(WallMismatchError):
            compose(WalledDiagram.identity(Wall(1, 1)), WalledDiagram.identity(Wall(2, 0)))


class TestGenerators:
    def test_generating_set(self) -> None:
        assert algebra_generators(Wall(2, 2)) == [S(1), S(3), E(2, 3)]
        assert algebra_generators(Wall(3, 0)) == [S(1), S(2)]

    @pytest.mark.parametrize(
        ("kind", "error"),
        [
            (S(2), CrossesWallError),
            (S(4), IndexOutOfRangeError),
            (E(1, 2), CrossesWallError),
            (E(3, 5), IndexOutOfRangeError),
            (Transposition(2, 3), CrossesWallError),
            (Transposition(1, 1), IndexOutOfRangeError),
            (Tau(3), IndexOutOfRangeError),
        ],
    )
    def test_invalid_indices(self, kind: object, error: type[Exception]) -> None:
        with pytest.raises(error):
            generator(Wall(2, 2), kind)  # type: ignore[arg-type]

    def test_tau_is_nested_arcs(self) -> None:
        wall = Wall(2, 2)
        assert generator(wall, Tau(0)).is_identity
        assert generator(wall, Tau(2)).top_arcs() == [(1, 4), (2, 3)]

    def test_word_to_diagram_counts_loops(self) -> None:
        wall = Wall(2, 2)
        diagram, loops = word_to_diagram(wall, [E(2, 3), E(2, 3), E(2, 3)])
        assert diagram == generator(wall, E(2, 3))
        assert loops == 2

    def test_transposition_as_word(self) -> None:
        wall = Wall(3, 0)
        diagram, loops = word_to_diagram(wall, [S(2), S(1), S(2)])
        assert diagram == generator(wall, Transposition(1, 3))
        assert loops == 0


class TestEnumeration:
    @pytest.mark.parametrize("wall", WALLS, ids=str)
    def test_count_is_factorial(self, wall: Wall) -> None:
        diagrams = enumerate_diagrams(wall)
        assert len(diagrams) == math.factorial(wall.n)
        assert len(set(diagrams)) == len(diagrams)
        assert diagrams == sorted(diagrams)

    @pytest.mark.parametrize("wall", WALLS, ids=str)
    def test_filtration_matches_closed_form(self, wall: Wall) -> None:
        filtration = ideal_filtration(wall)
        assert filtration == expected_filtration(wall)
        assert sum(filtration) == math.factorial(wall.n)

    def test_filtration_of_two_two(self) -> None:
        assert ideal_filtration(Wall(2, 2)) == [4, 16, 4]

    def test_permutation_bijection(self) -> None:
        wall = Wall(2, 2)
        for diagram in enumerate_diagrams(wall):
            assert permutation_to_walled(wall, walled_to_permutation(diagram)) == diagram

    def test_identity_permutation(self) -> None:
        wall = Wall(1, 1)
        assert permutation_to_walled(wall, (1, 2)).is_identity
        assert permutation_to_walled(wall, (2, 1)) == generator(wall, E(1, 2))

    def test_size_cap(self) -> None:
        with pytest.raises(SizeLimitExceededError):
            enumerate_diagrams(Wall(2, 2), Limits(size_cap=3))
