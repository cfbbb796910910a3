"""Tests for computation limits and the shared Wall type."""

import logging

import pytest

from wbrauer.common.config import DEFAULT_SIZE_CAP, SIZE_CAP_ENV, Limits, get_limits
from wbrauer.common.exceptions import InvalidParameterError, SizeLimitExceededError
from wbrauer.common.types import Wall


class TestLimitsFromEnv:
    def test_defaults_without_env(self) -> None:
        limits = Limits.from_env({})
        assert limits.size_cap == DEFAULT_SIZE_CAP
        assert limits.quantum_size_cap == 5
        assert limits.completion_budget == 20_000

    def test_reads_size_cap(self) -> None:
        assert Limits.from_env({SIZE_CAP_ENV: "4"}).size_cap == 4

    @pytest.mark.parametrize("raw", ["abc", "-3", "2.5", "0"])
    def test_invalid_value_warns_and_falls_back(self, raw: str, caplog: pytest.LogCaptureFixture) -> None:
        with caplog.at_level(logging.WARNING, logger="wbrauer.config"):
            limits = Limits.from_env({SIZE_CAP_ENV: raw})
        assert limits.size_cap == DEFAULT_SIZE_CAP
        assert SIZE_CAP_ENV in caplog.text

    def test_blank_value_is_ignored(self) -> None:
        assert Limits.from_env({SIZE_CAP_ENV: "  "}).size_cap == DEFAULT_SIZE_CAP

    def test_get_limits_reads_process_env(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv(SIZE_CAP_ENV, "3")
        assert get_limits().size_cap == 3


class TestLimitChecks:
    def test_with_size_cap(self) -> None:
        limits = Limits()
        assert limits.with_size_cap(None) is limits
        assert limits.with_size_cap(2).size_cap == 2

    def test_check_wall(self) -> None:
        Limits(size_cap=4).check_wall(Wall(2, 2))
        with pytest.raises(SizeLimitExceededError) as info:
            Limits(size_cap=4).check_wall(Wall(3, 2))
        assert info.value.requested == 5
        assert info.value.cap == 4

    def test_quantum_cap_is_the_smaller_cap(self) -> None:
        with pytest.raises(SizeLimitExceededError):
            Limits().check_quantum_wall(Wall(3, 3))
        with pytest.raises(SizeLimitExceededError):
            Limits(size_cap=3).check_quantum_wall(Wall(2, 2))

    def test_word_length_default(self) -> None:
        assert Limits().word_length(Wall(2, 1)) == 5
        assert Limits(max_word_length=2).word_length(Wall(2, 1)) == 2


class TestWall:
    @pytest.mark.parametrize("text", ["2,1", "(2, 1)", "2x1"])
    def test_from_string(self, text: str) -> None:
        assert Wall.from_string(text) == Wall(2, 1)

    def test_from_string_rejects_garbage(self) -> None:
        with pytest.raises(InvalidParameterError):
            Wall.from_string("two,one")

    def test_negative_sizes_rejected(self) -> None:
        with pytest.raises(InvalidParameterError):
            Wall(-1, 2)

    def test_sides(self) -> None:
        wall = Wall(2, 2)
        assert wall.dimension == 24
        assert list(wall.left) == [1, 2]
        assert list(wall.right) == [3, 4]
        assert wall.side(3) == "right"
        assert wall.same_side(1, 2)
        assert not wall.same_side(2, 3)
        assert wall.transposed() == Wall(2, 2)
        assert Wall(3, 1).transposed() == Wall(1, 3)
