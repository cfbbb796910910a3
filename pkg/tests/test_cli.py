"""Tests for the ``wbr`` command line and its report builders."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from wbrauer import report as report_module
from wbrauer.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main
from wbrauer.common.exceptions import InvalidParameterError, NotCentralError
from wbrauer.common.serialization import SCHEMA
from wbrauer.common.types import Wall
from wbrauer.report import Report, dims_report, render_text, resolve_mode, verify_report
from wbrauer.scalars import ModeKind, ScalarMode
from wbrauer.weights import Weight, dot_variant


def run_json(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, dict]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out else {}


class TestCommands:
    def test_center_generic(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, data = run_json(capsys, "center", "--r", "2", "--s", "2", "--delta", "generic")
        assert code == EXIT_OK
        assert data["schema"] == SCHEMA
        assert data["dimension"] == 6
        assert data["mode"] == "generic-delta"
        assert data["wall"] == {"r": 2, "s": 2}
        assert data["supersym"]["spans_center"] is True
        assert data["passed"] is True

    def test_verify_rational(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, data = run_json(capsys, "verify", "--r", "2", "--s", "2", "--delta", "7/3")
        assert code == EXIT_OK
        assert data["relations"]["passed"] is True
        assert data["idempotents"]["passed"] is True
        assert data["annihilator"] is True

    def test_verify_non_semisimple_skips_idempotents(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, data = run_json(capsys, "verify", "--r", "2", "--s", "2", "--delta", "1")
        assert code == EXIT_OK
        assert data["idempotents"] is None
        assert data["annihilator"] is None

    def test_blocks(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, data = run_json(capsys, "blocks", "--r", "2", "--s", "1", "--delta=-1")
        assert code == EXIT_OK
        assert data["blocks"] == [["((2),(1))", "((1),∅)"], ["((1,1),(1))"]]
        assert data["matches_characters"] is True
        assert data["semisimple"] is False

    def test_dims(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, data = run_json(capsys, "dims", "--r", "2", "--s", "2", "--delta", "0")
        assert code == EXIT_OK
        assert data["filtration"] == [4, 16, 4]
        assert data["diagram_count"] == 24
        assert data["weights"] == 6
        assert data["simple_weights"] == 5

    def test_characters(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, data = run_json(capsys, "characters", "--r", "2", "--s", "1", "--delta", "3")
        assert code == EXIT_OK
        first = data["weights"][0]
        assert first["label"] == "((2),(1))"
        assert first["contents"] == ["0", "1", "3"]
        assert first["characters"][0] == "4"

    def test_idempotents(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, data = run_json(capsys, "idempotents", "--r", "1", "--s", "1", "--delta", "3")
        assert code == EXIT_OK
        assert data["idempotents"]["path_count"] == 2

    @pytest.mark.parametrize("command", ["verify", "idempotents"])
    @pytest.mark.parametrize("s", ["2", "3"])
    def test_short_left_side_at_zero(self, command: str, s: str, capsys: pytest.CaptureFixture[str]) -> None:
        code, data = run_json(capsys, command, "--r", "1", "--s", s, "--delta", "0")
        assert code == EXIT_OK
        assert data["idempotents"]["passed"] is True

    def test_qverify_generic(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, data = run_json(capsys, "qverify", "--r", "1", "--s", "1", "--N", "2")
        assert code == EXIT_OK
        assert data["dimension"] == 2
        assert data["mode"] == "generic-q:N=2"
        assert data["classical_limit"]["passed"] is True

    def test_qverify_rational(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, data = run_json(capsys, "qverify", "--r", "2", "--s", "1", "--q", "2", "--rho", "3")
        assert code == EXIT_OK
        assert data["dimension"] == 6
        assert data["classical_limit"] is None
        assert len(data["normal_words"]) == 6


class TestExitCodes:
    @pytest.mark.parametrize(
        "argv",
        [
            ["center", "--r", "2"],
            ["bogus", "--r", "1", "--s", "1", "--delta", "1"],
            ["dims", "--r", "-1", "--s", "1", "--delta", "1"],
            ["dims", "--r", "1", "--s", "1", "--delta", "abc"],
            ["dims", "--r", "1", "--s", "1"],
            ["dims", "--r", "1", "--s", "1", "--q", "2", "--rho", "3"],
            ["qverify", "--r", "1", "--s", "1", "--delta", "2"],
            ["center", "--r", "2", "--s", "2", "--delta", "1", "--size-cap", "3"],
            ["dims", "--r", "1", "--s", "1", "--delta", "1", "--size-cap", "0"],
        ],
    )
    def test_usage_errors(self, argv: list[str], capsys: pytest.CaptureFixture[str]) -> None:
        assert main(argv) == EXIT_USAGE
        assert capsys.readouterr().out == ""

    def test_help(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["--help"]) == EXIT_OK
        assert "wbr" in capsys.readouterr().out

    def test_size_cap_from_env(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("WBR_SIZE_CAP", "3")
        assert main(["dims", "--r", "2", "--s", "2", "--delta", "1"]) == EXIT_USAGE

    def test_failed_verification(self, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
        def failing(wall: Wall, mode: ScalarMode, limits: object) -> Report:
            return Report("dims", wall, mode.label, {}, ("filtration",))

        monkeypatch.setitem(report_module.BUILDERS, "dims", failing)
        assert main(["dims", "--r", "1", "--s", "1", "--delta", "1"]) == EXIT_FAILED
        captured = capsys.readouterr()
        assert json.loads(captured.out)["failures"] == ["filtration"]
        assert "dims failed: filtration" in captured.err

    def test_blocks_disagree_with_characters(
        self, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
    ) -> None:
        def singletons(wall: Wall, mode: ScalarMode, max_degree: int | None = None) -> list[list[Weight]]:
            return [[weight] for weight in dot_variant(wall, mode)]

        monkeypatch.setattr(report_module, "character_classes", singletons)
        assert main(["blocks", "--r", "2", "--s", "1", "--delta=-1"]) == EXIT_FAILED
        captured = capsys.readouterr()
        data = json.loads(captured.out)
        assert data["matches_characters"] is False
        assert data["failures"] == ["block-characters"]
        assert "blocks failed" in captured.err

    def test_consistency_error(self, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
        def broken(wall: Wall, mode: ScalarMode, limits: object) -> Report:
            raise NotCentralError("not central")

        monkeypatch.setitem(report_module.BUILDERS, "center", broken)
        assert main(["center", "--r", "1", "--s", "1", "--delta", "1"]) == EXIT_FAILED
        assert "NotCentralError" in capsys.readouterr().err


class TestOutput:
    ARGV = ["center", "--r", "2", "--s", "1", "--delta", "generic"]

    def test_deterministic(self, capsys: pytest.CaptureFixture[str]) -> None:
        main(self.ARGV)
        first = capsys.readouterr().out
        main(self.ARGV)
        assert capsys.readouterr().out == first

    def test_output_file(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        target = tmp_path / "center.json"
        assert main([*self.ARGV, "--output", str(target)]) == EXIT_OK
        assert capsys.readouterr().out == ""
        assert json.loads(target.read_text(encoding="utf-8"))["dimension"] == 3

    def test_text_format(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert main([*self.ARGV, "--format", "text"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "dimension: 3" in out
        assert "passed: yes" in out


class TestResolveMode:
    def test_inference(self) -> None:
        assert resolve_mode(n=3).label == "generic-q:N=3"
        assert resolve_mode(q="2", rho="1/3").kind is ModeKind.RATIONAL_QR
        assert resolve_mode(delta="generic").kind is ModeKind.GENERIC_DELTA
        assert resolve_mode(delta="7/3").delta == Fraction(7, 3)

    def test_explicit_mode(self) -> None:
        assert resolve_mode("rational", delta="-2").delta == -2
        assert resolve_mode("generic-delta").kind is ModeKind.GENERIC_DELTA

    @pytest.mark.parametrize(
        "kwargs",
        [
            {},
            {"mode": "rational"},
            {"mode": "rational", "delta": "generic"},
            {"mode": "generic-delta", "delta": "2"},
            {"mode": "generic-q"},
            {"mode": "rational-qr", "q": "2"},
            {"mode": "bogus", "delta": "1"},
        ],
    )
    def test_incomplete_flags(self, kwargs: dict) -> None:
        with pytest.raises(InvalidParameterError):
            resolve_mode(**kwargs)


class TestReports:
    def test_dims_passes(self) -> None:
        result = dims_report(Wall(3, 1), ScalarMode.rational(2))
        assert result.passed
        assert [c["dimension"] for c in result.data["cell_dimensions"]] == [1, 2, 1, 3, 3]

    def test_verify_rejects_q_modes(self) -> None:
        with pytest.raises(InvalidParameterError):
            verify_report(Wall(1, 1), ScalarMode.generic_q(2))

    def test_render_text(self) -> None:
        text = render_text({"b": [1, 2], "a": {"c": True, "d": None}, "e": [{"f": "x"}]})
        assert text.splitlines() == ["a:", "  c: yes", "  d: null", "b: [1, 2]", "e:", "  -", "    f: x"]
