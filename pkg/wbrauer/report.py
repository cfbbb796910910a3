"""
Report builders behind the ``wbr`` subcommands.

Each builder takes a wall, a scalar mode and limits, runs the library
computations and returns a :class:`Report`. Reports serialize through
:func:`wbrauer.common.serialization.dump_report`, so identical inputs give
byte-identical JSON. The text rendering shows the same data.

Example:
    >>> report = center_report(Wall(2, 2), resolve_mode(delta="generic"))
    >>> report.data["dimension"]
    6
"""

from __future__ import annotations

import logging
import typing as t
from dataclasses import dataclass, field

from .algebra import annihilator_check, jm_family, power_sum_jm, verify_relation_suite
from .center import (
    SupersymPoly,
    central_character,
    character_classes,
    compute_center,
    gz_basis_count,
    supersym_rank,
    verify_idempotents,
)
from .common.config import Limits, get_limits
from .common.exceptions import InvalidParameterError
from .common.serialization import parse_rational, to_jsonable
from .common.types import Wall
from .diagrams import enumerate_diagrams, expected_filtration, ideal_filtration
from .quantum import (
    Presentation,
    check_at_seeds,
    classical_limit_check,
    complete,
    q_center_dimension,
    q_jm_family,
    q_supersym_central_check,
    verify_q_relations,
)
from .scalars import MIN_SPECIALIZATIONS, ModeKind, ScalarMode
from .weights import blocks, cell_dimension, contents, dot_variant, enumerate_weights, is_semisimple

logger = logging.getLogger(__name__)

GENERIC = "generic"

COMMANDS = ("dims", "center", "blocks", "idempotents", "verify", "qverify", "characters")


# =============================================================================
# Report
# =============================================================================


@dataclass(frozen=True, slots=True)
class Report:
    """
    The outcome of one subcommand.

    Attributes:
        command: Subcommand name.
        wall: The wall (r, s).
        mode: Label of the scalar mode.
        data: Subcommand-specific payload.
        failures: Names of the verifications that failed.
    """

    command: str
    wall: Wall
    mode: str
    data: dict[str, t.Any] = field(default_factory=dict)
    failures: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, t.Any]:
        return {
            **self.data,
            "command": self.command,
            "wall": self.wall.to_dict(),
            "mode": self.mode,
            "passed": self.passed,
            "failures": list(self.failures),
        }


def render_text(payload: t.Any, indent: int = 0) -> str:
    """Indented ``key: value`` rendering of JSON-ready data."""
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(payload, t.Mapping):
        for key in sorted(payload):
            value = payload[key]
            if _is_flat(value):
                lines.append(f"{pad}{key}: {_flat(value)}")
            else:
                lines.append(f"{pad}{key}:")
                lines.append(render_text(value, indent + 1))
    elif isinstance(payload, list):
        for item in payload:
            if _is_flat(item):
                lines.append(f"{pad}- {_flat(item)}")
            else:
                lines.append(f"{pad}-")
                lines.append(render_text(item, indent + 1))
    else:
        lines.append(f"{pad}{_flat(payload)}")
    return "\n".join(line for line in lines if line)


def _is_flat(value: t.Any) -> bool:
    if isinstance(value, list):
        return all(not isinstance(v, (list, dict)) for v in value)
    return not isinstance(value, dict)


def _flat(value: t.Any) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_flat(v) for v in value) + "]"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return "null" if value is None else str(value)


# =============================================================================
# Flags to scalar modes
# =============================================================================


def resolve_mode(
    mode: str | None = None,
    delta: str | None = None,
    q: str | None = None,
    rho: str | None = None,
    n: int | None = None,
) -> ScalarMode:
    """
    Build a ScalarMode from command-line style values.

    Without ``mode`` the regime is inferred: ``n`` selects generic-q, ``q``
    or ``rho`` select rational-qr, ``delta="generic"`` selects generic-delta
    and any other ``delta`` selects rational.

    Raises:
        InvalidParameterError: If the values do not determine a mode.
    """
    if mode is None:
        if n is not None:
            mode = ModeKind.GENERIC_Q.value
        elif q is not None or rho is not None:
            mode = ModeKind.RATIONAL_QR.value
        elif delta is not None and delta.strip() == GENERIC:
            mode = ModeKind.GENERIC_DELTA.value
        elif delta is not None:
            mode = ModeKind.RATIONAL.value
        else:
            raise InvalidParameterError("Pass --delta, --N or --q with --rho")
    try:
        kind = ModeKind(mode)
    except ValueError:
        raise InvalidParameterError(f"Unknown mode {mode!r}") from None

    if kind is ModeKind.RATIONAL:
        if delta is None or delta.strip() == GENERIC:
            raise InvalidParameterError("rational mode needs a rational --delta")
        return ScalarMode.rational(parse_rational(delta))
    if kind is ModeKind.GENERIC_DELTA:
        if delta is not None and delta.strip() != GENERIC:
            raise InvalidParameterError(f"generic-delta mode takes --delta generic, got {delta!r}")
        return ScalarMode.generic_delta()
    if kind is ModeKind.GENERIC_Q:
        if n is None:
            raise InvalidParameterError("generic-q mode needs --N")
        return ScalarMode.generic_q(n)
    if q is None or rho is None:
        raise InvalidParameterError("rational-qr mode needs --q and --rho")
    return ScalarMode.rational_qr(parse_rational(q), parse_rational(rho))


def _classical(mode: ScalarMode, command: str) -> None:
    if mode.has_q:
        raise InvalidParameterError(f"{command} works over B_(r,s)(delta); got {mode.label}")


def _labels(groups: t.Iterable[t.Iterable[t.Any]]) -> list[list[str]]:
    return [[str(w) for w in group] for group in groups]


# =============================================================================
# Classical subcommands
# =============================================================================


def dims_report(wall: Wall, mode: ScalarMode, limits: Limits | None = None) -> Report:
    """Diagram count, weight counts, arc filtration and cell dimensions."""
    _classical(mode, "dims")
    limits = limits or get_limits()
    diagram_count = len(enumerate_diagrams(wall, limits))
    filtration = ideal_filtration(wall, limits)
    weights = enumerate_weights(wall)

    squares = [0] * (wall.max_arcs + 1)
    cells = []
    for weight in weights:
        size = cell_dimension(weight)
        squares[weight.t] += size * size
        cells.append({"weight": str(weight), "t": weight.t, "dimension": size})

    failures = []
    if diagram_count != wall.dimension:
        failures.append("diagram-count")
    if filtration != expected_filtration(wall):
        failures.append("filtration")
    if squares != filtration:
        failures.append("cell-dimensions")

    data = {
        "dimension": wall.dimension,
        "diagram_count": diagram_count,
        "weights": len(weights),
        "simple_weights": len(dot_variant(wall, mode)),
        "filtration": filtration,
        "cell_dimensions": cells,
        "semisimple": is_semisimple(wall, mode),
    }
    return Report("dims", wall, mode.label, data, tuple(failures))


def center_report(wall: Wall, mode: ScalarMode, limits: Limits | None = None) -> Report:
    """
    The center by commutant nullspace, with the supersymmetric rank.

    In the semisimple case the dimension must equal the number of simple
    weights and the supersymmetric evaluations must span the center.
    """
    _classical(mode, "center")
    basis = compute_center(wall, mode, limits)
    rank = supersym_rank(wall, mode, basis)
    semisimple = is_semisimple(wall, mode)
    simple = len(dot_variant(wall, mode))

    failures = []
    if not rank.in_center:
        failures.append("supersym-in-center")
    if semisimple and basis.dimension != simple:
        failures.append("center-dimension")
    if semisimple and not rank.spans_center:
        failures.append("supersym-span")

    data = {
        "dimension": basis.dimension,
        "simple_weights": simple,
        "path_count": gz_basis_count(wall),
        "semisimple": semisimple,
        "supersym": rank,
        "basis": list(basis.elements),
    }
    return Report("center", wall, mode.label, data, tuple(failures))


def blocks_report(wall: Wall, mode: ScalarMode, limits: Limits | None = None) -> Report:
    """Blocks as delta-balanced classes, next to the central-character classes."""
    _classical(mode, "blocks")
    (limits or get_limits()).check_wall(wall)
    found = blocks(wall, mode)
    classes = character_classes(wall, mode)
    matches = sorted(_labels(found)) == sorted(_labels(classes))
    if not matches:
        logger.warning("blocks of %s at %s differ from the central-character classes", wall, mode.label)
    data = {
        "blocks": _labels(found),
        "block_count": len(found),
        "character_classes": _labels(classes),
        "matches_characters": matches,
        "semisimple": is_semisimple(wall, mode),
    }
    failures = () if matches else ("block-characters",)
    return Report("blocks", wall, mode.label, data, failures)


def characters_report(wall: Wall, mode: ScalarMode, limits: Limits | None = None, max_degree: int | None = None) -> Report:
    """Content vectors and power-sum central characters of every simple weight."""
    _classical(mode, "characters")
    (limits or get_limits()).check_wall(wall)
    degree = max_degree if max_degree is not None else max(2 * wall.n, 2)
    polys = [SupersymPoly.power_sum(k) for k in range(1, degree + 1)]
    rows = []
    for weight in dot_variant(wall, mode):
        rows.append(
            {
                "weight": weight,
                "label": str(weight),
                "contents": list(contents(weight, mode).values),
                "characters": [central_character(weight, p, mode) for p in polys],
            }
        )
    data = {
        "degree_bound": degree,
        "weights": rows,
        "classes": _labels(character_classes(wall, mode, degree)),
    }
    return Report("characters", wall, mode.label, data)


def idempotents_report(wall: Wall, mode: ScalarMode, limits: Limits | None = None) -> Report:
    """Build and verify every path idempotent."""
    _classical(mode, "idempotents")
    result = verify_idempotents(wall, mode, limits)
    failures = [] if result.passed else ["idempotents"]
    return Report("idempotents", wall, mode.label, {"idempotents": result}, tuple(failures))


def verify_report(wall: Wall, mode: ScalarMode, limits: Limits | None = None) -> Report:
    """
    Run the relation suite; in the semisimple case also the idempotent suite
    and the minimal polynomial of p_1(L) over the central characters.
    """
    _classical(mode, "verify")
    limits = limits or get_limits()
    family = jm_family(wall, mode)
    relations = verify_relation_suite(wall, mode, family, limits)
    failures = sorted({f"relation:{c.relation}" for c in relations.failures()})
    data: dict[str, t.Any] = {"relations": relations}

    if is_semisimple(wall, mode):
        idempotents = verify_idempotents(wall, mode, limits)
        if not idempotents.passed:
            failures.append("idempotents")
        p1 = SupersymPoly.power_sum(1)
        scalars = [central_character(w, p1, mode) for w in dot_variant(wall, mode)]
        annihilated = annihilator_check(power_sum_jm(family, 1), scalars)
        if not annihilated:
            failures.append("annihilator")
        data["idempotents"] = idempotents
        data["annihilator"] = annihilated
    else:
        logger.info("%s is not semisimple at %s; skipping idempotents", wall, mode.label)
        data["idempotents"] = None
        data["annihilator"] = None
    return Report("verify", wall, mode.label, data, tuple(failures))


# =============================================================================
# Quantized subcommand
# =============================================================================


def qverify_report(
    wall: Wall,
    mode: ScalarMode,
    limits: Limits | None = None,
    seed: int = 0,
    seeds: int = MIN_SPECIALIZATIONS,
) -> Report:
    """
    Complete the quantized presentation and verify it.

    Runs the relation and centrality suites and the exact center. Over
    generic-q it adds the classical limit; every run also checks random
    rational specializations drawn from ``seed``.

    Raises:
        InvalidParameterError: If ``mode`` has no q.
    """
    limits = limits or get_limits()
    system = complete(Presentation.build(wall, mode), limits)
    family = q_jm_family(system)
    relations = verify_q_relations(system, family)
    centrality = q_supersym_central_check(system, max(wall.n, 1), family)
    center = q_center_dimension(system, family)
    specializations = check_at_seeds(wall, count=seeds, seed=seed, limits=limits)

    failures = sorted({f"relation:{c.relation}" for c in relations.failures()})
    failures += sorted({f"centrality:{c.relation}" for c in centrality.failures()})
    if not center.in_center:
        failures.append("supersym-in-center")
    if not specializations.passed:
        failures.append("specializations")

    data: dict[str, t.Any] = {
        "dimension": system.dimension,
        "rule_count": len(system),
        "normal_words": [system.presentation.format_word(w) for w in system.normal_words()],
        "relations": relations,
        "centrality": centrality,
        "center": center,
        "specializations": specializations,
        "classical_limit": None,
    }
    if mode.kind is ModeKind.GENERIC_Q:
        limit = classical_limit_check(system, limits, family)
        if not limit.passed:
            failures.append("classical-limit")
        data["classical_limit"] = limit
    return Report("qverify", wall, mode.label, data, tuple(failures))


BUILDERS: dict[str, t.Callable[..., Report]] = {
    "dims": dims_report,
    "center": center_report,
    "blocks": blocks_report,
    "idempotents": idempotents_report,
    "verify": verify_report,
    "qverify": qverify_report,
    "characters": characters_report,
}


def report_payload(report: Report) -> dict[str, t.Any]:
    """JSON-ready data of a report."""
    return t.cast(dict, to_jsonable(report))

