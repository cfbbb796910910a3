"""Helpers for turning library values into canonical JSON.

Reports must be byte-identical across runs, so every value is rendered
through a single canonical form:
- Rationals become "p" or "p/q".
- Rational functions become "3*d^2+1" or "(d^2-1)/(d-1)", with the
  indeterminate named d or q.
- Objects exposing ``to_dict`` are expanded recursively.
- Tuples become lists; keys are sorted when dumping.
"""

from __future__ import annotations

import enum
import json
import typing as t
from fractions import Fraction

from sympy.polys.fields import FracElement
from sympy.polys.rings import PolyElement

from .exceptions import InvalidParameterError

SCHEMA = "wbr-report/1"


def format_fraction(value: Fraction | int) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def format_poly(poly: PolyElement, name: str | None = None) -> str:
    """Render a univariate polynomial, highest degree first."""
    if not poly:
        return "0"
    if name is None:
        name = str(poly.ring.symbols[0])
    pieces: list[tuple[str, str]] = []
    for (degree,), coeff in poly.terms():
        c = Fraction(int(coeff.numerator), int(coeff.denominator))
        magnitude = abs(c)
        if degree == 0:
            body = format_fraction(magnitude)
        else:
            monomial = name if degree == 1 else f"{name}^{degree}"
            body = monomial if magnitude == 1 else f"{format_fraction(magnitude)}*{monomial}"
        pieces.append(("-" if c < 0 else "+", body))
    head_sign, head = pieces[0]
    return ("-" if head_sign == "-" else "") + head + "".join(sign + body for sign, body in pieces[1:])


def format_scalar(value: t.Any) -> str:
    """Canonical string form of an exact scalar."""
    if isinstance(value, FracElement):
        name = str(value.field.symbols[0])
        numer = format_poly(value.numer, name)
        if value.denom == 1:
            return numer
        denom = format_poly(value.denom, name)
        if len(value.numer.terms()) > 1:
            numer = f"({numer})"
        if len(value.denom.terms()) > 1 or "*" in denom:
            denom = f"({denom})"
        return f"{numer}/{denom}"
    if isinstance(value, (int, Fraction)):
        return format_fraction(value)
    raise TypeError(f"Not a scalar: {value!r}")


def parse_rational(text: str) -> Fraction:
    """
    Parse "p/q" or an integer.

    Raises:
        InvalidParameterError: If ``text`` is not a rational literal.
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameterError(f"Expected a rational like '7/3', got {text!r}") from exc


def to_jsonable(value: t.Any) -> t.Any:
    """Recursively convert a report value into JSON-compatible data."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, Fraction, FracElement)):
        return value if type(value) is int else format_scalar(value)
    if isinstance(value, enum.Enum):
        return value.value
    to_dict = getattr(value, "to_dict", None)
    if callable(to_dict):
        return to_jsonable(to_dict())
    if isinstance(value, t.Mapping):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    raise TypeError(f"Cannot serialize {type(value).__name__}")


def dump_report(report: t.Mapping[str, t.Any]) -> str:
    """Serialize a report with the schema tag, sorted keys and stable layout."""
    payload = dict(to_jsonable(report))
    payload["schema"] = SCHEMA
    return json.dumps(payload, sort_keys=True, indent=2)
