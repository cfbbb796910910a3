"""
Scalar modes.

Every coefficient lives in one of four exact fields:

- ``rational``       Q, with delta fixed to a rational delta0
- ``generic-delta``  Q(d), delta is the indeterminate d
- ``generic-q``      Q(q), rho = q^N and delta = (rho - 1/rho) / (q - 1/q)
- ``rational-qr``    Q, with q = q0, rho = rho0 and delta derived from them

Rationals are ``fractions.Fraction``; rational functions are sympy
``FracElement`` values over the fields ``DELTA_FIELD`` and ``Q_FIELD``. Sympy
keeps those reduced (numerator and denominator coprime, denominator with a
canonical leading coefficient), so equal fractions compare equal.

Example:
    >>> mode = ScalarMode.rational_qr(2, 3)
    >>> mode.delta
    Fraction(16, 9)
"""

from __future__ import annotations

import enum
import functools
import typing as t
from dataclasses import dataclass
from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, FracField, field

from ..common.exceptions import DivisionByZeroError, InvalidParameterError, MixedModesError

# =============================================================================
# Fields
# =============================================================================

DELTA_FIELD, DELTA = field("d", QQ)
Q_FIELD, Q = field("q", QQ)

Scalar = t.Union[Fraction, FracElement]
ScalarLike = t.Union[int, Fraction, FracElement]


def to_qq(value: int | Fraction) -> t.Any:
    """Convert an int or Fraction into sympy's QQ domain."""
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value: t.Any) -> Fraction:
    """Convert a QQ domain element into a Fraction."""
    return Fraction(int(QQ.numer(value)), int(QQ.denom(value)))


@functools.lru_cache(maxsize=None)
def _generic_q_constants(n: int) -> tuple[FracElement, FracElement, FracElement]:
    rho = Q**n
    q_diff = Q - Q ** (-1)
    delta = (rho - rho ** (-1)) / q_diff
    return rho, q_diff, delta


# =============================================================================
# ScalarMode
# =============================================================================


class ModeKind(enum.Enum):
    """The four coefficient regimes."""

    RATIONAL = "rational"
    GENERIC_DELTA = "generic-delta"
    GENERIC_Q = "generic-q"
    RATIONAL_QR = "rational-qr"


@dataclass(frozen=True, slots=True)
class ScalarMode:
    """
    A coefficient field together with the values of delta, q and rho.

    Build instances with the classmethods rather than the constructor.

    Attributes:
        kind: Which regime this is.
        delta0: delta for ``rational``.
        n: The exponent N with rho = q^N for ``generic-q``.
        q0: q for ``rational-qr``.
        rho0: rho for ``rational-qr``.
    """

    kind: ModeKind
    delta0: Fraction | None = None
    n: int | None = None
    q0: Fraction | None = None
    rho0: Fraction | None = None

    def __post_init__(self) -> None:
        if self.kind is ModeKind.RATIONAL and self.delta0 is None:
            raise InvalidParameterError("rational mode needs delta0")
        if self.kind is ModeKind.GENERIC_Q and (self.n is None or self.n < 0):
            raise InvalidParameterError(f"generic-q mode needs a nonnegative N, got {self.n!r}")
        if self.kind is ModeKind.RATIONAL_QR:
            if self.q0 is None or self.q0 in (0, 1, -1):
                raise InvalidParameterError(f"q0 must avoid 0, 1 and -1, got {self.q0!r}")
            if self.rho0 is None or self.rho0 == 0:
                raise InvalidParameterError("rho0 must be nonzero")

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def rational(cls, delta0: int | Fraction) -> ScalarMode:
        return cls(ModeKind.RATIONAL, delta0=Fraction(delta0))

    @classmethod
    def generic_delta(cls) -> ScalarMode:
        return cls(ModeKind.GENERIC_DELTA)

    @classmethod
    def generic_q(cls, n: int) -> ScalarMode:
        return cls(ModeKind.GENERIC_Q, n=n)

    @classmethod
    def rational_qr(cls, q0: int | Fraction, rho0: int | Fraction) -> ScalarMode:
        return cls(ModeKind.RATIONAL_QR, q0=Fraction(q0), rho0=Fraction(rho0))

    # -------------------------------------------------------------------------
    # Field data
    # -------------------------------------------------------------------------

    @property
    def field(self) -> FracField | None:
        """The sympy field for symbolic modes, ``None`` for rational ones."""
        if self.kind is ModeKind.GENERIC_DELTA:
            return DELTA_FIELD
        if self.kind is ModeKind.GENERIC_Q:
            return Q_FIELD
        return None

    @property
    def is_symbolic(self) -> bool:
        return self.field is not None

    @property
    def has_q(self) -> bool:
        return self.kind in (ModeKind.GENERIC_Q, ModeKind.RATIONAL_QR)

    @property
    def zero(self) -> Scalar:
        fld = self.field
        return fld.zero if fld is not None else Fraction(0)

    @property
    def one(self) -> Scalar:
        fld = self.field
        return fld.one if fld is not None else Fraction(1)

    @property
    def delta(self) -> Scalar:
        if self.kind is ModeKind.RATIONAL:
            return t.cast(Fraction, self.delta0)
        if self.kind is ModeKind.GENERIC_DELTA:
            return DELTA
        if self.kind is ModeKind.GENERIC_Q:
            return _generic_q_constants(t.cast(int, self.n))[2]
        q0, rho0 = t.cast(Fraction, self.q0), t.cast(Fraction, self.rho0)
        return (rho0 - 1 / rho0) / (q0 - 1 / q0)

    @property
    def q(self) -> Scalar:
        if self.kind is ModeKind.GENERIC_Q:
            return Q
        if self.kind is ModeKind.RATIONAL_QR:
            return t.cast(Fraction, self.q0)
        raise InvalidParameterError(f"{self.label} has no parameter q")

    @property
    def rho(self) -> Scalar:
        if self.kind is ModeKind.GENERIC_Q:
            return _generic_q_constants(t.cast(int, self.n))[0]
        if self.kind is ModeKind.RATIONAL_QR:
            return t.cast(Fraction, self.rho0)
        raise InvalidParameterError(f"{self.label} has no parameter rho")

    @property
    def q_diff(self) -> Scalar:
        """q - 1/q."""
        if self.kind is ModeKind.GENERIC_Q:
            return _generic_q_constants(t.cast(int, self.n))[1]
        q0 = self.q
        return q0 - 1 / q0

    @property
    def delta_value(self) -> Fraction | None:
        """delta as a rational number, or ``None`` when it is symbolic."""
        if self.kind is ModeKind.RATIONAL or self.kind is ModeKind.RATIONAL_QR:
            return t.cast(Fraction, self.delta)
        return None

    @property
    def label(self) -> str:
        if self.kind is ModeKind.RATIONAL:
            return f"rational:delta={_fraction_str(t.cast(Fraction, self.delta0))}"
        if self.kind is ModeKind.GENERIC_Q:
            return f"generic-q:N={self.n}"
        if self.kind is ModeKind.RATIONAL_QR:
            q0, rho0 = t.cast(Fraction, self.q0), t.cast(Fraction, self.rho0)
            return f"rational-qr:q={_fraction_str(q0)},rho={_fraction_str(rho0)}"
        return self.kind.value

    def __str__(self) -> str:
        return self.label

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def coerce(self, value: ScalarLike) -> Scalar:
        """
        Bring ``value`` into this mode's field.

        Integers and Fractions embed into every mode. A rational function is
        accepted only by the mode whose field it belongs to.

        Raises:
            MixedModesError: If ``value`` belongs to another field.
        """
        fld = self.field
        if isinstance(value, FracElement):
            if fld is not None and value.field == fld:
                return value
            raise MixedModesError(value.field, self.label)
        if isinstance(value, (int, Fraction)):
            if fld is None:
                return Fraction(value)
            return fld.ground_new(to_qq(value))
        raise TypeError(f"Unsupported scalar type {type(value).__name__}")

    def add(self, a: ScalarLike, b: ScalarLike) -> Scalar:
        return self.coerce(a) + self.coerce(b)

    def sub(self, a: ScalarLike, b: ScalarLike) -> Scalar:
        return self.coerce(a) - self.coerce(b)

    def mul(self, a: ScalarLike, b: ScalarLike) -> Scalar:
        return self.coerce(a) * self.coerce(b)

    def div(self, a: ScalarLike, b: ScalarLike) -> Scalar:
        b = self.coerce(b)
        if not b:
            raise DivisionByZeroError(f"Division by zero in {self.label}")
        return self.coerce(a) / b

    def specialize(self, value: ScalarLike, point: int | Fraction) -> Fraction:
        """Evaluate a scalar of this mode at the rational ``point``."""
        return specialize(self.coerce(value), point)


def specialize(value: Scalar, point: int | Fraction) -> Fraction:
    """
    Evaluate a univariate rational function at a rational point.

    Fractions are returned unchanged.

    Raises:
        DivisionByZeroError: If the denominator vanishes at ``point``.
    """
    if isinstance(value, Fraction):
        return value
    gen = value.field.ring.gens[0]
    at = to_qq(point)
    denom = value.denom.evaluate(gen, at)
    if not denom:
        raise DivisionByZeroError(f"Pole at {point}")
    return from_qq(value.numer.evaluate(gen, at)) / from_qq(denom)


def _fraction_str(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
