"""
Walled Brauer Exceptions.

Custom exception hierarchy for the algebra, weight and rewriting layers.
All exceptions inherit from WbrError for easy catching.
"""

from __future__ import annotations

import typing as t


class WbrError(Exception):
    """
    Base exception for all library errors.

    Catch this to handle any failure:
        try:
            basis = compute_center(Wall(2, 2), ScalarMode.generic_delta())
        except WbrError as e:
            print(f"Computation failed: {e}")
    """

    pass


# ============================================================================
# Parameter errors
# ============================================================================


class InvalidParameterError(WbrError, ValueError):
    """Raised when an argument is outside the range an operation accepts."""

    pass


class IndexOutOfRangeError(InvalidParameterError):
    """
    Raised when a generator or vertex index lies outside the wall.

    For example S(i) with i >= r + s, or a transposition touching vertex 0.
    """

    def __init__(self, what: str, index: object, allowed: str) -> None:
        self.what = what
        self.index = index
        self.allowed = allowed
        super().__init__(f"{what} index {index!r} out of range (allowed: {allowed})")


class CrossesWallError(InvalidParameterError):
    """
    Raised when a generator would violate the wall conditions.

    S(r) swaps the two vertices adjacent to the wall, and E(j, k) needs j on
    the left of the wall and k on the right.
    """

    def __init__(self, message: str) -> None:
        super().__init__(message)


class WallMismatchError(InvalidParameterError):
    """Raised when two operands live over different walls."""

    def __init__(self, left: object, right: object) -> None:
        self.left = left
        self.right = right
        super().__init__(f"Wall mismatch: {left!r} vs {right!r}")


class NotSquareError(InvalidParameterError):
    """Raised when a determinant is requested for a non-square matrix."""

    def __init__(self, rows: int, cols: int) -> None:
        self.rows = rows
        self.cols = cols
        super().__init__(f"Matrix is {rows}x{cols}, expected a square matrix")


# ============================================================================
# Arithmetic errors
# ============================================================================


class DivisionByZeroError(WbrError, ZeroDivisionError):
    """Raised on division by an exact zero scalar, or evaluation at a pole."""

    pass


class MixedModesError(WbrError):
    """
    Raised when scalars or elements from different scalar modes meet.

    A rational function in q cannot be added to one in d, and an element
    computed at delta = 7/3 cannot be multiplied by one at generic delta.
    """

    def __init__(self, left: object, right: object) -> None:
        self.left = left
        self.right = right
        super().__init__(f"Mixed scalar modes: {left} vs {right}")


# ============================================================================
# Resource errors
# ============================================================================


class SizeLimitExceededError(WbrError):
    """
    Raised before an exhaustive computation whose size exceeds the cap.

    The cap bounds r + s; raise it with ``--size-cap`` or ``WBR_SIZE_CAP``.
    """

    def __init__(self, requested: int, cap: int, what: str = "r+s") -> None:
        self.requested = requested
        self.cap = cap
        super().__init__(f"{what} = {requested} exceeds the configured size cap {cap}")


class CompletionBudgetExceededError(WbrError):
    """Raised when rewriting completion grows past the configured rule budget."""

    def __init__(self, rules: int, budget: int) -> None:
        self.rules = rules
        self.budget = budget
        super().__init__(f"Completion produced {rules} rules, budget is {budget}")


# ============================================================================
# Consistency errors
# ============================================================================


class NotCentralError(WbrError):
    """Raised when an operation that needs a central element receives one that is not."""

    pass


class RankDeficientError(WbrError):
    """
    Raised when an evaluation matrix cannot reach full rank in a semisimple mode.

    Content vectors separate weights there, so this signals an internal
    inconsistency rather than bad input.
    """

    def __init__(self, rank: int, expected: int) -> None:
        self.rank = rank
        self.expected = expected
        super().__init__(f"Evaluation matrix reached rank {rank}, expected {expected}")


class NotInSpanError(WbrError):
    """Raised when an element is not a linear combination of the given basis."""

    pass


class ZeroDenominatorError(WbrError):
    """
    Raised when an idempotent factor (L_i - c) / (c_T(i) - c) has c = c_T(i).

    Either the mode is not semisimple or two paths collide at step ``step``.
    """

    def __init__(self, path: object, step: int, value: object) -> None:
        self.path = path
        self.step = step
        self.value = value
        super().__init__(f"Content collision at step {step} for path {path!r}: value {value}")


class DimensionMismatchError(WbrError):
    """Raised when a computed dimension disagrees with the expected one."""

    def __init__(self, message: str, expected: int, actual: int) -> None:
        self.expected = expected
        self.actual = actual
        super().__init__(f"{message} (expected {expected}, got {actual})")


class ClosedFormMismatchError(WbrError):
    """Raised when a recursively built quantum JM element differs from its closed form."""

    def __init__(self, index: int) -> None:
        self.index = index
        super().__init__(f"Quantum Jucys-Murphy element {index} disagrees with its closed form")


class PoleAtQ1Error(WbrError):
    """Raised when a structure constant over Q(q) has a pole at q = 1."""

    def __init__(self, entry: t.Any, value: object) -> None:
        self.entry = entry
        self.value = value
        super().__init__(f"Coefficient {value} of {entry!r} has a pole at q = 1")


class LimitMismatchError(WbrError):
    """Raised when the q = 1 specialization disagrees with the classical algebra."""

    pass
