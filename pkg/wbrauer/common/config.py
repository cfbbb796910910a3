"""
Computation limits.

Exhaustive operations enumerate (r+s)! diagrams and completion of the
quantized presentation grows much faster, so both are bounded by a cap on
r + s. The defaults can be overridden by the ``WBR_SIZE_CAP`` environment
variable or per call.
"""

from __future__ import annotations

import dataclasses
import logging
import os
import typing as t
from dataclasses import dataclass

from .exceptions import SizeLimitExceededError

if t.TYPE_CHECKING:
    from .types import Wall

log = logging.getLogger("wbrauer.config")

SIZE_CAP_ENV = "WBR_SIZE_CAP"

DEFAULT_SIZE_CAP = 7
DEFAULT_QUANTUM_SIZE_CAP = 5
DEFAULT_COMPLETION_BUDGET = 20_000


@dataclass(frozen=True, slots=True)
class Limits:
    """
    Size limits for exhaustive computations.

    Attributes:
        size_cap: Largest r + s accepted by diagram-enumerating operations
            (7 gives 5040 diagrams).
        quantum_size_cap: Largest r + s accepted by the rewriting layer.
        completion_budget: Maximum number of rewrite rules during completion.
        max_word_length: Longest generator word compared in the q = 1 check;
            ``None`` means r + s + 2.
    """

    size_cap: int = DEFAULT_SIZE_CAP
    quantum_size_cap: int = DEFAULT_QUANTUM_SIZE_CAP
    completion_budget: int = DEFAULT_COMPLETION_BUDGET
    max_word_length: int | None = None

    @classmethod
    def from_env(cls, environ: t.Mapping[str, str] | None = None) -> Limits:
        """
        Build limits from the environment.

        Args:
            environ: Mapping to read instead of ``os.environ``.

        Returns:
            Limits with ``size_cap`` taken from ``WBR_SIZE_CAP`` when it holds
            a positive integer. Anything else is logged and ignored.
        """
        env = os.environ if environ is None else environ
        raw = env.get(SIZE_CAP_ENV)
        if raw is None or not raw.strip():
            return cls()
        try:
            cap = int(raw)
        except ValueError:
            cap = 0
        if cap <= 0:
            log.warning("Ignoring %s=%r; expected a positive integer. Using %d.", SIZE_CAP_ENV, raw, DEFAULT_SIZE_CAP)
            return cls()
        return cls(size_cap=cap)

    def with_size_cap(self, cap: int | None) -> Limits:
        if cap is None:
            return self
        return dataclasses.replace(self, size_cap=cap)

    def check_wall(self, wall: Wall) -> None:
        """Raise SizeLimitExceededError if r + s exceeds ``size_cap``."""
        if wall.n > self.size_cap:
            raise SizeLimitExceededError(wall.n, self.size_cap)

    def check_quantum_wall(self, wall: Wall) -> None:
        cap = min(self.size_cap, self.quantum_size_cap)
        if wall.n > cap:
            raise SizeLimitExceededError(wall.n, cap)

    def word_length(self, wall: Wall) -> int:
        return self.max_word_length if self.max_word_length is not None else wall.n + 2


def get_limits() -> Limits:
    """Limits in effect for calls that do not pass their own."""
    return Limits.from_env()
