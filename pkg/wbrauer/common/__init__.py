"""
Walled Brauer - Common Utilities.

Foundational building blocks shared by every layer:

- Wall: the (r, s) split of each diagram row
- Limits: size caps for exhaustive computations (``WBR_SIZE_CAP``)
- Serialization: canonical scalar strings and JSON reports
- Exceptions: the WbrError hierarchy

Example:
    >>> from wbrauer.common import Wall, get_limits
    >>> get_limits().check_wall(Wall(2, 2))
"""

from .config import (
    DEFAULT_COMPLETION_BUDGET,
    DEFAULT_QUANTUM_SIZE_CAP,
    DEFAULT_SIZE_CAP,
    SIZE_CAP_ENV,
    Limits,
    get_limits,
)
from .exceptions import (
    ClosedFormMismatchError,
    CompletionBudgetExceededError,
    CrossesWallError,
    DimensionMismatchError,
    DivisionByZeroError,
    IndexOutOfRangeError,
    InvalidParameterError,
    LimitMismatchError,
    MixedModesError,
    NotCentralError,
    NotInSpanError,
    NotSquareError,
    PoleAtQ1Error,
    RankDeficientError,
    SizeLimitExceededError,
    WallMismatchError,
    WbrError,
    ZeroDenominatorError,
)
from .serialization import SCHEMA, dump_report, format_scalar, parse_rational, to_jsonable
from .types import EMPTY_PARTITION, Partition, Wall

__all__ = [
    # Types
    "Wall",
    "Partition",
    "EMPTY_PARTITION",
    # Config
    "Limits",
    "get_limits",
    "SIZE_CAP_ENV",
    "DEFAULT_SIZE_CAP",
    "DEFAULT_QUANTUM_SIZE_CAP",
    "DEFAULT_COMPLETION_BUDGET",
    # Serialization
    "SCHEMA",
    "dump_report",
    "format_scalar",
    "parse_rational",
    "to_jsonable",
    # Exceptions
    "WbrError",
    "InvalidParameterError",
    "IndexOutOfRangeError",
    "CrossesWallError",
    "WallMismatchError",
    "NotSquareError",
    "DivisionByZeroError",
    "MixedModesError",
    "SizeLimitExceededError",
    "CompletionBudgetExceededError",
    "NotCentralError",
    "RankDeficientError",
    "NotInSpanError",
    "ZeroDenominatorError",
    "DimensionMismatchError",
    "ClosedFormMismatchError",
    "PoleAtQ1Error",
    "LimitMismatchError",
]
