"""
Exact linear algebra.

Fraction-free (Bareiss) elimination over Q and over the rational function
fields Q(d) and Q(q). The pivot in each column is the first nonzero entry at
or below the current row. Nullspace vectors come back with denominators
cleared and content removed, so over Q(d) they are primitive polynomial
vectors and over Q primitive integer vectors.

Example:
    >>> determinant([[1, 2], [3, 4]])
    Fraction(-2, 1)
"""

from __future__ import annotations

import logging
import math
import typing as t
from fractions import Fraction

from sympy.polys.fields import FracElement, FracField

from ..common.exceptions import MixedModesError, NotInSpanError, NotSquareError
from .modes import Scalar, ScalarLike, from_qq, to_qq

logger = logging.getLogger(__name__)

Matrix = t.Sequence[t.Sequence[ScalarLike]]
Vector = list[Scalar]
K = t.TypeVar("K")


# =============================================================================
# Field inference
# =============================================================================


def _infer_field(rows: Matrix) -> FracField | None:
    found: FracField | None = None
    for row in rows:
        for entry in row:
            if isinstance(entry, FracElement):
                if found is None:
                    found = entry.field
                elif entry.field != found:
                    raise MixedModesError(found, entry.field)
    return found


def _coerce(value: ScalarLike, fld: FracField | None) -> Scalar:
    if isinstance(value, FracElement):
        return value
    if fld is None:
        return Fraction(value)
    return fld.ground_new(to_qq(value))


def _prepare(matrix: Matrix) -> tuple[list[list[Scalar]], FracField | None]:
    fld = _infer_field(matrix)
    return [[_coerce(x, fld) for x in row] for row in matrix], fld


# =============================================================================
# Elimination
# =============================================================================


def fraction_free_echelon(
    matrix: Matrix, ncols: int | None = None
) -> tuple[list[list[Scalar]], list[int], int, FracField | None]:
    """
    Bareiss row echelon form.

    Args:
        matrix: Rows of scalars; all rational functions must share a field.
        ncols: Column count, needed only when ``matrix`` has no rows.

    Returns:
        ``(rows, pivots, sign, field)``: the nonzero echelon rows, their pivot
        columns, the sign of the row permutation used, and the inferred field
        (``None`` for rationals).
    """
    rows, fld = _prepare(matrix)
    width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    one: Scalar = fld.one if fld is not None else Fraction(1)

    prev = one
    sign = 1
    pivots: list[int] = []
    k = 0
    for c in range(width):
        if k >= len(rows):
            break
        p = next((i for i in range(k, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            sign = -sign
        pivot_row = rows[k]
        piv = pivot_row[c]
        for i in range(k + 1, len(rows)):
            row = rows[i]
            factor = row[c]
            for j in range(c + 1, width):
                if factor:
                    row[j] = (piv * row[j] - factor * pivot_row[j]) / prev
                elif row[j]:
                    row[j] = piv * row[j] / prev
            row[c] = piv - piv
        prev = piv
        pivots.append(c)
        k += 1
    return rows[:k], pivots, sign, fld


def rank(matrix: Matrix, ncols: int | None = None) -> int:
    return len(fraction_free_echelon(matrix, ncols)[1])


def determinant(matrix: Matrix) -> Scalar:
    """
    Exact determinant by fraction-free elimination.

    Raises:
        NotSquareError: If ``matrix`` is not square.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise NotSquareError(n, len(row))
    if n == 0:
        return Fraction(1)
    rows, pivots, sign, fld = fraction_free_echelon(matrix, n)
    if len(pivots) < n:
        return fld.zero if fld is not None else Fraction(0)
    det = rows[-1][-1]
    return det if sign > 0 else -det


def nullspace(matrix: Matrix, ncols: int | None = None) -> list[Vector]:
    """
    Exact basis of ``{v : M v = 0}``.

    One vector per free column, with that column set before normalization.
    The number of vectors plus the rank equals the column count.
    """
    rows, pivots, _, fld = fraction_free_echelon(matrix, ncols)
    width = ncols if ncols is not None else (len(matrix[0]) if matrix else 0)
    zero: Scalar = fld.zero if fld is not None else Fraction(0)
    one: Scalar = fld.one if fld is not None else Fraction(1)
    pivot_set = set(pivots)

    basis: list[Vector] = []
    for free in range(width):
        if free in pivot_set:
            continue
        x = [zero] * width
        x[free] = one
        _back_substitute(rows, pivots, x, width)
        basis.append(normalize_vector(x))
    logger.debug("nullspace: %d columns, rank %d, %d basis vectors", width, len(pivots), len(basis))
    return basis


def _back_substitute(rows: list[list[Scalar]], pivots: list[int], x: list[Scalar], width: int) -> None:
    for k in reversed(range(len(pivots))):
        pc = pivots[k]
        row = rows[k]
        acc = x[pc] - x[pc]
        for j in range(pc + 1, width):
            if row[j] and x[j]:
                acc += row[j] * x[j]
        x[pc] = -acc / row[pc]


def solve(matrix: Matrix, rhs: t.Sequence[ScalarLike]) -> Vector:
    """
    The unique solution of ``M x = rhs``.

    Raises:
        NotInSpanError: If the system is inconsistent or its solution is
            not unique (dependent columns).
    """
    width = len(matrix[0]) if matrix else 0
    augmented = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    rows, pivots, _, fld = fraction_free_echelon(augmented, width + 1)
    if pivots and pivots[-1] == width:
        raise NotInSpanError("Right-hand side is not in the column span")
    if len(pivots) < width:
        raise NotInSpanError(f"Columns are dependent (rank {len(pivots)} < {width}); coefficients are not unique")
    zero: Scalar = fld.zero if fld is not None else Fraction(0)
    one: Scalar = fld.one if fld is not None else Fraction(1)
    x = [zero] * width + [-one]
    _back_substitute(rows, pivots, x, width + 1)
    return x[:width]


# =============================================================================
# Normalization
# =============================================================================


def normalize_vector(vector: t.Sequence[Scalar]) -> Vector:
    """
    Scale a vector to a canonical primitive representative.

    Denominators are cleared, the common content is divided out and the first
    nonzero entry gets a positive leading coefficient.
    """
    entries = list(vector)
    nonzero = [v for v in entries if v]
    if not nonzero:
        return entries
    if isinstance(nonzero[0], Fraction):
        return _normalize_rational(entries)
    return _normalize_polynomial(entries)


def _normalize_rational(entries: list[Scalar]) -> Vector:
    values = [Fraction(v) for v in entries]
    denom = math.lcm(*(v.denominator for v in values))
    scaled = [v * denom for v in values]
    content = math.gcd(*(int(v) for v in scaled))
    first = next(v for v in scaled if v)
    if first < 0:
        content = -content
    return [v / content for v in scaled]


def _normalize_polynomial(entries: list[Scalar]) -> Vector:
    fld = t.cast(FracElement, next(v for v in entries if v)).field
    ring = fld.ring
    lcm_denom = ring.one
    for v in entries:
        if v:
            lcm_denom = lcm_denom.lcm(v.denom)
    polys = [(v.numer * lcm_denom).exquo(v.denom) if v else ring.zero for v in entries]

    gcd = ring.zero
    for p in polys:
        if p:
            gcd = p if not gcd else gcd.gcd(p)
    polys = [p.exquo(gcd) if p else p for p in polys]

    coeffs = [from_qq(c) for p in polys for c in p.coeffs()]
    denom = math.lcm(*(c.denominator for c in coeffs))
    content = math.gcd(*(int(c * denom) for c in coeffs))
    first = next(p for p in polys if p)
    scale = Fraction(denom, content)
    if from_qq(first.LC) < 0:
        scale = -scale
    factor = to_qq(scale)
    return [fld.new(p.mul_ground(factor)) for p in polys]


# =============================================================================
# Incremental span
# =============================================================================


class LinearSpan(t.Generic[K]):
    """
    Incrementally grown span of sparse vectors.

    Vectors are mappings from sortable keys (diagrams, words) to scalars.
    Stored rows are kept reduced against all earlier rows, with the pivot
    coefficient scaled to one.

    Example:
        >>> span = LinearSpan()
        >>> span.add({"a": 1, "b": 2})
        True
        >>> span.add({"a": 2, "b": 4})
        False
    """

    __slots__ = ("_rows",)

    def __init__(self) -> None:
        self._rows: list[tuple[K, dict[K, Scalar]]] = []

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vector: t.Mapping[K, Scalar]) -> dict[K, Scalar]:
        """Residue of ``vector`` after elimination against the stored rows."""
        residue = {k: v for k, v in vector.items() if v}
        for pivot, row in self._rows:
            c = residue.get(pivot)
            if not c:
                continue
            for key, value in row.items():
                updated = residue.get(key, value - value) - c * value
                if updated:
                    residue[key] = updated
                else:
                    residue.pop(key, None)
        return residue

    def contains(self, vector: t.Mapping[K, Scalar]) -> bool:
        return not self.reduce(vector)

    def add(self, vector: t.Mapping[K, Scalar]) -> bool:
        """Add ``vector``; return ``True`` if it enlarged the span."""
        residue = self.reduce(vector)
        if not residue:
            return False
        pivot = min(residue)
        inverse = 1 / residue[pivot]
        self._rows.append((pivot, {k: v * inverse for k, v in residue.items()}))
        return True

    def rows(self) -> list[tuple[K, dict[K, Scalar]]]:
        """(pivot, row) pairs; every key of a row is at least its pivot."""
        return list(self._rows)


def sparse_nullspace(equations: t.Iterable[t.Mapping[int, Scalar]], ncols: int, one: Scalar) -> list[Vector]:
    """
    Nullspace of a sparse system given as rows ``{column: coefficient}``.

    The rows are echelonized incrementally with :class:`LinearSpan`; each
    free column yields one vector by back substitution, normalized like
    :func:`nullspace`.

    Args:
        equations: Sparse rows over columns 0..ncols-1.
        ncols: Number of unknowns.
        one: The unit of the scalar field, used for the free variables.
    """
    span: LinearSpan[int] = LinearSpan()
    for equation in equations:
        span.add(equation)
    rows = sorted(span.rows(), key=lambda item: item[0], reverse=True)
    pivots = {pivot for pivot, _ in rows}
    zero = one - one
    basis: list[Vector] = []
    for free in range(ncols):
        if free in pivots:
            continue
        x = [zero] * ncols
        x[free] = one
        for pivot, row in rows:
            acc = zero
            for j, value in row.items():
                if j != pivot and x[j]:
                    acc += value * x[j]
            x[pivot] = -acc
        basis.append(normalize_vector(x))
    logger.debug("sparse nullspace: %d columns, rank %d, %d basis vectors", ncols, len(rows), len(basis))
    return basis
