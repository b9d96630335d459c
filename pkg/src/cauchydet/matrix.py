"""Exact matrices with two independent determinant routes.

The point of this module is redundancy, not speed: every determinant a
claim depends on can be computed two structurally unrelated ways.

* :meth:`Matrix.det_cofactor` is Laplace expansion (memoized over column
  subsets), capped at 8x8.  It never divides, so it cannot hide a wrong
  division.
* :meth:`Matrix.det_bareiss` is fraction-free elimination: each row is
  scaled by the lcm of its denominators to make the matrix integral, then
  the Bareiss recurrence runs in pure integer arithmetic and the result is
  divided by the product of the row scales.

The two must agree exactly; the test suite enforces this on random
matrices and the verifier treats elimination as the ground-truth oracle
for anything a closed form claims.

Rank uses the same fraction-free update with column skipping: a column
with no pivot below the current row is linearly dependent on the pivot
columns and is passed over.  The pivot count is the rank.

If gmpy2 is installed the integer core switches to ``mpz`` with
``divexact`` (exact division without remainder bookkeeping) for matrices
of size >= 16, where entry growth makes GMP pay for itself.  The
algorithm and results are identical either way.
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction
from typing import Iterable, Sequence

from .rational import as_rational

try:
    from gmpy2 import mpz as _mpz
    from gmpy2 import divexact as _divexact

    _HAVE_GMPY2 = True
except ImportError:  # pure-int fallback; floor division is exact here
    _mpz = int
    _divexact = operator.floordiv
    _HAVE_GMPY2 = False

__all__ = ["Matrix"]

_ZERO = Fraction(0)
_ONE = Fraction(1)

# Below this size the mpz conversion overhead outweighs GMP's faster
# multiplication; measured crossover is around 12-20 rows.
_MPZ_MIN_SIZE = 16


def _scaled_int_rows(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Clear denominators row by row.

    Returns integer rows and the product of the (positive) row scales, so
    det(original) = det(integer rows) / product.  Positive scales also
    preserve rank and avoid any sign bookkeeping.
    """
    scaled = []
    denom = 1
    for row in rows:
        lcm = math.lcm(*(f.denominator for f in row)) if row else 1
        scaled.append([f.numerator * (lcm // f.denominator) for f in row])
        denom *= lcm
    return scaled, denom


def _int_det_bareiss(rows: list[list[int]], track: dict | None = None) -> int:
    """Determinant of a square integer matrix, fraction-free.

    Bareiss recurrence: after step k every working entry equals a
    (k+1)x(k+1) minor of the original matrix, so the division by the
    previous pivot is exact (Sylvester's identity).  Rows shrink by one
    entry per step because the eliminated column is dropped; this keeps
    the hot loop free of dead columns.

    ``track``, if given, records ``max_bits``: the largest bit length seen
    among intermediate entries (benchmark instrumentation only; it costs
    a full pass per step).
    """
    n = len(rows)
    if n == 0:
        return 1
    if _HAVE_GMPY2 and n >= _MPZ_MIN_SIZE:
        rows = [[_mpz(v) for v in row] for row in rows]
        div = _divexact
    else:
        rows = [list(row) for row in rows]
        div = operator.floordiv
    if track is not None:
        track["max_bits"] = max(
            track.get("max_bits", 0),
            max((abs(v).bit_length() for row in rows for v in row), default=0),
        )
    sign = 1
    prev = None
    for k in range(n - 1):
        p = k
        while p < n and not rows[p][0]:
            p += 1
        if p == n:
            return 0
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            sign = -sign
        rowk = rows[k]
        akk = rowk[0]
        m = len(rowk)
        if k == 0:
            for i in range(k + 1, n):
                rowi = rows[i]
                aik = rowi[0]
                rows[i] = [akk * rowi[j] - aik * rowk[j] for j in range(1, m)]
        else:
            for i in range(k + 1, n):
                rowi = rows[i]
                aik = rowi[0]
                rows[i] = [div(akk * rowi[j] - aik * rowk[j], prev) for j in range(1, m)]
        if track is not None:
            track["max_bits"] = max(
                track["max_bits"],
                max(abs(v).bit_length() for i in range(k + 1, n) for v in rows[i]),
            )
        prev = akk
    return int(sign * rows[n - 1][0])


def _int_rank(rows: Sequence[Sequence[int]], cols: int) -> int:
    """Rank of an integer matrix by fraction-free elimination.

    Identical update to the determinant routine, but a column whose
    remaining entries are all zero contributes no pivot and is skipped.
    The exact-division argument survives column skipping because every
    working entry is still a minor over (pivot rows + this row, pivot
    columns + this column).
    """
    m = len(rows)
    if m == 0 or cols == 0:
        return 0
    rows = [list(r) for r in rows]
    rank = 0
    prev = 1
    r = 0
    for c in range(cols):
        p = r
        while p < m and not rows[p][c]:
            p += 1
        if p == m:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        pivot = rows[r][c]
        rowr = rows[r]
        for i in range(r + 1, m):
            rowi = rows[i]
            vic = rowi[c]
            if vic:
                for j in range(c + 1, cols):
                    rowi[j] = (pivot * rowi[j] - vic * rowr[j]) // prev
                rowi[c] = 0
            elif prev != pivot:
                # Rows with a zero in the pivot column still need the
                # Bareiss rescale to keep later divisions exact.
                for j in range(c + 1, cols):
                    rowi[j] = (pivot * rowi[j]) // prev
        prev = pivot
        r += 1
        rank += 1
        if r == m:
            break
    return rank


def _det_rows_cofactor(rows: Sequence[Sequence[Fraction]], max_size: int = 8) -> Fraction:
    """Laplace expansion along the first row, memoized over column subsets.

    The memo keys on the set of surviving columns; the row is implied by
    its popcount.  2^n subproblems, so the cap matters: this is the
    independent small-matrix oracle, not a general engine.
    """
    n = len(rows)
    if n > max_size:
        raise ValueError(f"cofactor determinant capped at {max_size}x{max_size}, got {n}x{n}")
    if n == 0:
        return _ONE
    grid = [tuple(r) for r in rows]
    memo: dict[int, Fraction] = {}

    def minor(mask: int) -> Fraction:
        if mask == 0:
            return _ONE
        cached = memo.get(mask)
        if cached is not None:
            return cached
        r = n - mask.bit_count()
        row = grid[r]
        acc = _ZERO
        sign = 1
        m = mask
        while m:
            low = m & -m
            v = row[low.bit_length() - 1]
            if v:
                sub = minor(mask ^ low)
                acc = acc + v * sub if sign > 0 else acc - v * sub
            sign = -sign
            m ^= low
        memo[mask] = acc
        return acc

    return minor((1 << n) - 1)


def _det_rows_bareiss(rows: Sequence[Sequence[Fraction]], track: dict | None = None) -> Fraction:
    """Fraction-free determinant of square Fraction rows (no validation)."""
    n = len(rows)
    if n == 0:
        return _ONE
    ints, denom = _scaled_int_rows(rows)
    return Fraction(_int_det_bareiss(ints, track), denom)


def _rank_rows(rows: Sequence[Sequence[Fraction]], cols: int) -> int:
    """Fraction-free rank of Fraction rows (no validation)."""
    ints, _ = _scaled_int_rows(rows)
    return _int_rank(ints, cols)


class Matrix:
    """Immutable rectangular matrix over exact rationals.

    Entries are ``fractions.Fraction``; construction coerces ints and
    rejects floats.  Zero-dimensional matrices are allowed so recursive
    conventions bottom out (det of the 0x0 matrix is 1, the empty
    product).
    """

    __slots__ = ("_nrows", "_ncols", "_data")

    def __init__(self, rows: Iterable[Iterable]):
        data: list[Fraction] = []
        nrows = 0
        ncols = -1
        for row in rows:
            entries = [as_rational(v) for v in row]
            if ncols < 0:
                ncols = len(entries)
            elif len(entries) != ncols:
                raise ValueError(
                    f"ragged rows: row {nrows} has {len(entries)} entries, expected {ncols}"
                )
            data.extend(entries)
            nrows += 1
        self._nrows = nrows
        self._ncols = ncols if ncols >= 0 else 0
        self._data = tuple(data)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        if nrows < 0 or ncols < 0:
            raise ValueError(f"negative dimension: {nrows}x{ncols}")
        m = cls.__new__(cls)
        m._nrows = nrows
        m._ncols = ncols
        m._data = (_ZERO,) * (nrows * ncols)
        return m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        if n < 0:
            raise ValueError(f"negative dimension: {n}")
        m = cls.__new__(cls)
        m._nrows = n
        m._ncols = n
        m._data = tuple(_ONE if i % (n + 1) == 0 else _ZERO for i in range(n * n))
        return m

    @property
    def rows(self) -> int:
        return self._nrows

    @property
    def cols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._nrows, self._ncols)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self._nrows and 0 <= j < self._ncols):
            raise IndexError(f"entry ({i}, {j}) out of range for {self._nrows}x{self._ncols}")
        return self._data[i * self._ncols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        if not 0 <= i < self._nrows:
            raise IndexError(f"row {i} out of range for {self._nrows} rows")
        c = self._ncols
        return self._data[i * c : (i + 1) * c]

    def column(self, j: int) -> tuple[Fraction, ...]:
        if not 0 <= j < self._ncols:
            raise IndexError(f"column {j} out of range for {self._ncols} columns")
        return self._data[j :: self._ncols] if self._ncols else ()

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self._nrows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self._nrows, self._ncols, self._data))

    def __repr__(self) -> str:
        return f"Matrix({self._nrows}x{self._ncols})"

    def __str__(self) -> str:
        if self._nrows == 0 or self._ncols == 0:
            return f"<empty {self._nrows}x{self._ncols}>"
        cells = [[str(self[i, j]) for j in range(self._ncols)] for i in range(self._nrows)]
        widths = [max(len(cells[i][j]) for i in range(self._nrows)) for j in range(self._ncols)]
        return "\n".join(
            "[ " + "  ".join(cells[i][j].rjust(widths[j]) for j in range(self._ncols)) + " ]"
            for i in range(self._nrows)
        )

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self._data[i * self._ncols + j] for i in range(self._nrows)] for j in range(self._ncols)]
        )

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        """Submatrix on strictly increasing row and column index tuples."""
        for name, idx, bound in (("row", row_idx, self._nrows), ("column", col_idx, self._ncols)):
            prev = -1
            for v in idx:
                if not 0 <= v < bound:
                    raise ValueError(f"{name} index {v} out of range for {bound}")
                if v <= prev:
                    raise ValueError(f"{name} indices must be strictly increasing, got {tuple(idx)}")
                prev = v
        return Matrix([[self._data[i * self._ncols + j] for j in col_idx] for i in row_idx])

    def scale_columns(self, factors: Sequence) -> "Matrix":
        """Multiply column j by factors[j]; every factor must be nonzero."""
        if len(factors) != self._ncols:
            raise ValueError(f"need {self._ncols} factors, got {len(factors)}")
        fs = [as_rational(f) for f in factors]
        for j, f in enumerate(fs):
            if f == 0:
                raise ValueError(f"column {j}: scale factor must be nonzero")
        return Matrix([[self[i, j] * fs[j] for j in range(self._ncols)] for i in range(self._nrows)])

    def _require_square(self, what: str) -> None:
        if self._nrows != self._ncols:
            raise ValueError(f"{what} needs a square matrix, got {self._nrows}x{self._ncols}")

    def det_bareiss(self) -> Fraction:
        """Determinant by fraction-free elimination (any supported size)."""
        self._require_square("determinant")
        return _det_rows_bareiss(self.to_rows())

    def det_cofactor(self, max_size: int = 8) -> Fraction:
        """Determinant by memoized Laplace expansion (independent oracle,
        capped at ``max_size``)."""
        self._require_square("determinant")
        return _det_rows_cofactor(self.to_rows(), max_size)

    def rank(self) -> int:
        """Rank by fraction-free elimination with column skipping."""
        return _rank_rows(self.to_rows(), self._ncols)
