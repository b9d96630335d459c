"""Constructors for the structured matrix families under study.

All builders return :class:`~cauchydet.matrix.Matrix` and take exact
inputs only.  Index arguments (``i_idx``, ``e_idx``, the set ``E``) are
1-based sequence indices, kept that way so a matrix can be read next to
its defining formula; storage inside Matrix is 0-based as usual.

Families:

* ``cauchy(xs, ys)``      entry (i,j) = 1/(x_i - y_j)
* ``hilbert(n)``          entry (i,j) = 1/(i + j - 1), 1-based
* ``toeplitz(diagonals)`` entry (i,j) = v_{j-i}
* ``vmatrix(n)``          entry (i,j) = 1/(n + i - j), 1-based: a Hilbert
                          matrix with columns reversed
* ``amatrix(seq, i, e)``  first column all 1, then a_{i_s}/(a_{i_s}-a_{e_j})
* ``bmatrix(seq, i, e)``  Cauchy matrix on sequence values, 1/(a_{i_s}-a_{e_j})
* ``cmatrix(seq, r, n)``  the (n-r)x(r+1) compound-product family below
* ``crn(seq, r, n)``      cmatrix extended by a scaled identity block
* ``d_scalar(seq, E)``    the prefactor (-1)^{|E|} prod a_l prod_{e<l} (a_l-a_e)

The cmatrix entries, for row index i running over {r+1, ..., n} and
I = {1, ..., r}, I_j = I without j:

  column 0:     (-1)^r   * prod_{l in I} d(i,l) * prod_{e<l in I} d(l,e)
  column j>=1:  (-1)^{r+j} * a_i * prod_{l in I_j} d(i,l)
                 * prod_{l in I_j} a_l * prod_{e<l in I_j} d(l,e)

with d(l,e) = a_l - a_e.  Every factor is nonzero, so every entry is.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .matrix import Matrix
from .rational import as_rational
from .sequences import Sequence

__all__ = [
    "cauchy",
    "hilbert",
    "toeplitz",
    "vmatrix",
    "amatrix",
    "bmatrix",
    "cmatrix",
    "crn",
    "d_scalar",
]


def _check_nodes(name: str, values: tuple[Fraction, ...]) -> None:
    seen: dict[Fraction, int] = {}
    for k, v in enumerate(values):
        if v == 0:
            raise ValueError(f"{name}[{k}] is zero; nodes must be nonzero")
        if v in seen:
            raise ValueError(f"{name}[{seen[v]}] = {name}[{k}] = {v}: nodes must be distinct")
        seen[v] = k


def cauchy(xs, ys) -> Matrix:
    """Cauchy matrix: entry (i,j) = 1/(x_i - y_j)."""
    xv = tuple(as_rational(x) for x in xs)
    yv = tuple(as_rational(y) for y in ys)
    if len(xv) != len(yv) or not xv:
        raise ValueError(f"need equal nonempty node lists, got {len(xv)} and {len(yv)}")
    _check_nodes("x", xv)
    _check_nodes("y", yv)
    for i, x in enumerate(xv):
        for j, y in enumerate(yv):
            if x == y:
                raise ValueError(f"x[{i}] = y[{j}] = {x}: Cauchy nodes must not collide")
    return Matrix([[Fraction(1) / (x - y) for y in yv] for x in xv])


def hilbert(n: int) -> Matrix:
    """Hilbert matrix: entry (i,j) = 1/(i + j - 1) in 1-based indices."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return Matrix([[Fraction(1, i + j - 1) for j in range(1, n + 1)] for i in range(1, n + 1)])


def toeplitz(diagonals) -> Matrix:
    """Toeplitz matrix from its 2n-1 constant diagonals.

    ``diagonals`` lists v_{1-n}, ..., v_0, ..., v_{n-1}; entry (i,j) is
    v_{j-i}, so the first element fills the bottom-left corner.
    """
    diag = tuple(as_rational(v) for v in diagonals)
    if len(diag) % 2 == 0:
        raise ValueError(f"need an odd-length diagonal list (2n-1 values), got {len(diag)}")
    n = (len(diag) + 1) // 2
    return Matrix([[diag[j - i + n - 1] for j in range(n)] for i in range(n)])


def vmatrix(n: int) -> Matrix:
    """Toeplitz matrix with entry (i,j) = 1/(n + i - j), 1-based.

    Equals ``hilbert(n)`` with its columns reversed; row 1 is
    (1/n, 1/(n-1), ..., 1).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return Matrix(
        [[Fraction(1, n + i - j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    )


def _check_index_tuple(name: str, idx: tuple[int, ...]) -> None:
    prev = 0
    for v in idx:
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{name} entries must be integers >= 1, got {v!r}")
        if v <= prev:
            raise ValueError(f"{name} must be strictly increasing, got {idx}")
        prev = v


def _check_selection(i_idx, e_idx) -> tuple[tuple[int, ...], tuple[int, ...]]:
    i_t = tuple(i_idx)
    e_t = tuple(e_idx)
    _check_index_tuple("i_idx", i_t)
    _check_index_tuple("e_idx", e_t)
    overlap = set(i_t) & set(e_t)
    if overlap:
        raise ValueError(f"i_idx and e_idx must be disjoint; both contain {sorted(overlap)}")
    return i_t, e_t


def amatrix(seq: Sequence, i_idx, e_idx) -> Matrix:
    """The (n+1)x(n+1) matrix with first column 1 and entry (s, j>=1)
    a_{i_s} / (a_{i_s} - a_{e_j}).

    ``i_idx`` has n+1 indices, ``e_idx`` has n; they must be disjoint.
    The n = 0 degenerate case returns [[1]].
    """
    i_t, e_t = _check_selection(i_idx, e_idx)
    if len(i_t) != len(e_t) + 1:
        raise ValueError(f"need len(i_idx) = len(e_idx) + 1, got {len(i_t)} and {len(e_t)}")
    rows = []
    for i in i_t:
        a_i = seq.term(i)
        rows.append([Fraction(1)] + [a_i / seq.diff(i, e) for e in e_t])
    return Matrix(rows)


def bmatrix(seq: Sequence, i_idx, e_idx) -> Matrix:
    """Cauchy matrix on sequence values: entry (s,j) = 1/(a_{i_s} - a_{e_j})."""
    i_t, e_t = _check_selection(i_idx, e_idx)
    if len(i_t) != len(e_t) or not i_t:
        raise ValueError(f"need equal nonempty index lists, got {len(i_t)} and {len(e_t)}")
    return Matrix([[Fraction(1) / seq.diff(i, e) for e in e_t] for i in i_t])


def d_scalar(seq: Sequence, indices) -> Fraction:
    """D(E) = (-1)^{|E|} * prod_{l in E} a_l * prod_{e<l in E} (a_l - a_e).

    Nonzero for any nonempty E by distinctness.  D_r is D({1, ..., r}).
    """
    e_t = tuple(indices)
    _check_index_tuple("E", e_t)
    if not e_t:
        raise ValueError("E must be nonempty")
    val = Fraction(-1) if len(e_t) % 2 else Fraction(1)
    for pos, l in enumerate(e_t):
        val *= seq.term(l)
        for e in e_t[:pos]:
            val *= seq.diff(l, e)
    return val


def _cmatrix_rows(seq: Sequence, r: int, n: int) -> list[list[Fraction]]:
    full = tuple(range(1, r + 1))
    a = {l: seq.term(l) for l in full}
    pair_prod_full = math.prod(
        (seq.diff(l, e) for pos, l in enumerate(full) for e in full[:pos]),
        start=Fraction(1),
    )
    rows = []
    for i in range(r + 1, n + 1):
        d_i = {l: seq.diff(i, l) for l in full}
        a_i = seq.term(i)
        row = []
        sign = Fraction(-1) if r % 2 else Fraction(1)
        row.append(sign * math.prod(d_i.values(), start=Fraction(1)) * pair_prod_full)
        for j in full:
            sub = tuple(l for l in full if l != j)
            val = a_i
            for l in sub:
                val *= d_i[l] * a[l]
            for pos, l in enumerate(sub):
                for e in sub[:pos]:
                    val *= seq.diff(l, e)
            if (r + j) % 2:
                val = -val
            row.append(val)
        rows.append(row)
    return rows


def cmatrix(seq: Sequence, r: int, n: int) -> Matrix:
    """The (n-r)x(r+1) matrix of signed compound products (module docstring)."""
    if not (2 <= r < n):
        raise ValueError(f"need 2 <= r < n, got r={r}, n={n}")
    return Matrix(_cmatrix_rows(seq, r, n))


def crn(seq: Sequence, r: int, n: int) -> Matrix:
    """cmatrix extended to (n-r)x(n+1) by appending D_r times the identity."""
    if not (2 <= r < n):
        raise ValueError(f"need 2 <= r < n, got r={r}, n={n}")
    d_r = d_scalar(seq, range(1, r + 1))
    zero = Fraction(0)
    rows = _cmatrix_rows(seq, r, n)
    m = n - r
    for k, row in enumerate(rows):
        row.extend(d_r if t == k else zero for t in range(m))
    return Matrix(rows)
