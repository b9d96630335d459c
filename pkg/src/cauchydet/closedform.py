"""Closed-form determinant formulas, split into structure times constant.

Each formula here is the product-of-differences part of a determinant
("structural") together with *two* scalar prefactors:

* ``printed_prefactor``: the constant exactly as the source formula
  states it;
* ``derived_prefactor``: the constant this package derives and the
  elimination oracle confirms.

The two disagree for several formulas (sign of the Cauchy determinant,
sign of the difference-quotient identity, sign of the bordered-ratio
determinant, sign and exponent of the compound-product determinant).
Nothing is silently corrected: both values are first-class and the
verifier records which one the oracle certifies, so a disagreement is
an errata entry, not a hidden patch.

Sign conventions for the structural parts are chosen so that
``derived_value`` is the oracle determinant exactly, with
``derived_prefactor`` free of matrix-size-dependent signs wherever
possible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .families import d_scalar
from .rational import as_rational
from .sequences import Sequence

try:
    from gmpy2 import mpz as _mpz

    _HAVE_GMPY2 = True
except ImportError:
    _mpz = int
    _HAVE_GMPY2 = False

__all__ = [
    "StructuralDet",
    "cauchy_det",
    "superfactorial",
    "hilbert_det",
    "hilbert_det_reciprocal",
    "product_diff_identity",
    "quotient_diff_identity",
    "amatrix_det",
    "cprime_det",
]


@dataclass(frozen=True)
class StructuralDet:
    """A determinant value decomposed as prefactor times structural part."""

    family: str
    structural: Fraction
    printed_prefactor: Fraction
    derived_prefactor: Fraction

    @property
    def printed_value(self) -> Fraction:
        return self.printed_prefactor * self.structural

    @property
    def derived_value(self) -> Fraction:
        return self.derived_prefactor * self.structural


def _int_prod(values: list[int]) -> int:
    """Balanced product tree; pairs operands of similar size so the big
    multiplications happen on balanced halves (and under GMP when
    available)."""
    if not values:
        return 1
    items = [_mpz(v) for v in values] if _HAVE_GMPY2 else list(values)
    while len(items) > 1:
        items = [
            items[i] * items[i + 1] if i + 1 < len(items) else items[i]
            for i in range(0, len(items), 2)
        ]
    return int(items[0])


def _prod_fractions(factors: list[Fraction], track: dict | None = None) -> Fraction:
    """Exact product of many fractions via two integer product trees and a
    single final reduction.  ``track``, if given, records ``max_bits`` of
    the unreduced numerator/denominator (benchmark instrumentation)."""
    num = _int_prod([f.numerator for f in factors])
    den = _int_prod([f.denominator for f in factors])
    if track is not None:
        track["max_bits"] = max(
            track.get("max_bits", 0), abs(num).bit_length(), den.bit_length()
        )
    return Fraction(num, den)


def _sign(exponent: int) -> Fraction:
    return Fraction(-1) if exponent % 2 else Fraction(1)


def cauchy_det(xs, ys, track: dict | None = None) -> StructuralDet:
    """Closed form for the determinant of the Cauchy matrix 1/(x_i - y_j).

    structural = prod_{i<j} (x_j - x_i)(y_i - y_j) / prod_{i,j} (x_i - y_j)

    In this orientation the structural part *is* the determinant, so
    derived_prefactor = 1.  The printed form orders the numerator pairs as
    (x_i - x_j)(y_i - y_j), which differs by (-1)^{n(n-1)/2}; that sign is
    carried as printed_prefactor and resolved by the verifier.
    """
    xv = tuple(as_rational(x) for x in xs)
    yv = tuple(as_rational(y) for y in ys)
    if len(xv) != len(yv) or not xv:
        raise ValueError(f"need equal nonempty node lists, got {len(xv)} and {len(yv)}")
    n = len(xv)
    num_factors: list[Fraction] = []
    den_factors: list[Fraction] = []
    for j in range(n):
        for i in range(j):
            dx = xv[j] - xv[i]
            dy = yv[i] - yv[j]
            if dx == 0:
                raise ValueError(f"x[{i}] = x[{j}] = {xv[i]}: nodes must be distinct")
            if dy == 0:
                raise ValueError(f"y[{i}] = y[{j}] = {yv[i]}: nodes must be distinct")
            num_factors.append(dx)
            num_factors.append(dy)
    for i in range(n):
        for j in range(n):
            d = xv[i] - yv[j]
            if d == 0:
                raise ValueError(f"x[{i}] = y[{j}] = {xv[i]}: Cauchy nodes must not collide")
            den_factors.append(d)
    structural = _prod_fractions(num_factors, track) / _prod_fractions(den_factors, track)
    return StructuralDet(
        family="cauchy",
        structural=structural,
        printed_prefactor=_sign(n * (n - 1) // 2),
        derived_prefactor=Fraction(1),
    )


def superfactorial(n: int) -> int:
    """c_n = prod_{i=1}^{n-1} i!; c_1 = 1 (empty product)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = 1
    fact = 1
    for i in range(1, n):
        fact *= i
        total *= fact
    return total


def hilbert_det(n: int, track: dict | None = None) -> Fraction:
    """Determinant of the n x n Hilbert matrix: c_n^4 / c_{2n}."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    num = superfactorial(n) ** 4
    den = superfactorial(2 * n)
    if track is not None:
        track["max_bits"] = max(track.get("max_bits", 0), num.bit_length(), den.bit_length())
    return Fraction(num, den)


def hilbert_det_reciprocal(n: int) -> int:
    """1/det(Hilbert_n) as the integer n! * prod_{i=1}^{2n-1} C(i, floor(i/2)).

    Values 1, 12, 2160, ... ; always an integer, and exactly the
    reciprocal of :func:`hilbert_det`.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return math.factorial(n) * math.prod(math.comb(i, i // 2) for i in range(1, 2 * n))


def product_diff_identity(seq: Sequence, e: int, l: int, s: int) -> tuple[Fraction, Fraction]:
    """Three-index product identity:

        a_s * d(l,e) - a_l * d(s,e)  =  -a_e * d(s,l)

    Returns (lhs, rhs) computed independently; they are equal for every
    index choice, including degenerate coincidences.
    """
    lhs = seq.term(s) * seq.diff(l, e) - seq.term(l) * seq.diff(s, e)
    rhs = -seq.term(e) * seq.diff(s, l)
    return lhs, rhs


def quotient_diff_identity(
    seq: Sequence, e: int, l: int, s: int, t: int
) -> tuple[Fraction, Fraction, Fraction]:
    """Difference of quotients collapsed to a single fraction:

        d(t,e)/d(t,l) - d(s,e)/d(s,l)

    Returns (lhs, printed_rhs, derived_rhs) where

        printed_rhs = d(t,s) * d(l,e) / (d(t,l) * d(s,l))
        derived_rhs = d(t,s) * d(e,l) / (d(t,l) * d(s,l))

    lhs always equals derived_rhs; the printed form has the sign of the
    second numerator factor reversed, so it disagrees whenever both
    numerator factors are nonzero (t != s and e != l).
    """
    if t == l or s == l:
        raise ValueError(f"need t != l and s != l for nonzero denominators, got l={l}, s={s}, t={t}")
    dtl = seq.diff(t, l)
    dsl = seq.diff(s, l)
    lhs = seq.diff(t, e) / dtl - seq.diff(s, e) / dsl
    dts = seq.diff(t, s)
    printed = dts * seq.diff(l, e) / (dtl * dsl)
    derived = dts * seq.diff(e, l) / (dtl * dsl)
    return lhs, printed, derived


def amatrix_det(seq: Sequence, i_idx, e_idx) -> StructuralDet:
    """Closed form for the bordered ratio matrix built by
    :func:`~cauchydet.families.amatrix` (first column 1, then
    a_{i_s}/d(i_s, e_j)).

    structural = prod_{s'<s} d(i_s, i_{s'}) / prod_{s,j} d(i_s, e_j)
    printed_prefactor = D(E) on the e-index set
    derived_prefactor = (-1)^{n(n-1)/2} * D(E)
    """
    i_t = tuple(i_idx)
    e_t = tuple(e_idx)
    n = len(e_t)
    if n < 1:
        raise ValueError("need at least one e-index")
    if len(i_t) != n + 1:
        raise ValueError(f"need len(i_idx) = len(e_idx) + 1, got {len(i_t)} and {len(e_t)}")
    num = Fraction(1)
    for pos, i in enumerate(i_t):
        for i_prev in i_t[:pos]:
            num *= seq.diff(i, i_prev)
    den = Fraction(1)
    for i in i_t:
        for e in e_t:
            den *= seq.diff(i, e)
    printed = d_scalar(seq, e_t)
    return StructuralDet(
        family="amatrix",
        structural=num / den,
        printed_prefactor=printed,
        derived_prefactor=_sign(n * (n - 1) // 2) * printed,
    )


def cprime_det(seq: Sequence, r: int, i_idx) -> StructuralDet:
    """Closed form for the determinant of C', the square submatrix of the
    compound-product family :func:`~cauchydet.families.cmatrix` on r+1
    selected rows.

    structural = prod_{s'<s} d(i_s, i_{s'})
    printed_prefactor = D_r^{r+1}   (printed sign (-1)^{r(r+3)} is +1
                                     identically: r and r+3 have opposite
                                     parity, so the exponent is even)
    derived_prefactor = (-1)^r * D_r^r

    The derived constant is the one the elimination oracle certifies; it
    differs from the printed one in both exponent and, for odd r, sign.
    """
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    i_t = tuple(i_idx)
    if len(i_t) != r + 1:
        raise ValueError(f"need r + 1 = {r + 1} row indices, got {len(i_t)}")
    prev = r
    for i in i_t:
        if not isinstance(i, int) or i <= prev:
            raise ValueError(
                f"i_idx must be strictly increasing integers > r = {r}, got {i_t}"
            )
        prev = i
    structural = Fraction(1)
    for pos, i in enumerate(i_t):
        for i_prev in i_t[:pos]:
            structural *= seq.diff(i, i_prev)
    d_r = d_scalar(seq, range(1, r + 1))
    return StructuralDet(
        family="cprime",
        structural=structural,
        printed_prefactor=d_r ** (r + 1),
        derived_prefactor=_sign(r) * d_r**r,
    )
