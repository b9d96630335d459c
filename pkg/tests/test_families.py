from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cauchydet.families import (
    amatrix,
    bmatrix,
    cauchy,
    cmatrix,
    crn,
    d_scalar,
    hilbert,
    toeplitz,
    vmatrix,
)
from cauchydet.matrix import Matrix
from cauchydet.sequences import Sequence

F = Fraction
NAT = Sequence.natural()
RECIP = Sequence.reciprocal()


class TestCauchy:
    def test_frozen_2x2(self):
        m = cauchy((1, 2), (3, 4))
        assert m == Matrix([[F(-1, 2), F(-1, 3)], [F(-1), F(-1, 2)]])

    def test_1x1(self):
        assert cauchy((2,), (1,)) == Matrix([[1]])

    def test_corner_entry(self):
        assert cauchy((1, 2, 3), (4, 5, 6))[0, 0] == F(-1, 3)

    def test_collision_names_pair(self):
        with pytest.raises(ValueError, match=r"x\[1\] = y\[0\]"):
            cauchy((1, 2), (2, 3))

    def test_duplicate_node_rejected(self):
        with pytest.raises(ValueError, match="distinct"):
            cauchy((1, 1), (3, 4))

    def test_zero_node_rejected(self):
        with pytest.raises(ValueError, match="nonzero"):
            cauchy((0, 1), (3, 4))

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="equal nonempty"):
            cauchy((1, 2), (3,))
        with pytest.raises(ValueError, match="equal nonempty"):
            cauchy((), ())


class TestHilbert:
    def test_frozen(self):
        assert hilbert(1) == Matrix([[1]])
        assert hilbert(2) == Matrix([[1, F(1, 2)], [F(1, 2), F(1, 3)]])
        assert hilbert(3)[2, 2] == F(1, 5)

    def test_symmetric(self):
        h = hilbert(5)
        assert h == h.transpose()

    def test_bad_n(self):
        with pytest.raises(ValueError):
            hilbert(0)


class TestToeplitz:
    def test_frozen(self):
        assert toeplitz((2, 1, 3)) == Matrix([[1, 3], [2, 1]])
        assert toeplitz((0, 0, 0)) == Matrix.zeros(2, 2)
        assert toeplitz((7,)) == Matrix([[7]])

    def test_even_length_rejected(self):
        with pytest.raises(ValueError, match="odd"):
            toeplitz((1, 2))

    def test_constant_diagonals(self):
        m = toeplitz((1, 2, 3, 4, 5))
        for i in range(2):
            for j in range(2):
                assert m[i, j] == m[i + 1, j + 1]


class TestVmatrix:
    def test_frozen(self):
        assert vmatrix(2) == Matrix([[F(1, 2), 1], [F(1, 3), F(1, 2)]])
        assert vmatrix(1) == Matrix([[1]])
        assert vmatrix(3)[2, 0] == F(1, 5)

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 7])
    def test_is_column_reversed_hilbert(self, n):
        h = hilbert(n)
        v = vmatrix(n)
        assert all(
            v[i, j] == h[i, n - 1 - j] for i in range(n) for j in range(n)
        )

    @pytest.mark.parametrize("n", [1, 2, 4, 6])
    def test_is_toeplitz_on_reciprocal_diagonals(self, n):
        diag = [F(1, n - k) for k in range(1 - n, n)]
        assert vmatrix(n) == toeplitz(diag)

    def test_bad_n(self):
        with pytest.raises(ValueError):
            vmatrix(0)


class TestAmatrix:
    def test_frozen_natural(self):
        m = amatrix(NAT, (3, 4, 5), (1, 2))
        assert m.to_rows() == [
            [1, F(3, 2), 3],
            [1, F(4, 3), 2],
            [1, F(5, 4), F(5, 3)],
        ]

    def test_degenerate_n0(self):
        assert amatrix(NAT, (7,), ()) == Matrix([[1]])

    def test_reciprocal_entry(self):
        assert amatrix(RECIP, (3, 4), (1,))[0, 1] == F(-1, 2)

    def test_overlap_rejected(self):
        with pytest.raises(ValueError, match="disjoint"):
            amatrix(NAT, (1, 2, 3), (2, 4))

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match=r"len\(i_idx\)"):
            amatrix(NAT, (3, 4), (1, 2))

    def test_non_increasing_rejected(self):
        with pytest.raises(ValueError, match="increasing"):
            amatrix(NAT, (4, 3, 5), (1, 2))

    @pytest.mark.parametrize("seq", [NAT, RECIP, Sequence.random(11, 9)])
    def test_entry_times_diff_recovers_term(self, seq):
        # A entry (s, j>=1) is a_{i_s}/d(i_s,e_j): multiplying back by the
        # difference must return a_{i_s} exactly.
        i_idx, e_idx = (4, 6, 7), (2, 5)
        m = amatrix(seq, i_idx, e_idx)
        for s, i in enumerate(i_idx):
            assert m[s, 0] == 1
            for j, e in enumerate(e_idx):
                assert m[s, j + 1] * seq.diff(i, e) == seq.term(i)


class TestBmatrix:
    def test_frozen_reciprocal(self):
        m = bmatrix(RECIP, (3, 4), (1, 2))
        assert m == Matrix([[F(-3, 2), -6], [F(-4, 3), -4]])

    def test_frozen_natural_1x1(self):
        assert bmatrix(NAT, (3,), (1,)) == Matrix([[F(1, 2)]])

    def test_overlap_rejected(self):
        with pytest.raises(ValueError, match="disjoint"):
            bmatrix(NAT, (1, 3), (3, 4))

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="equal nonempty"):
            bmatrix(NAT, (1, 2), (3,))

    @given(st.integers(min_value=0, max_value=2**32))
    @settings(max_examples=25, deadline=None)
    def test_equals_cauchy_on_sequence_values(self, seed):
        seq = Sequence.random(seed, 9)
        i_idx, e_idx = (1, 3, 6), (2, 4, 5)
        xs = [seq.term(i) for i in i_idx]
        ys = [seq.term(e) for e in e_idx]
        assert bmatrix(seq, i_idx, e_idx) == cauchy(xs, ys)


class TestDScalar:
    def test_frozen(self):
        assert d_scalar(NAT, (1, 2)) == 2
        assert d_scalar(NAT, (1, 2, 3)) == -12

    @pytest.mark.parametrize("seq", [NAT, RECIP, Sequence.random(3, 9)])
    def test_singleton_is_minus_first_term(self, seq):
        assert d_scalar(seq, (1,)) == -seq.term(1)

    @pytest.mark.parametrize("seq,upto", [(NAT, 6), (RECIP, 6), (Sequence.random(9, 9), 5)])
    def test_nonzero(self, seq, upto):
        for r in range(1, upto + 1):
            assert d_scalar(seq, range(1, r + 1)) != 0

    def test_empty_rejected(self):
        with pytest.raises(ValueError, match="nonempty"):
            d_scalar(NAT, ())

    def test_non_increasing_rejected(self):
        with pytest.raises(ValueError, match="increasing"):
            d_scalar(NAT, (2, 1))


class TestCmatrix:
    def test_frozen_r2_n5(self):
        m = cmatrix(NAT, 2, 5)
        assert m.to_rows() == [[2, -6, 6], [6, -16, 12], [12, -30, 20]]
        # Cross-check from an independent route: these three rows are
        # square, and their determinant is 8 by cofactor expansion.
        assert m.det_cofactor() == 8

    def test_frozen_r2_n4(self):
        assert cmatrix(NAT, 2, 4).to_rows() == [[2, -6, 6], [6, -16, 12]]

    def test_shape(self):
        assert cmatrix(NAT, 3, 7).shape == (4, 4)
        assert cmatrix(NAT, 2, 9).shape == (7, 3)

    @pytest.mark.parametrize("seq", [NAT, RECIP, Sequence.random(21, 9)])
    @pytest.mark.parametrize("r,n", [(2, 4), (2, 6), (3, 5), (4, 7)])
    def test_entries_nonzero(self, seq, r, n):
        m = cmatrix(seq, r, n)
        assert all(m[i, j] != 0 for i in range(m.rows) for j in range(m.cols))

    @pytest.mark.parametrize("r,n", [(1, 3), (2, 2), (3, 2), (0, 5)])
    def test_range_rejected(self, r, n):
        with pytest.raises(ValueError, match="2 <= r < n"):
            cmatrix(NAT, r, n)


class TestCrn:
    def test_frozen_r2_n4(self):
        m = crn(NAT, 2, 4)
        assert m.to_rows() == [[2, -6, 6, 2, 0], [6, -16, 12, 0, 2]]

    def test_shape(self):
        assert crn(NAT, 3, 7).shape == (4, 8)

    def test_d_block_diagonal(self):
        m = crn(NAT, 2, 5)
        d2 = d_scalar(NAT, (1, 2))
        for i in range(3):
            for j in range(3):
                assert m[i, 3 + j] == (d2 if i == j else 0)

    def test_first_block_is_cmatrix(self):
        c = cmatrix(RECIP, 3, 6)
        full = crn(RECIP, 3, 6)
        assert full.submatrix(range(3), range(4)) == c

    def test_range_rejected(self):
        with pytest.raises(ValueError, match="2 <= r < n"):
            crn(NAT, 2, 2)
