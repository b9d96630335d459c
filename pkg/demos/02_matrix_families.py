"""Tour of the structured matrix families.

All families are parameterized either by explicit nodes or by a sequence
a_1, a_2, ... of pairwise distinct nonzero rationals.  The interesting
ones are built from the differences d(l,e) = a_l - a_e:

* cauchy / bmatrix   reciprocals of node differences
* hilbert / vmatrix  the classical special case a_l = 1/l in disguise
* amatrix            a bordered ratio matrix (first column all ones)
* cmatrix / crn      signed products of differences, extended by a
                     scaled identity block; its rank is the main theorem
"""

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
from cauchydet.sequences import Sequence


def show(title, m):
    print(f"\n== {title} ==")
    print(m)


def main():
    nat = Sequence.natural()
    recip = Sequence.reciprocal()
    print("sequences:  nat ->", nat.terms(5), " recip ->", recip.terms(5))

    show("cauchy on nodes x=(1,2), y=(3,4)", cauchy((1, 2), (3, 4)))
    show("hilbert n=3", hilbert(3))
    show("toeplitz from diagonals (2,1,3)", toeplitz((2, 1, 3)))

    # vmatrix is the Hilbert matrix with its columns reversed.
    v = vmatrix(3)
    show("vmatrix n=3 (column-reversed hilbert)", v)

    show("amatrix, natural seq, i=(3,4,5), e=(1,2)", amatrix(nat, (3, 4, 5), (1, 2)))
    show("bmatrix, reciprocal seq, i=(3,4), e=(1,2)", bmatrix(recip, (3, 4), (1, 2)))

    print("\n== the compound-product family ==")
    print("scalar D on {1,2} (natural):", d_scalar(nat, (1, 2)))
    print("scalar D on {1,2,3} (natural):", d_scalar(nat, (1, 2, 3)))
    show("cmatrix r=2, n=5 (natural)", cmatrix(nat, 2, 5))
    c = crn(nat, 2, 5)
    show("crn r=2, n=5: cmatrix extended by D_2 x identity", c)
    print(f"\nrank of crn(2, 5): {c.rank()}  (always n - r = 3; see demo 04)")


if __name__ == "__main__":
    main()
