"""Closed forms, and why every one carries two constants.

Each closed-form determinant here is split into a structural product of
differences times a scalar prefactor - and the prefactor exists in two
versions.  ``printed_prefactor`` is the constant exactly as the source
formula states it; ``derived_prefactor`` is the one this package derives
and checks against the elimination oracle.  For four formulas the two
disagree; the demo exhibits each disagreement on a concrete instance.
Nothing is silently corrected: the verifier (demo 04) records every
disagreement as an errata entry with a replayable witness.
"""

from cauchydet.closedform import (
    amatrix_det,
    cauchy_det,
    cprime_det,
    hilbert_det,
    hilbert_det_reciprocal,
    quotient_diff_identity,
)
from cauchydet.families import amatrix, cauchy, cmatrix, hilbert
from cauchydet.sequences import Sequence


def main():
    nat = Sequence.natural()

    print("== cauchy determinant: the sign of the pair ordering ==")
    sd = cauchy_det((1, 2), (3, 4))
    oracle = cauchy((1, 2), (3, 4)).det_cofactor()
    print(f"  oracle (cofactor):  {oracle}")
    print(f"  derived value:      {sd.derived_value}")
    print(f"  printed value:      {sd.printed_value}   <- opposite sign at n=2")

    print("\n== hilbert determinant: superfactorial ratio ==")
    for n in (1, 2, 3, 4):
        closed = hilbert_det(n)
        print(f"  n={n}: closed {closed} = elimination {hilbert(n).det_bareiss()}"
              f"   (1/det = {hilbert_det_reciprocal(n)}, an integer)")

    print("\n== the difference-quotient identity ==")
    lhs, printed, derived = quotient_diff_identity(nat, 1, 2, 3, 4)
    print(f"  lhs = {lhs}, printed rhs = {printed}, derived rhs = {derived}")
    print("  the printed numerator has one difference factor reversed")

    print("\n== bordered-ratio determinant ==")
    sd = amatrix_det(nat, (3, 4, 5), (1, 2))
    oracle = amatrix(nat, (3, 4, 5), (1, 2)).det_cofactor()
    print(f"  oracle {oracle}; derived {sd.derived_value}; printed {sd.printed_value}")
    print(f"  constant: printed {sd.printed_prefactor}, derived {sd.derived_prefactor}"
          f"  (extra factor (-1)^(n(n-1)/2))")

    print("\n== compound-product determinant: exponent and sign ==")
    sd = cprime_det(nat, 2, (3, 4, 5))
    oracle = cmatrix(nat, 2, 5).det_cofactor()
    print(f"  r=2: oracle {oracle}; derived {sd.derived_value} "
          f"(D_2^2 x structural); printed {sd.printed_value} (D_2^3: exponent off by one)")
    sd3 = cprime_det(nat, 3, (4, 5, 6, 7))
    oracle3 = cmatrix(nat, 3, 7).det_cofactor()
    print(f"  r=3: oracle {oracle3}; derived {sd3.derived_value}; "
          f"printed {sd3.printed_value}")
    print("  at odd r the certified constant is -(D_r^r): sign and exponent both matter")


if __name__ == "__main__":
    main()
