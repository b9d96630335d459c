"""Exact rationals and the two independent determinant routes.

Everything downstream rests on two facts demonstrated here: arithmetic
is exact (fractions.Fraction, no floats anywhere), and every determinant
can be computed two structurally unrelated ways that must agree bit for
bit: memoized Laplace cofactor expansion (no division at all) and
fraction-free Bareiss elimination (exact integer division only).
"""

from fractions import Fraction

from cauchydet.matrix import Matrix
from cauchydet.rational import format_fraction, parse_fraction, rat


def main():
    print("== canonical fraction text ==")
    for text in ("3", "-7/3", "1/2"):
        print(f"  parse {text!r:8} -> {parse_fraction(text)!r}")
    for text in ("2/4", "3/1", "-0"):
        try:
            parse_fraction(text)
        except ValueError as exc:
            print(f"  reject {text!r:7} ({exc})")
    print(f"  rat(6, -8) normalizes to {rat(6, -8)}")

    print("\n== a matrix with exact entries ==")
    m = Matrix([[1, Fraction(1, 2), Fraction(1, 3)],
                [Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)],
                [Fraction(1, 3), Fraction(1, 4), Fraction(1, 5)]])
    print(m)

    print("\n== two routes, one answer ==")
    d_cof = m.det_cofactor()
    d_bar = m.det_bareiss()
    print(f"  cofactor expansion: {format_fraction(d_cof)}")
    print(f"  Bareiss elimination: {format_fraction(d_bar)}")
    assert d_cof == d_bar
    print("  identical, as they must be")

    print("\n== rank by fraction-free elimination ==")
    singular = Matrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    print(f"  rank of the classic singular 3x3: {singular.rank()}")
    print(f"  its determinant: {singular.det_bareiss()}")
    wide = Matrix([[1, 0, 2, 1], [0, 1, 3, 1]])
    print(f"  rank of a 2x4: {wide.rank()}")


if __name__ == "__main__":
    main()
