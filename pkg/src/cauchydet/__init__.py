"""cauchydet: exact determinants, ranks, and formula verification for
structured matrix families.

The package computes over arbitrary-precision rationals only.  It
provides:

* builders for Cauchy, Hilbert, Toeplitz, and several derived families
  parameterized by a sequence of distinct nonzero rationals
  (:mod:`cauchydet.families`, :mod:`cauchydet.sequences`);
* two independent determinant routes (memoized cofactor expansion and
  fraction-free Bareiss elimination) plus a fraction-free rank
  (:mod:`cauchydet.matrix`);
* closed-form determinant formulas decomposed into a structural product
  times printed and derived prefactors (:mod:`cauchydet.closedform`);
* verification suites that certify every formula against the
  elimination oracle and ledger the constants the oracle refutes
  (:mod:`cauchydet.verify`);
* a CLI (``cauchydet gen|det|rank|verify|bench``) with a strict JSON
  matrix file format (:mod:`cauchydet.cli`, :mod:`cauchydet.matio`).
"""

from .closedform import (
    StructuralDet,
    amatrix_det,
    cauchy_det,
    cprime_det,
    hilbert_det,
    hilbert_det_reciprocal,
    product_diff_identity,
    quotient_diff_identity,
    superfactorial,
)
from .families import (
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
from .matio import MatrixFormatError, dumps_matrix, load_matrix, loads_matrix, save_matrix
from .matrix import Matrix
from .rational import format_fraction, parse_fraction, rat
from .rng import SplitMix64
from .sequences import Sequence
from .verify import (
    SUITE_NAMES,
    CaseResult,
    ErrataEntry,
    SuiteConfig,
    SuiteReport,
    check_minors,
    check_scaling_invariance,
    check_theorem,
    check_toeplitz_chain,
    resolve_prefactor,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "rat",
    "parse_fraction",
    "format_fraction",
    "SplitMix64",
    "Matrix",
    "Sequence",
    "cauchy",
    "hilbert",
    "toeplitz",
    "vmatrix",
    "amatrix",
    "bmatrix",
    "cmatrix",
    "crn",
    "d_scalar",
    "StructuralDet",
    "cauchy_det",
    "superfactorial",
    "hilbert_det",
    "hilbert_det_reciprocal",
    "product_diff_identity",
    "quotient_diff_identity",
    "amatrix_det",
    "cprime_det",
    "CaseResult",
    "ErrataEntry",
    "SuiteConfig",
    "SuiteReport",
    "SUITE_NAMES",
    "resolve_prefactor",
    "check_theorem",
    "check_minors",
    "check_scaling_invariance",
    "check_toeplitz_chain",
    "run_suite",
    "MatrixFormatError",
    "load_matrix",
    "save_matrix",
    "loads_matrix",
    "dumps_matrix",
]
