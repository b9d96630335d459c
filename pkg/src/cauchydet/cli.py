"""Command-line front end.

Subcommands:

* ``gen``     build a family matrix and write it to a JSON file
* ``det``     determinant of a matrix file (bareiss, cofactor, closed-form)
* ``rank``    rank of a matrix file
* ``verify``  run a verification suite, emit a JSON or CSV report
* ``bench``   time closed form vs elimination, emit CSV

Exit codes: 0 success / all cases pass; 1 verification or benchmark
value failure; 2 usage error; 3 malformed input file.  Results are
deterministic for a fixed argv (including ``--seed``); ``NO_COLOR``
disables the colored verify summary on stderr.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .bench import BENCH_FAMILIES, BenchMismatchError, run_bench, write_csv
from .closedform import cauchy_det, hilbert_det
from .families import amatrix, bmatrix, cauchy, cmatrix, crn, hilbert, toeplitz, vmatrix
from .matio import MatrixFormatError, load_matrix, save_matrix
from .matrix import Matrix
from .rational import format_fraction
from .sequences import Sequence
from .verify import SUITE_NAMES, SuiteConfig, run_suite

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    """Bad flag combination or values; maps to exit code 2."""


def _u64(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 bits unsigned: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cauchydet",
        description="Exact determinants, ranks, and formula verification for structured matrix families.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True, metavar="SUBCOMMAND")

    p_gen = sub.add_parser("gen", help="generate a family matrix into a JSON file")
    p_gen.add_argument(
        "--family",
        required=True,
        choices=["cauchy", "hilbert", "toeplitz", "vmatrix", "amatrix", "bmatrix", "cmatrix", "crn"],
    )
    p_gen.add_argument(
        "--seq",
        default="nat",
        help="sequence spec: nat | recip | list:1,2,5/3 | random:<seed>:<bound> (default nat; "
        "ignored by hilbert and vmatrix)",
    )
    p_gen.add_argument("--n", type=int, help="size parameter (meaning depends on family)")
    p_gen.add_argument("--r", type=int, help="r parameter for cmatrix/crn")
    p_gen.add_argument("--i-idx", dest="i_idx", help="comma-separated i-indices (amatrix/bmatrix)")
    p_gen.add_argument("--e-idx", dest="e_idx", help="comma-separated e-indices (amatrix/bmatrix)")
    p_gen.add_argument("--out", required=True, help="output path for the matrix JSON")

    p_det = sub.add_parser("det", help="determinant of a matrix file")
    p_det.add_argument("--in", dest="path", required=True, help="matrix JSON path")
    p_det.add_argument(
        "--method", choices=["bareiss", "cofactor", "closed-form"], default="bareiss"
    )

    p_rank = sub.add_parser("rank", help="rank of a matrix file")
    p_rank.add_argument("--in", dest="path", required=True, help="matrix JSON path")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True, choices=SUITE_NAMES)
    p_verify.add_argument("--seed", type=_u64, default=1, help="64-bit unsigned seed (default 1)")
    p_verify.add_argument("--max-n", dest="max_n", type=int, help="override the suite's size bound")
    p_verify.add_argument("--max-r", dest="max_r", type=int, help="override the suite's r bound")
    p_verify.add_argument("--trials", type=int, help="override the suite's per-shape trial count")
    p_verify.add_argument(
        "--seq", help="restrict sequence-driven suites to one sequence spec (default: rotate kinds)"
    )
    p_verify.add_argument("--format", choices=["json", "csv"], default="json")
    p_verify.add_argument("--out", help="report path (default: stdout)")

    p_bench = sub.add_parser("bench", help="benchmark closed form vs elimination")
    p_bench.add_argument("--family", required=True, choices=list(BENCH_FAMILIES))
    p_bench.add_argument("--sizes", required=True, help="comma-separated ascending sizes, e.g. 50,100,200")
    p_bench.add_argument("--csv", required=True, help="output CSV path")

    return parser


def _parse_indices(text: str, flag: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"{flag} must be comma-separated integers, got {text!r}") from None
    if not values:
        raise UsageError(f"{flag} must not be empty")
    return values


def _require_n(args, minimum: int = 1) -> int:
    if args.n is None:
        raise UsageError(f"--family {args.family} requires --n")
    if args.n < minimum:
        raise UsageError(f"--n must be >= {minimum} for --family {args.family}, got {args.n}")
    return args.n


def _cmd_gen(args) -> int:
    seq = Sequence.parse(args.seq)
    family = args.family
    if family == "cauchy":
        n = _require_n(args)
        xs = [seq.term(l) for l in range(1, n + 1)]
        ys = [seq.term(l) for l in range(n + 1, 2 * n + 1)]
        m = cauchy(xs, ys)
    elif family == "hilbert":
        m = hilbert(_require_n(args))
    elif family == "toeplitz":
        n = _require_n(args)
        m = toeplitz([seq.term(l) for l in range(1, 2 * n)])
    elif family == "vmatrix":
        m = vmatrix(_require_n(args))
    elif family in ("amatrix", "bmatrix"):
        if (args.i_idx is None) != (args.e_idx is None):
            raise UsageError("--i-idx and --e-idx must be given together")
        if args.i_idx is not None:
            i_idx = _parse_indices(args.i_idx, "--i-idx")
            e_idx = _parse_indices(args.e_idx, "--e-idx") if args.e_idx else ()
        elif family == "amatrix":
            n = _require_n(args, minimum=0)
            i_idx = tuple(range(n + 1, 2 * n + 2))
            e_idx = tuple(range(1, n + 1))
        else:
            n = _require_n(args)
            i_idx = tuple(range(n + 1, 2 * n + 1))
            e_idx = tuple(range(1, n + 1))
        m = amatrix(seq, i_idx, e_idx) if family == "amatrix" else bmatrix(seq, i_idx, e_idx)
    else:  # cmatrix, crn
        if args.r is None or args.n is None:
            raise UsageError(f"--family {family} requires --r and --n")
        builder = cmatrix if family == "cmatrix" else crn
        m = builder(seq, args.r, args.n)
    save_matrix(m, args.out)
    return 0


def _hilbert_size(m: Matrix) -> int | None:
    n = m.rows
    for i in range(n):
        for j in range(n):
            if m[i, j] != Fraction(1, i + j + 1):
                return None
    return n


def _closed_form_det(m: Matrix) -> Fraction:
    """Recognize a matrix with a closed-form determinant and evaluate it.

    Handles the Hilbert pattern directly, then general reciprocal-of-
    differences structure: nodes are recovered from the first row and
    column (the node sets are only determined up to a common shift, so
    y_0 is pinned to 0 and everything is shifted to nonzero values
    afterwards), then every entry is checked against the recovered nodes.
    """
    if m.rows != m.cols:
        raise UsageError(f"closed-form determinant needs a square matrix, got {m.rows}x{m.cols}")
    if _hilbert_size(m) is not None:
        return hilbert_det(m.rows)
    n = m.rows
    for i in range(n):
        for j in range(n):
            if m[i, j] == 0:
                raise UsageError(
                    f"no closed form recognized: entry ({i}, {j}) is zero, "
                    "matrix is not of reciprocal-difference type"
                )
    xs = [1 / m[i, 0] for i in range(n)]  # gauge y_0 = 0
    ys = [xs[0] - 1 / m[0, j] for j in range(n)]
    for i in range(n):
        for j in range(n):
            if m[i, j] * (xs[i] - ys[j]) != 1:
                raise UsageError(
                    f"no closed form recognized: entry ({i}, {j}) breaks the "
                    "reciprocal-difference pattern"
                )
    if len(set(xs)) != n or len(set(ys)) != n:
        raise UsageError("no closed form recognized: degenerate node structure (repeated rows or columns)")
    shift = 1 + max(abs(v) for v in xs + ys)
    return cauchy_det([x + shift for x in xs], [y + shift for y in ys]).derived_value


def _cmd_det(args) -> int:
    m = load_matrix(args.path)
    if args.method == "bareiss":
        value = m.det_bareiss()
    elif args.method == "cofactor":
        value = m.det_cofactor()
    else:
        value = _closed_form_det(m)
    print(format_fraction(value))
    return 0


def _cmd_rank(args) -> int:
    print(load_matrix(args.path).rank())
    return 0


def _supports_color(stream) -> bool:
    return "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


def _cmd_verify(args) -> int:
    cfg = SuiteConfig(
        seed=args.seed,
        max_n=args.max_n,
        max_r=args.max_r,
        trials=args.trials,
        seq=Sequence.parse(args.seq) if args.seq is not None else None,
    )
    report = run_suite(args.suite, cfg)
    text = report.to_json() if args.format == "json" else report.to_csv()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    s = report.summary
    line = (
        f"suite {report.suite}: {s['pass']} pass, {s['fail']} fail, "
        f"{s['errata']} errata-match ({report.case_count} cases, "
        f"{len(report.errata)} errata entries)"
    )
    if _supports_color(sys.stderr):
        color = "\x1b[32m" if report.passed else "\x1b[31m"
        line = f"{color}{line}\x1b[0m"
    print(line, file=sys.stderr)
    return 0 if report.passed else 1


def _cmd_bench(args) -> int:
    try:
        sizes = [int(part) for part in args.sizes.split(",")]
    except ValueError:
        raise UsageError(f"--sizes must be comma-separated integers, got {args.sizes!r}") from None
    rows = run_bench(args.family, sizes)
    with open(args.csv, "w", encoding="utf-8", newline="") as fh:
        write_csv(rows, fh)
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "det": _cmd_det,
    "rank": _cmd_rank,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.cmd](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MatrixFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BenchMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        # Family/sequence preconditions violated by user-supplied values.
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
