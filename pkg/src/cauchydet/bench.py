"""Benchmark closed-form determinants against fraction-free elimination.

Correctness precedes speed: for every size the two routes must agree
exactly before any timing is reported; a mismatch raises
:class:`BenchMismatchError` (the CLI maps it to a failure exit).

Each size yields two CSV rows, closed-form first:

    family,n,method,time_ns,max_bits

``time_ns`` is the wall time of the determinant computation alone
(matrix construction is shared and excluded).  ``max_bits`` is the
largest bit length among the intermediate integers the method produced:
the unreduced numerator/denominator products for the closed forms, the
working entries for elimination.
"""

from __future__ import annotations

import csv
import io
import time
from fractions import Fraction

from .closedform import cauchy_det, hilbert_det
from .families import cauchy, hilbert
from .matrix import _det_rows_bareiss

__all__ = ["BenchMismatchError", "run_bench", "write_csv", "BENCH_FAMILIES"]

BENCH_FAMILIES = ("cauchy", "hilbert")


class BenchMismatchError(ValueError):
    """Closed form and elimination disagreed; the benchmark is void."""


def _bench_one(family: str, n: int) -> list[dict]:
    if family == "cauchy":
        # Natural nodes 1..n against n+1..2n: integer entries denominators,
        # worst-case growth for elimination.
        xs = [Fraction(i) for i in range(1, n + 1)]
        ys = [Fraction(i) for i in range(n + 1, 2 * n + 1)]
        matrix = cauchy(xs, ys)

        def closed(track):
            return cauchy_det(xs, ys, track=track).derived_value

    else:
        matrix = hilbert(n)

        def closed(track):
            return hilbert_det(n, track=track)

    rows_f = matrix.to_rows()

    track_closed: dict = {}
    t0 = time.perf_counter_ns()
    value_closed = closed(track_closed)
    t_closed = time.perf_counter_ns() - t0

    track_elim: dict = {}
    t0 = time.perf_counter_ns()
    value_elim = _det_rows_bareiss(rows_f, track_elim)
    t_elim = time.perf_counter_ns() - t0

    if value_closed != value_elim:
        raise BenchMismatchError(
            f"{family} n={n}: closed form {value_closed} != elimination {value_elim}"
        )
    return [
        {"family": family, "n": n, "method": "closed-form",
         "time_ns": t_closed, "max_bits": track_closed.get("max_bits", 0)},
        {"family": family, "n": n, "method": "bareiss",
         "time_ns": t_elim, "max_bits": track_elim.get("max_bits", 0)},
    ]


def run_bench(family: str, sizes) -> list[dict]:
    """Time closed form vs elimination for each size; sizes must ascend."""
    if family not in BENCH_FAMILIES:
        raise ValueError(f"no closed form to benchmark for {family!r}; choose from {BENCH_FAMILIES}")
    sizes = list(sizes)
    if not sizes:
        raise ValueError("need at least one size")
    prev = 0
    for n in sizes:
        if n <= prev:
            raise ValueError(f"sizes must be strictly ascending positive integers, got {sizes}")
        prev = n
    rows = []
    for n in sizes:
        rows.extend(_bench_one(family, n))
    return rows


def write_csv(rows, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["family", "n", "method", "time_ns", "max_bits"])
    for row in rows:
        writer.writerow([row["family"], row["n"], row["method"], row["time_ns"], row["max_bits"]])


def format_csv(rows) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()
