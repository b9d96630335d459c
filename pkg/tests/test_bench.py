import pytest

from cauchydet.bench import (
    BENCH_FAMILIES,
    BenchMismatchError,
    format_csv,
    run_bench,
)


class TestRunBench:
    def test_cauchy_rows(self):
        rows = run_bench("cauchy", [2, 3])
        assert len(rows) == 4
        # Closed-form row precedes the elimination row for each size.
        assert [r["method"] for r in rows] == ["closed-form", "bareiss"] * 2
        assert [r["n"] for r in rows] == [2, 2, 3, 3]
        for r in rows:
            assert r["family"] == "cauchy"
            assert r["time_ns"] >= 0
            assert r["max_bits"] > 0

    def test_hilbert_agrees(self):
        rows = run_bench("hilbert", [5])
        assert len(rows) == 2  # no exception = values agreed exactly

    @pytest.mark.parametrize("sizes", [[], [3, 2], [2, 2], [0]])
    def test_bad_sizes(self, sizes):
        with pytest.raises(ValueError):
            run_bench("cauchy", sizes)

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="no closed form"):
            run_bench("toeplitz", [3])

    def test_families_tuple(self):
        assert BENCH_FAMILIES == ("cauchy", "hilbert")

    def test_mismatch_is_hard_gate(self, monkeypatch):
        class Wrong:
            derived_value = 0

        monkeypatch.setattr("cauchydet.bench.cauchy_det", lambda xs, ys, track=None: Wrong())
        with pytest.raises(BenchMismatchError, match="closed form 0"):
            run_bench("cauchy", [2])

    def test_mismatch_is_value_error(self):
        assert issubclass(BenchMismatchError, ValueError)


class TestCsv:
    def test_format(self):
        rows = run_bench("hilbert", [3])
        lines = format_csv(rows).splitlines()
        assert lines[0] == "family,n,method,time_ns,max_bits"
        assert len(lines) == 3
        assert lines[1].startswith("hilbert,3,closed-form,")
