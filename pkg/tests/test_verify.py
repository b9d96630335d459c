import json
from fractions import Fraction

import pytest

from cauchydet.families import cmatrix, crn
from cauchydet.rng import SplitMix64
from cauchydet.sequences import Sequence
from cauchydet.verify import (
    SUITE_NAMES,
    CaseResult,
    SuiteConfig,
    SuiteReport,
    check_minors,
    check_scaling_invariance,
    check_theorem,
    check_toeplitz_chain,
    resolve_prefactor,
    run_suite,
)

F = Fraction
NAT = Sequence.natural()


class TestCaseResult:
    def test_to_dict_serializes_fractions(self):
        c = CaseResult("s", "s:1", {"n": 1}, F(1, 2), F(1, 3), "fail")
        d = c.to_dict()
        assert d["expected"] == "1/2" and d["actual"] == "1/3"
        assert d["caseId"] == "s:1"


class TestResolvePrefactor:
    def test_cauchy_is_one(self):
        assert resolve_prefactor("cauchy", 1, trials=3, seed=5) == 1
        assert resolve_prefactor("cauchy", 3, trials=4, seed=5) == 1

    @pytest.mark.parametrize("n,expected", [(1, 1), (2, -1), (3, -1), (4, 1)])
    def test_amatrix_size_sign(self, n, expected):
        assert resolve_prefactor("amatrix", n, trials=5, seed=7) == expected

    @pytest.mark.parametrize("r", [2, 3, 4])
    def test_cprime_exponent_is_r(self, r):
        assert resolve_prefactor("cprime", r, trials=5, seed=11) == r

    def test_guards(self):
        with pytest.raises(ValueError, match="trials"):
            resolve_prefactor("cauchy", 2, trials=1)
        with pytest.raises(ValueError, match="unknown family"):
            resolve_prefactor("toeplitz", 2)


class TestCheckTheorem:
    def test_frozen_r2_n4(self):
        rank_case, minors_case = check_theorem(NAT, 2, 4)
        assert rank_case.expected == rank_case.actual == 2
        assert minors_case.expected == minors_case.actual == 10
        assert rank_case.verdict == minors_case.verdict == "pass"
        # The cols {0,1} maximal minor is one of the ten; its value is 4.
        m = crn(NAT, 2, 4).submatrix((0, 1), (0, 1))
        assert m.det_cofactor() == 4

    def test_frozen_r3_n5(self):
        rank_case = check_theorem(NAT, 3, 5)[0]
        assert rank_case.expected == rank_case.actual == 2

    def test_minor_sweep_respects_budget(self):
        cases = check_theorem(NAT, 2, 4, max_minors=5)
        assert len(cases) == 1  # C(5,2)=10 > 5: only the rank case

    def test_range_guard(self):
        with pytest.raises(ValueError, match="2 <= r < n"):
            check_theorem(NAT, 4, 4)


class TestCheckMinors:
    def test_frozen_r2_n5(self):
        rank_case, sweep_case = check_minors(NAT, 2, 5)
        assert rank_case.expected == rank_case.actual == 3
        assert sweep_case.params["partial"] is False
        assert sweep_case.expected == sweep_case.actual  # all minors nonzero
        assert sweep_case.verdict == "pass"

    def test_frozen_witness_det(self):
        # 2x2 selection on rows {0,1}, cols {1,2} of the r=2, n=4 block.
        sub = cmatrix(NAT, 2, 4).submatrix((0, 1), (1, 2))
        assert sub.det_cofactor() == 24

    def test_partial_subsample(self):
        cases = check_minors(NAT, 2, 5, budget=4, rng=SplitMix64(9))
        sweep = cases[1]
        assert sweep.params["partial"] is True
        assert sweep.params["checked"] < sweep.params["total"]
        assert sweep.verdict == "pass"

    def test_partial_without_rng_rejected(self):
        with pytest.raises(ValueError, match="need an rng"):
            check_minors(NAT, 2, 5, budget=4)

    def test_range_guard(self):
        with pytest.raises(ValueError, match="2 <= r < n"):
            check_minors(NAT, 1, 2)


class TestCheckScaling:
    def test_passes_and_is_deterministic(self):
        a = check_scaling_invariance(NAT, 2, 4, seed=77)
        b = check_scaling_invariance(NAT, 2, 4, seed=77)
        assert a == b
        assert a.expected == a.actual == 2

    def test_seed_in_case_id(self):
        c = check_scaling_invariance(NAT, 2, 4, seed=77)
        assert "seed=0x4d" in c.case_id


class TestCheckToeplitzChain:
    def test_frozen_n2(self):
        cases = check_toeplitz_chain(2)
        params = cases[0].params
        assert params["detB"] == "-2"
        assert params["detV"] == "-1/12"
        assert params["detH"] == "1/12"
        assert all(c.verdict == "pass" for c in cases)

    def test_frozen_n1(self):
        cases = check_toeplitz_chain(1)
        assert cases[0].params["detB"] == "-2"
        assert all(c.verdict == "pass" for c in cases)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_chain_holds(self, n):
        assert all(c.verdict == "pass" for c in check_toeplitz_chain(n))

    def test_guard(self):
        with pytest.raises(ValueError):
            check_toeplitz_chain(0)


class TestRunSuite:
    def test_suite_names(self):
        assert SUITE_NAMES[-1] == "all"
        assert "theorem" in SUITE_NAMES and "toeplitz-chain" in SUITE_NAMES

    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="unknown suite"):
            run_suite("nope")

    def test_hilbert_all_pass(self):
        rep = run_suite("hilbert", SuiteConfig(max_n=8))
        assert rep.case_count == 16  # det check + reciprocal check per n
        assert rep.passed and not rep.errata

    def test_cauchy_verdicts_by_size(self):
        # The printed sign is wrong exactly when n(n-1)/2 is odd, so n = 1
        # passes outright and n = 2, 3 land as errata matches.
        rep = run_suite("cauchy", SuiteConfig(seed=1, max_n=3, trials=4))
        verdict_by_n = {}
        for c in rep.cases:
            verdict_by_n.setdefault(c.params["n"], set()).add(c.verdict)
        assert verdict_by_n[1] == {"pass"}
        assert verdict_by_n[2] == {"errata-match"}
        assert verdict_by_n[3] == {"errata-match"}
        assert [e.location for e in rep.errata] == ["cauchy-det-sign"]
        assert rep.passed  # errata matches are not failures

    def test_errata_witness_is_a_case(self):
        rep = run_suite("cauchy", SuiteConfig(seed=1, max_n=2, trials=3))
        ids = {c.case_id for c in rep.cases}
        for e in rep.errata:
            assert e.witness in ids

    def test_lemma31_emits_quotient_errata(self):
        rep = run_suite("lemma31", SuiteConfig(seed=3, trials=12))
        assert rep.passed
        assert [e.location for e in rep.errata] == ["quotient-identity-sign"]

    def test_all_emits_exactly_four_errata(self):
        rep = run_suite("all", SuiteConfig(seed=1, max_n=4, max_r=3, trials=6))
        assert rep.passed
        assert sorted(e.location for e in rep.errata) == [
            "amatrix-prefactor-sign",
            "cauchy-det-sign",
            "cprime-prefactor",
            "quotient-identity-sign",
        ]
        assert rep.summary["fail"] == 0
        assert rep.summary["pass"] + rep.summary["errata"] == rep.case_count

    def test_json_deterministic_bytes(self):
        cfg = SuiteConfig(seed=5, max_n=2, trials=4)
        a = run_suite("cauchy", cfg).to_json()
        b = run_suite("cauchy", cfg).to_json()
        assert a == b

    def test_json_shape(self):
        rep = run_suite("hilbert", SuiteConfig(seed=2, max_n=3))
        doc = json.loads(rep.to_json())
        assert set(doc) == {"suite", "seed", "config", "cases", "errata", "summary"}
        assert doc["seed"] == 2
        assert doc["config"] == {"maxN": 3, "maxR": None, "trials": None, "seq": None}
        assert "elapsed" not in doc
        assert doc["summary"] == {"pass": 6, "fail": 0, "errata": 0}

    def test_seq_pin_restricts_sequences(self):
        rep = run_suite("theorem", SuiteConfig(seed=1, max_n=5, seq=Sequence.natural()))
        assert rep.passed
        assert {c.params["seq"] for c in rep.cases} == {"nat"}

    def test_case_ids_embed_seeds(self):
        rep = run_suite("amatrix", SuiteConfig(seed=1, max_n=1, trials=2))
        assert any("seed=0x" in c.case_id for c in rep.cases)

    def test_csv_output(self):
        rep = run_suite("hilbert", SuiteConfig(max_n=2))
        lines = rep.to_csv().splitlines()
        assert lines[0] == "suite,caseId,verdict,expected,actual"
        assert len(lines) == rep.case_count + 1

    def test_failure_detection(self):
        rep = SuiteReport(
            suite="x",
            seed=1,
            config={},
            cases=[CaseResult("x", "x:1", {}, 1, 2, "fail")],
            errata=[],
        )
        assert not rep.passed
        assert rep.summary == {"pass": 0, "fail": 1, "errata": 0}
