import cmath
import math

import pytest

from lerchsum.identities import (
    CATALAN_REFERENCE,
    RecurrenceParams,
    catalan_constant,
    check_catalan_sum,
    check_product_identity,
    check_recurrence,
    check_tan_sum,
    check_theorem,
    make_report,
    theorem_lhs,
    theorem_rhs,
    unity_filter_sum,
)
from lerchsum.numtheory import TheoremParams
from lerchsum.selftest import load_product_fixtures


class TestTheorem:
    def test_lhs_geometric_closed_form_at_k_zero(self):
        # at k = 0 each transcendent collapses to 1/(1-z)
        p = TheoremParams(0.0, 2.0, 0.4 + 0.8j, 3, 1)
        expected = 0.0 + 0.0j
        for idx in range(3):
            rot = cmath.exp(2j * (p.m + math.pi * idx / 3))
            expected += 1.0 - 2.0 * rot / (1.0 + rot)
        assert theorem_lhs(p, 1e-11) == pytest.approx(expected, abs=1e-10)

    def test_rhs_geometric_closed_form_at_k_zero(self):
        p = TheoremParams(0.0, 2.0, 0.4 + 0.8j, 3, 1)
        rot = cmath.exp(6j * p.m)
        expected = 3.0 * (1.0 - 2.0 * rot / (1.0 + rot))
        assert theorem_rhs(p, 1e-11) == pytest.approx(expected, abs=1e-10)

    def test_lhs_oracle_fixture_k1(self):
        p = TheoremParams(1.0, math.e, 0.3 + 0.6j, 3, 1)
        assert theorem_lhs(p, 1e-10) == pytest.approx(
            complex(4.013106881651467, 0.012396791458368413), abs=1e-9
        )

    def test_lhs_oracle_fixture_k_minus_one(self):
        p = TheoremParams(-1.0, math.e, 0.5 + 1.0j, 5, 2)
        assert theorem_lhs(p, 1e-10) == pytest.approx(
            complex(5.000041828378176, 1.706197593850051e-05), abs=1e-9
        )

    @pytest.mark.parametrize(
        "k,a,m,n,q",
        [
            (1.0, math.e, 0.3 + 0.6j, 3, 1),
            (2.0, 1j, 0.3 + 0.5j, 5, 2),
            (0.5 + 0.25j, 2 + 1j, -0.2 + 1.1j, 7, 3),
        ],
    )
    def test_both_sides_agree(self, k, a, m, n, q):
        rep = check_theorem(TheoremParams(k, a, m, n, q), 1e-8)
        assert rep.passed, rep.notes

    def test_composite_n_fails_validation(self):
        rep = check_theorem(TheoremParams(0.0, 2.0, 0.4 + 0.8j, 6, 1), 1e-8)
        assert not rep.passed
        assert "validation" in rep.notes


class TestTanSum:
    def test_symmetric_zero(self):
        rep = check_tan_sum(0.0, 5, 1, 1e-10)
        assert rep.passed
        assert abs(rep.lhs) < 1e-12

    def test_direct_value(self):
        rep = check_tan_sum(0.4, 3, 1, 1e-10)
        assert rep.passed
        assert rep.lhs == pytest.approx(7.716454866378957, rel=1e-12)

    def test_complex_argument(self):
        rep = check_tan_sum(0.3 + 0.4j, 7, 3, 1e-10)
        assert rep.passed

    def test_n2_anomaly(self):
        rep = check_tan_sum(0.7, 2, 1, 1e-10)
        assert not rep.passed
        assert "known-suspect" in rep.notes
        assert rep.lhs == pytest.approx(-0.3449534516635999, abs=1e-12)
        assert rep.rhs == pytest.approx(11.595767430965779, abs=1e-12)

    def test_pole_proximity_reported(self):
        rep = check_tan_sum(math.pi / 2, 5, 1, 1e-10)
        assert not rep.passed
        assert "pole" in rep.notes


class TestProducts:
    def test_trivial_point(self):
        rep = check_product_identity("product_ex2", {"x": 0.0}, 5, 1)
        assert rep.passed
        assert rep.lhs == pytest.approx(1.0)
        assert rep.rhs == pytest.approx(1.0)

    def test_fixture_grid(self):
        fixtures = load_product_fixtures()
        for case in fixtures["cases"]:
            params = {key: complex(val[0], val[1]) for key, val in case["params"].items()}
            rep = check_product_identity(
                case["identity"], params, case["n"], case["q"], fixtures["tol"]
            )
            for got, ref_pair in ((rep.lhs, case["lhs"]), (rep.rhs, case["rhs"])):
                ref = complex(ref_pair[0], ref_pair[1])
                assert abs(got - ref) <= 1e-10 * max(1.0, abs(ref)), case
            assert rep.passed == case["pass"], case

    def test_ex4_holds_only_on_diagonal(self):
        diag = check_product_identity("product_ex4", {"m": 0.3, "r": 0.3}, 3, 1)
        off = check_product_identity("product_ex4", {"m": 0.4, "r": 0.1}, 3, 1)
        assert diag.passed
        assert not off.passed
        assert "branch-sensitive" in off.notes

    def test_unknown_case_rejected(self):
        with pytest.raises(ValueError):
            check_product_identity("product_ex9", {"x": 0.1}, 3, 1)


class TestCatalan:
    def test_constant_matches_reference(self):
        assert abs(catalan_constant(1e-12) - CATALAN_REFERENCE) < 1e-12
        assert abs(catalan_constant(1e-6) - CATALAN_REFERENCE) < 1e-6

    def test_constant_idempotent(self):
        assert catalan_constant(1e-12) == catalan_constant(1e-12)

    @pytest.mark.parametrize("n,q", [(3, 1), (5, 2), (7, 1)])
    def test_sum_equals_4k(self, n, q):
        rep = check_catalan_sum(n, q, 1e-8)
        assert rep.passed
        assert rep.lhs == pytest.approx(4.0 * CATALAN_REFERENCE, abs=1e-8)

    def test_degenerate_q_rejected(self):
        rep = check_catalan_sum(3, 3, 1e-8)
        assert not rep.passed
        assert "validation" in rep.notes


class TestRecurrence:
    @pytest.mark.parametrize(
        "z,s,a,q,tol",
        [
            (0.5, 2.0, 1.0, 1, 1e-10),
            (0.4 * cmath.exp(0.7j), 1.5 + 1j, 0.7 + 0.3j, 2, 1e-9),
            (0.6, -1.0, 2.0, 1, 1e-10),
        ],
    )
    def test_examples(self, z, s, a, q, tol):
        rep = check_recurrence(RecurrenceParams(z, s, a, q), tol)
        assert rep.passed, (rep.rel_residual, rep.abs_residual)

    def test_q_multiple_of_three_rejected(self):
        rep = check_recurrence(RecurrenceParams(0.5, 2.0, 1.0, 3))
        assert not rep.passed
        assert "validation" in rep.notes


class TestFilterAndReports:
    def test_unity_filter_property(self):
        for n in (3, 5, 7):
            for q in range(1, n):
                for j in range(100):
                    got = unity_filter_sum(n, q, j)
                    want = n if (q * (j + 1)) % n == 0 else 0
                    assert abs(got - want) < 1e-12

    def test_residual_conventions(self):
        rep = make_report("tan_sum", {}, 10.0, 10.0 + 1e-11j, 1e-10)
        assert rep.rel_residual == pytest.approx(1e-12)
        assert rep.passed
        small = make_report("tan_sum", {}, 1e-3, 1e-3 + 2e-10j, 1e-10)
        assert not small.passed  # absolute fallback below magnitude 1

    def test_pass_monotone_in_tol(self):
        rep_tight = check_tan_sum(0.4, 3, 1, 1e-12)
        rep_loose = check_tan_sum(0.4, 3, 1, 1e-10)
        assert rep_tight.passed  # residual well under the tighter tol
        assert rep_loose.passed
