import unittest

import pytest

from symcone.base import InvalidConfig
from symcone.checks.base_term import BaseTerm
from symcone.checks.beginning_terms import BeginningTerms, expected_two_class_count
from symcone.checks.classical import ClassicalReduction
from symcone.checks.combining import CombiningCalculus
from symcone.checks.hurwitz import HurwitzOracle
from symcone.checks.identities import PsiBinomialIdentity, RatioIdentity, SignSumIdentity, WRecursionCoefficient
from symcone.checks.involution import EdgeInvolution
from symcone.checks.poles import PoleCondition
from symcone.checks.recursion import LabelConventionProbe, RecursionCondition
from symcone.combinat import NONNEG, POS, Multipartition, Partition
from symcone.sectors import FACTORS, RC_NORMALIZATIONS, enumerate_edges, enumerate_sectors


def run_check(check):
    check.validate()
    return check.run()


class CheckTestCase(unittest.TestCase):
    def assertAllPass(self, results):
        self.assertTrue(results)
        failing = [result.to_record() for result in results if not result.passed]
        self.assertEqual(failing, [])


class TestBaseTerm(CheckTestCase):
    def test_nonneg_labels(self):
        self.assertAllPass(run_check(BaseTerm({"max_d": 3, "max_r": 2})))

    def test_positive_labels_lose_base_term(self):
        results = run_check(BaseTerm({"max_d": 2, "max_r": 1, "convention": POS}))
        self.assertTrue(all(not result.passed for result in results))

    def test_factor_validation(self):
        with self.assertRaises(InvalidConfig):
            BaseTerm({"max_d": 0}).validate()
        with self.assertRaises(InvalidConfig):
            BaseTerm({"convention": "positive"}).validate()


class TestClassicalReduction(CheckTestCase):
    def test_projective_space(self):
        results = run_check(ClassicalReduction({"max_r": 2, "beta_cap": 3}))
        self.assertEqual(len(results), 1 + 2 + 3)
        self.assertAllPass(results)


class TestPoleCondition(CheckTestCase):
    def test_degree_one(self):
        self.assertAllPass(run_check(PoleCondition({"d": 1, "r": 1, "beta_cap": 3})))

    def test_two_points(self):
        self.assertAllPass(run_check(PoleCondition({"d": 2, "r": 1, "beta_cap": 2, "x_cap": 2})))

    @pytest.mark.slow
    def test_three_points(self):
        self.assertAllPass(run_check(PoleCondition({"d": 3, "r": 1, "beta_cap": 2, "x_cap": 1})))

    def test_raising_beta_cap_keeps_passing(self):
        for beta_cap in range(1, 5):
            self.assertAllPass(run_check(PoleCondition({"d": 1, "r": 1, "beta_cap": beta_cap})))
        for beta_cap in (1, 2):
            self.assertAllPass(run_check(PoleCondition({"d": 2, "r": 1, "beta_cap": beta_cap})))

    def test_brute_force_cap(self):
        with self.assertRaises(InvalidConfig):
            PoleCondition({"d": 7}).validate()
        PoleCondition({"d": 7, "hurwitz_backend": "character"}).validate()


class TestRecursionCondition(CheckTestCase):
    def test_degree_one(self):
        check = RecursionCondition({"d": 1, "r": 1, "beta_cap": 3})
        self.assertEqual(check.acceptance, "A4")
        self.assertAllPass(run_check(check))
        self.assertEqual(check.summary["failing"], 0)

    def test_degree_one_three_coordinates(self):
        self.assertAllPass(run_check(RecursionCondition({"d": 1, "r": 2, "beta_cap": 2})))

    def test_specializations_back_every_symbolic_pass(self):
        check = RecursionCondition({"d": 1, "r": 1, "beta_cap": 2, "n_specializations": 5, "seed": 3})
        run_check(check)
        self.assertTrue(check.reports)
        for report in check.reports:
            self.assertTrue(report.symbolic_pass)
            self.assertEqual(report.specializations, [True] * 5)

    def test_summary_record(self):
        results = run_check(RecursionCondition({"d": 1, "r": 1, "beta_cap": 1}))
        summary = results[-1]
        self.assertEqual(summary.key["summary"], "normalization")
        self.assertEqual(summary.diagnostics["global_exponent"], None)

    @pytest.mark.slow
    def test_two_points_printed_coefficients(self):
        check = RecursionCondition({"d": 2, "r": 1, "beta_cap": 2, "x_cap": 1, "probe": True,
                                    "n_specializations": 2})
        self.assertEqual(check.acceptance, "A4'")
        results = run_check(check)
        failing = [report for report in check.reports if not report.passed]
        self.assertEqual(len(failing), 4)
        self.assertEqual({str(report.sector.to_json()) for report in failing},
                         {str({"mu": [2, 0], "sigma": [[2], []]}), str({"mu": [0, 2], "sigma": [[], [2]]})})
        for report in failing:
            self.assertEqual(report.sector.r_sigma, 2)
            self.assertEqual(report.variants, [FACTORS])
        summary = results[-1].diagnostics
        self.assertEqual(summary["exponents"], ["1", "3"])
        self.assertFalse(summary["uniform"])
        self.assertEqual(summary["variants"], [FACTORS])
        self.assertTrue(summary["explained"])
        self.assertFalse(results[-1].passed)

    @pytest.mark.slow
    def test_two_points_accepts_factor_normalization(self):
        check = RecursionCondition({"d": 2, "r": 1, "beta_cap": 2, "x_cap": 1, "probe": True,
                                    "accept_uniform_normalization": True, "n_specializations": 2})
        results = run_check(check)
        self.assertAllPass(results)
        normalized = [result for result in results[:-1] if result.diagnostics["normalized_by"]]
        self.assertEqual(len(normalized), 4)
        self.assertEqual({result.diagnostics["normalized_by"] for result in normalized},
                         {"rc_normalization=factors"})

    @pytest.mark.slow
    def test_two_points_factor_normalization(self):
        check = RecursionCondition({"d": 2, "r": 1, "beta_cap": 2, "x_cap": 1, "rc_normalization": FACTORS})
        results = run_check(check)
        self.assertAllPass(results)
        self.assertEqual(check.summary["failing"], 0)
        for report in check.reports:
            self.assertEqual(report.specializations, [True] * 5)

    def test_rc_normalization_factor(self):
        with self.assertRaises(InvalidConfig):
            RecursionCondition({"rc_normalization": "rescaled"}).validate()
        check = RecursionCondition({"d": 1, "r": 1, "beta_cap": 2, "rc_normalization": FACTORS})
        self.assertAllPass(run_check(check))


class TestLabelConventionProbe(CheckTestCase):
    def test_degree_one(self):
        results = run_check(LabelConventionProbe({"d": 1, "r": 1, "beta_cap": 2, "x_cap": 0}))
        self.assertEqual(len(results), 1)
        self.assertIn(NONNEG, results[0].diagnostics["satisfying"])
        self.assertEqual(set(results[0].diagnostics["summaries"]), {NONNEG, POS})


class TestIdentities(CheckTestCase):
    def test_sign_sum(self):
        results = run_check(SignSumIdentity({"max_sigma": 4}))
        self.assertAllPass(results)
        self.assertEqual(sum(1 for result in results if result.key["a"] == 1), 11)

    def test_sign_sum_full_order(self):
        results = run_check(SignSumIdentity({"max_sigma": 4}))
        full = [result for result in results if result.key["a"] == len(result.key["sigma_t"])]
        self.assertEqual(len(full), 1 + 2 + 3 + 5)
        for result in full:
            self.assertTrue(result.passed)
            self.assertEqual(result.diagnostics["patterns"], 1)

    def test_psi_binomial(self):
        results = run_check(PsiBinomialIdentity({"max_k": 8}))
        self.assertEqual(len(results), 8)
        self.assertAllPass(results)

    def test_ratio_identity(self):
        results = run_check(RatioIdentity({"max_d": 4}))
        self.assertAllPass(results)
        edges = [kappa for d in range(1, 5) for s in enumerate_sectors(d, 1) for kappa in enumerate_edges(s, 2)]
        self.assertEqual(len(results), len(edges))
        self.assertEqual([result.key["edge"] for result in results], [kappa.to_json() for kappa in edges])

    @pytest.mark.slow
    def test_ratio_identity_default_range(self):
        self.assertAllPass(run_check(RatioIdentity()))

    def test_w_rc(self):
        results = run_check(WRecursionCoefficient({"max_d": 3}))
        self.assertAllPass(results)
        edges = [kappa for d in range(1, 4) for s in enumerate_sectors(d, 1) for kappa in enumerate_edges(s, 2)]
        self.assertEqual(len(results), sum(kappa.mov_count for kappa in edges) * len(RC_NORMALIZATIONS))
        self.assertEqual({result.key["rc_normalization"] for result in results}, set(RC_NORMALIZATIONS))

    def test_factor_validation(self):
        with self.assertRaises(InvalidConfig):
            SignSumIdentity({"max_sigma": 9}).validate()
        with self.assertRaises(InvalidConfig):
            RatioIdentity({"max_r": 0}).validate()


class TestHurwitzOracle(CheckTestCase):
    def test_small_groups(self):
        results = run_check(HurwitzOracle({"max_d": 4, "max_length": 3, "single_class_d": 5}))
        self.assertEqual(len(results), 5 + 3 * 4)
        self.assertAllPass(results)

    def test_cap(self):
        with self.assertRaises(InvalidConfig):
            HurwitzOracle({"max_d": 7}).validate()


class TestCombiningCalculus(CheckTestCase):
    def test_random_fixtures(self):
        results = run_check(CombiningCalculus({"n_fixtures": 6, "n_orders": 60}))
        self.assertEqual(len(results), 6)
        self.assertAllPass(results)
        self.assertEqual(sum(result.diagnostics["orders"] for result in results), 60)

    def test_seed_determines_fixtures(self):
        first = run_check(CombiningCalculus({"n_fixtures": 4, "n_orders": 8, "seed": 5}))
        second = run_check(CombiningCalculus({"n_fixtures": 4, "n_orders": 8, "seed": 5}))
        self.assertEqual([r.to_record() for r in first], [r.to_record() for r in second])


class TestBeginningTerms(CheckTestCase):
    def test_closed_form(self):
        self.assertEqual(expected_two_class_count(Multipartition([[2], []]), Partition([2])), 1)
        self.assertEqual(expected_two_class_count(Multipartition([[2, 1], []]), Partition([2, 1])), 3)
        self.assertEqual(expected_two_class_count(Multipartition([[1], [1]]), Partition([2])), 0)

    def test_small_sectors(self):
        self.assertAllPass(run_check(BeginningTerms({"max_d": 3, "max_r": 1})))


class TestEdgeInvolution(CheckTestCase):
    def test_edges(self):
        results = run_check(EdgeInvolution({"max_d": 3}))
        self.assertAllPass(results)
        edges = [kappa for d in range(1, 4) for s in enumerate_sectors(d, 1) for kappa in enumerate_edges(s, 2)]
        self.assertEqual([result.key["edge"] for result in results], [kappa.to_json() for kappa in edges])
