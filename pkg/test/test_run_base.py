import os
import tempfile
import unittest
from unittest import mock

import pandas as pd

from symcone.base import InvalidConfig
from symcone.run_base import WORKERS_ENV, RunConfig, VerificationRun, default_workers, read_run_results

CHEAP_UNITS = [("PSI-BINOMIAL", {"max_k": 3}), ("SIGN-SUM", {"max_sigma": 2})]


class TestRunConfig(unittest.TestCase):
    def test_defaults(self):
        with mock.patch.dict(os.environ, {WORKERS_ENV: "1"}):
            config = RunConfig()
        self.assertEqual(config.factors["d"], 1)
        self.assertEqual(config.factors["workers"], 1)
        self.assertEqual(config.factors["convention"], "nonneg")

    def test_workers_from_environment(self):
        with mock.patch.dict(os.environ, {WORKERS_ENV: "3"}):
            self.assertEqual(default_workers(), 3)
            self.assertEqual(RunConfig().factors["workers"], 3)
        with mock.patch.dict(os.environ, {WORKERS_ENV: "many"}):
            with self.assertRaises(InvalidConfig):
                RunConfig()
        self.assertEqual(RunConfig({"workers": 2}).factors["workers"], 2)

    def test_rejects_bad_factors(self):
        for factors in ({"d": True}, {"d": 0}, {"beta_cap": -1}, {"convention": "positive"},
                        {"workers": 0}, {"hurwitz_backend": "tables"}, {"seed": "0"},
                        {"rc_normalization": "rescaled"}):
            with self.assertRaises(InvalidConfig):
                RunConfig(dict(factors, workers=factors.get("workers", 1)))

    def test_check_factors(self):
        config = RunConfig({"d": 2, "beta_cap": 2, "probe": True, "workers": 1})
        factors = config.check_factors("CONDITION-I", {"x_cap": 1})
        self.assertEqual(factors["d"], 2)
        self.assertEqual(factors["x_cap"], 1)
        self.assertNotIn("probe", factors)
        self.assertNotIn("workers", factors)
        self.assertTrue(config.check_factors("CONDITION-II")["probe"])


class TestVerificationRun(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmp.name, "outputs", "unit.pickle")
        self.config = RunConfig({"workers": 1, "output_path": self.path})

    def tearDown(self):
        self.tmp.cleanup()

    def test_unknown_check(self):
        with self.assertRaises(InvalidConfig):
            VerificationRun([("NO-SUCH-CHECK", {})], self.config)

    def test_invalid_unit_factors(self):
        with self.assertRaises(InvalidConfig):
            VerificationRun([("SIGN-SUM", {"max_sigma": 0})], self.config)

    def test_default_path(self):
        run = VerificationRun(CHEAP_UNITS, RunConfig({"workers": 1}), name="cheap")
        self.assertEqual(run.file_name_path, "./runs/outputs/cheap.pickle")

    def test_run(self):
        run = VerificationRun(CHEAP_UNITS, self.config)
        results = run.run()
        self.assertTrue(run.all_passed)
        self.assertEqual(run.exit_code(), 0)
        self.assertEqual(len(run.timings), 2)
        self.assertEqual(len(results), 3 + 4)
        self.assertEqual([result.acceptance for result in results], ["A5"] * 4 + ["A6"] * 3)
        self.assertEqual(len(run.records()), len(results))

    def test_failing_run(self):
        run = VerificationRun([("BASE-TERM", {"max_d": 1, "max_r": 0, "convention": "pos"})], self.config)
        run.run()
        self.assertFalse(run.all_passed)
        self.assertEqual(run.exit_code(), 1)

    def test_empty_run(self):
        run = VerificationRun([], self.config)
        run.run()
        self.assertTrue(run.all_passed)
        self.assertTrue(run.to_dataframe().empty)

    def test_parallel_matches_serial(self):
        serial = VerificationRun(CHEAP_UNITS, self.config)
        serial.run()
        parallel = VerificationRun(CHEAP_UNITS, RunConfig({"workers": 2}))
        parallel.run()
        self.assertEqual(parallel.records(), serial.records())

    def test_summary_table(self):
        run = VerificationRun(CHEAP_UNITS, self.config)
        run.run()
        table = run.summary_table()
        self.assertEqual(list(table.columns), ["PASS", "FAIL"])
        self.assertEqual(table.loc[("A6", "PSI-BINOMIAL"), "PASS"], 3)
        self.assertEqual(table["FAIL"].sum(), 0)
        csv_path = os.path.join(self.tmp.name, "summary", "run.csv")
        run.print_to_csv(csv_path)
        self.assertEqual(len(pd.read_csv(csv_path)), 2)

    def test_record_log_and_read(self):
        run = VerificationRun([("CONDITION-II", {"d": 1, "r": 1, "beta_cap": 1})], self.config, name="unit")
        run.run()
        self.assertEqual(len(run.normalization_findings()), 1)
        run.record_run_results()
        run.log_run_results()
        loaded = read_run_results(self.path)
        self.assertEqual(loaded.records(), run.records())
        log_path = os.path.join(self.tmp.name, "logs", "unit_run_results.txt")
        with open(log_path) as file:
            log = file.read()
        self.assertIn("Normalization Findings:", log)
        self.assertIn("'rc_normalization': 'printed'", log)
        self.assertIn("'variants': []", log)
        self.assertTrue(log.rstrip().endswith("Verdict: PASS"))
