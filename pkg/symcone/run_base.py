#!/usr/bin/env python
"""
Summary
-------
Provide the run configuration and a class for running a list of checks,
recording the run to a .pickle file and writing readable logs and csv
summaries.
"""
import os
import pickle
import sys
import time
from concurrent.futures import ProcessPoolExecutor

import pandas as pd

from .base import InvalidConfig
from .combinat import LABEL_CONVENTIONS, NONNEG
from .directory import check_directory
from .sectors import PRINTED, RC_NORMALIZATIONS
from .symgroup import HURWITZ_BACKENDS

WORKERS_ENV = "SYMCONE_WORKERS"


def default_workers():
    value = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(value))
    except ValueError:
        raise InvalidConfig(f"{WORKERS_ENV}={value!r} is not an integer.")


class RunConfig(object):
    """Shared factors of a verification run.

    Attributes
    ----------
    factors : dict
        Changeable factors of the run.
    specifications : dict
        Details of each factor (for CLI flags, data validation, and defaults).
    check_factor_list : dict
        Switch case for checking factor validity.

    Parameters
    ----------
    fixed_factors : dict, optional
        Dictionary of user-specified run factors.

    Raises
    ------
    InvalidConfig
        If a factor fails its checks.
    """
    def __init__(self, fixed_factors=None):
        if fixed_factors is None:
            fixed_factors = {}
        self.specifications = {
            "d": {
                "description": "number of points d",
                "datatype": int,
                "default": 1
            },
            "r": {
                "description": "dimension r of the projective space",
                "datatype": int,
                "default": 1
            },
            "beta_cap": {
                "description": "largest Novikov exponent beta",
                "datatype": int,
                "default": 3
            },
            "x_cap": {
                "description": "largest total x-degree",
                "datatype": int,
                "default": 0
            },
            "t_cap": {
                "description": "largest total t-degree",
                "datatype": int,
                "default": 0
            },
            "convention": {
                "description": "label positivity convention (nonneg or pos)",
                "datatype": str,
                "default": NONNEG
            },
            "include_exp_factor": {
                "description": "keep the exponential factor in t",
                "datatype": bool,
                "default": False
            },
            "probe": {
                "description": "run the normalization probe on failing reports",
                "datatype": bool,
                "default": False
            },
            "rc_normalization": {
                "description": "how r_sigma enters the recursion coefficients (printed or factors)",
                "datatype": str,
                "default": PRINTED
            },
            "seed": {
                "description": "MRG32k3a stream index",
                "datatype": int,
                "default": 0
            },
            "output_path": {
                "description": "path of the .pickle file the run is recorded to",
                "datatype": str,
                "default": ""
            },
            "workers": {
                "description": "number of worker processes",
                "datatype": int,
                "default": None
            },
            "hurwitz_backend": {
                "description": "factorization counter (brute or character)",
                "datatype": str,
                "default": "brute"
            },
            "verbose": {
                "description": "print progress messages to stderr",
                "datatype": bool,
                "default": False
            }
        }
        self.check_factor_list = {
            "d": self.check_d,
            "r": self.check_r,
            "beta_cap": self.check_caps,
            "x_cap": self.check_caps,
            "t_cap": self.check_caps,
            "convention": self.check_convention,
            "seed": self.check_seed,
            "rc_normalization": self.check_rc_normalization,
            "workers": self.check_workers,
            "hurwitz_backend": self.check_hurwitz_backend
        }
        self.factors = dict(fixed_factors)
        for key in self.specifications:
            if key not in fixed_factors:
                self.factors[key] = self.specifications[key]["default"]
        if self.factors["workers"] is None:
            self.factors["workers"] = default_workers()
        self.validate()

    def __eq__(self, other):
        if type(self) == type(other):
            return self.factors == other.factors
        return False

    def check_d(self):
        return self.factors["d"] >= 1

    def check_r(self):
        return self.factors["r"] >= 0

    def check_caps(self):
        return min(self.factors["beta_cap"], self.factors["x_cap"], self.factors["t_cap"]) >= 0

    def check_convention(self):
        return self.factors["convention"] in LABEL_CONVENTIONS

    def check_seed(self):
        return self.factors["seed"] >= 0

    def check_rc_normalization(self):
        return self.factors["rc_normalization"] in RC_NORMALIZATIONS

    def check_workers(self):
        return self.factors["workers"] >= 1

    def check_hurwitz_backend(self):
        return self.factors["hurwitz_backend"] in HURWITZ_BACKENDS

    def validate(self):
        for factor_name, spec in self.specifications.items():
            value = self.factors[factor_name]
            # bool is an int subclass; reject it where an int is expected.
            if not isinstance(value, spec["datatype"]) or (spec["datatype"] is int and isinstance(value, bool)):
                raise InvalidConfig(f"Run factor '{factor_name}' must be of type {spec['datatype'].__name__}, got {value!r}.")
        for factor_name, checker in self.check_factor_list.items():
            if not checker():
                raise InvalidConfig(f"Run factor '{factor_name}' has invalid value {self.factors[factor_name]!r}.")

    def check_factors(self, check_name, overrides=None):
        """Factors for ``check_name``: the run factors the check declares,
        then ``overrides``.
        """
        declared = check_directory[check_name]().specifications
        factors = {key: value for key, value in self.factors.items() if key in declared}
        factors.update(overrides or {})
        return factors


def run_unit(unit):
    """Build, validate and run one check in a worker process.

    Parameters
    ----------
    unit : tuple
        (check name, fixed factors, seed).

    Returns
    -------
    results : list [``base.CheckResult``]
    elapsed : float
        Runtime in seconds.
    """
    check_name, fixed_factors, seed = unit
    check = check_directory[check_name](fixed_factors)
    check.validate()
    check.attach_rngs(check.default_rngs(seed))
    tic = time.perf_counter()
    results = check.run()
    toc = time.perf_counter()
    return results, toc - tic


class VerificationRun(object):
    """Base class for running a list of checks.

    Attributes
    ----------
    name : str
        Name of the run.
    config : ``run_base.RunConfig``
        Shared run factors.
    units : list [tuple]
        Pairs (check name, fixed factors).
    file_name_path : str
        Path of .pickle file for saving the ``run_base.VerificationRun`` object.
    results : list [``base.CheckResult``]
        Records of every unit, sorted by canonical key.
    timings : list [float]
        Runtimes (in seconds) for each unit.

    Parameters
    ----------
    units : list [tuple]
        Pairs (check name, fixed factors).
    config : ``run_base.RunConfig``, optional
        Shared run factors.
    name : str, default="run"
        Name of the run.
    """
    def __init__(self, units, config=None, name="run"):
        if config is None:
            config = RunConfig()
        self.name = name
        self.config = config
        self.units = [(check_name, dict(fixed_factors)) for check_name, fixed_factors in units]
        if config.factors["output_path"]:
            self.file_name_path = config.factors["output_path"]
        else:
            self.file_name_path = f"./runs/outputs/{self.name}.pickle"
        self.results = []
        self.unit_results = []
        self.timings = []
        for check_name, fixed_factors in self.units:
            if check_name not in check_directory:
                raise InvalidConfig(f"Unknown check {check_name!r}.")
            check_directory[check_name](fixed_factors).validate()

    def run(self):
        """Run every unit, in worker processes when more than one worker
        is configured.
        """
        seed = self.config.factors["seed"]
        workers = self.config.factors["workers"]
        jobs = [(check_name, fixed_factors, seed) for check_name, fixed_factors in self.units]
        if self.config.factors["verbose"]:
            print(f"Running {len(jobs)} checks of run {self.name} on {workers} workers.", file=sys.stderr)
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as executor:
                outcomes = list(executor.map(run_unit, jobs))
        else:
            outcomes = [run_unit(job) for job in jobs]
        self.unit_results = [results for results, _ in outcomes]
        self.timings = [elapsed for _, elapsed in outcomes]
        self.results = [result for results in self.unit_results for result in results]
        # Ordered by canonical keys regardless of completion order.
        self.results.sort(key=lambda result: result.sort_key())
        return self.results

    @property
    def all_passed(self):
        return all(result.passed for result in self.results)

    def exit_code(self):
        return 0 if self.all_passed else 1

    def records(self):
        return [result.to_record() for result in self.results]

    def normalization_findings(self):
        return [result for result in self.results if result.key.get("summary") == "normalization"]

    def to_dataframe(self):
        """One row per record: check, acceptance, verdict and the key fields."""
        rows = []
        for result in self.results:
            row = {"check": result.check, "acceptance": result.acceptance, "verdict": result.verdict}
            row.update({key: str(value) for key, value in result.key.items()})
            rows.append(row)
        if not rows:
            return pd.DataFrame(columns=["check", "acceptance", "verdict"])
        return pd.DataFrame(rows)

    def summary_table(self):
        """PASS/FAIL counts per (acceptance, check)."""
        df = self.to_dataframe()
        table = df.groupby(["acceptance", "check", "verdict"]).size().unstack(fill_value=0)
        for verdict in ("PASS", "FAIL"):
            if verdict not in table.columns:
                table[verdict] = 0
        return table[["PASS", "FAIL"]]

    def print_to_csv(self, csv_path):
        """Publish the summary table to a .csv file."""
        directory = os.path.dirname(csv_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        self.summary_table().to_csv(csv_path)

    def record_run_results(self):
        """Save ``run_base.VerificationRun`` object to .pickle file.
        """
        directory = os.path.dirname(self.file_name_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(self.file_name_path, "wb") as file:
            pickle.dump(self, file, pickle.HIGHEST_PROTOCOL)

    def log_run_results(self):
        """Create readable .txt file next to the run's .pickle file.
        """
        new_path = self.file_name_path.replace("outputs", "logs")
        new_path2 = new_path.replace(".pickle", "")
        directory = os.path.dirname(new_path2)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(new_path2 + "_run_results.txt", "w") as file:
            file.write(self.file_name_path)
            file.write("\n")
            file.write(f"Run: {self.name}\n\n")
            file.write("Run Factors:\n")
            for key, value in self.config.factors.items():
                file.write(f"\t{key}: {value}\n")
            file.write("\n")
            file.write("Checks:\n")
            for (check_name, fixed_factors), results, elapsed in zip(self.units, self.unit_results, self.timings):
                passed = sum(result.passed for result in results)
                file.write(f"\t{check_name} {fixed_factors}\n")
                file.write(f"\t\t{passed} of {len(results)} records passed.\n")
                file.write(f"\t\tThe time taken to complete this check was {round(elapsed, 2)} s.\n")
            file.write("\n")
            findings = self.normalization_findings()
            if findings:
                file.write("Normalization Findings:\n")
                for result in findings:
                    file.write(f"\t{result.key}: {result.verdict} {result.diagnostics}\n")
                file.write("\n")
            file.write(f"Verdict: {'PASS' if self.all_passed else 'FAIL'}\n")


def read_run_results(file_name_path):
    """Read in ``run_base.VerificationRun`` object from .pickle file.

    Parameters
    ----------
    file_name_path : str
        Path of .pickle file for reading ``run_base.VerificationRun`` object.

    Returns
    -------
    run : ``run_base.VerificationRun``
        Run that has been executed.
    """
    with open(file_name_path, "rb") as file:
        run = pickle.load(file)
    return run
