"""
This script is intended to help with running a batch of checks.
It builds a verification run from a list of (check name, factors) units,
runs it, saves the run to a .pickle file and writes a readable log and a
.csv summary.
"""

import sys
import os.path as o
sys.path.append(o.abspath(o.join(o.dirname(sys.modules[__name__].__file__), "..")))

# Import the run classes.
from symcone.run_base import RunConfig, VerificationRun, read_run_results

# Specify the units of the run.
# Each unit is a check name from directory.py and a dictionary of factors.
units = [
    ("BASE-TERM", {"max_d": 3, "max_r": 1}),
    ("CONDITION-II", {"d": 1, "r": 1, "beta_cap": 3}),
    ("SIGN-SUM", {"max_sigma": 4}),
    ("PSI-BINOMIAL", {"max_k": 8})
]

# Shared run factors. Workers above 1 run the units in separate processes.
config = RunConfig({"seed": 0, "workers": 2})

myrun = VerificationRun(units, config, name="demo_run")
print(f"Results will be stored as {myrun.file_name_path}.")
myrun.run()

# If the run has already been performed, uncomment the following line
# (and comment out the myrun.run() line above) to read in results
# from a .pickle file.
# myrun = read_run_results(myrun.file_name_path)

myrun.record_run_results()
myrun.log_run_results()
myrun.print_to_csv("runs/outputs/demo_run_summary.csv")

print(myrun.summary_table())
print(f"Verdict: {'PASS' if myrun.all_passed else 'FAIL'}")
