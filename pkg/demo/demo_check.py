"""
This script is intended to help with debugging a single check.
It creates a check (using the directory), runs it on a small parameter
set and prints every record it produces.
"""

import sys
import os.path as o
sys.path.append(o.abspath(o.join(o.dirname(sys.modules[__name__].__file__), "..")))

# Import the check directory.
from symcone.directory import check_directory

# !! When adding a new check, first go to directory.py.
# There you should add the import statement and an entry in check_directory.

# Specify the name of the check to run.

# check_name = <check_name>
# This name is a string and should match a key of check_directory.

# Example with the pole condition on Sym^2 P^1.
# -----------------------------------------------
check_name = "CONDITION-I"
fixed_factors = {"d": 2, "r": 1, "beta_cap": 2, "x_cap": 1}
# -----------------------------------------------

print(f"Running check {check_name} with factors {fixed_factors}.")

# Initialize an instance of the check class and validate its factors.
mycheck = check_directory[check_name](fixed_factors)
mycheck.validate()

# Random number streams only matter for checks that specialize variables.
mycheck.attach_rngs(mycheck.default_rngs(seed=0))

results = mycheck.run()
for result in results:
    print(result)

n_passed = sum(result.passed for result in results)
print(f"{n_passed} of {len(results)} records passed.")
