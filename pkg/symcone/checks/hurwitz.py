"""
Summary
-------
Oracle checks on the factorization counts: invariance under rotating
and reversing the class list, the single-class count, and agreement of
the character-sum backend with brute force.
"""
from itertools import product

from ..base import Check
from ..combinat import partitions_of
from ..symgroup import BRUTE_FORCE_CAP, ClassList, hurwitz_count


class HurwitzOracle(Check):
    """
    Cross-check ``symgroup.hurwitz_count`` on every class list of length
    at most ``max_length`` in S_d for d <= ``max_d``.

    Parameters
    ----------
    fixed_factors : dict
        Fixed factors of the check.

    See also
    --------
    base.Check
    """
    def __init__(self, fixed_factors=None):
        if fixed_factors is None:
            fixed_factors = {}
        self.name = "HURWITZ-ORACLE"
        self.acceptance = "A7"
        self.specifications = {
            "max_d": {
                "description": "largest degree for the invariance and backend checks",
                "datatype": int,
                "default": 5
            },
            "max_length": {
                "description": "longest class list",
                "datatype": int,
                "default": 3
            },
            "single_class_d": {
                "description": "largest degree for the single-class check",
                "datatype": int,
                "default": 6
            },
            "verbose": {
                "description": "print progress messages to stderr",
                "datatype": bool,
                "default": False
            }
        }
        self.check_factor_list = {
            "max_d": self.check_max_d,
            "max_length": self.check_max_length,
            "single_class_d": self.check_single_class_d
        }
        super().__init__(fixed_factors)

    def check_max_d(self):
        return 1 <= self.factors["max_d"] <= BRUTE_FORCE_CAP

    def check_max_length(self):
        return self.factors["max_length"] >= 1

    def check_single_class_d(self):
        return 1 <= self.factors["single_class_d"] <= BRUTE_FORCE_CAP

    def run(self):
        results = []
        for d in range(1, self.factors["single_class_d"] + 1):
            self.progress(f"Running {self.name} single-class counts in S_{d}.")
            failures = []
            for sigma in partitions_of(d):
                count = hurwitz_count(ClassList(d, [sigma]))
                if count != int(sigma.is_ones()):
                    failures.append({"sigma": sigma.to_json(), "count": count})
            results.append(self.result({"d": d, "property": "single-class"}, not failures, failures=failures))
        for d in range(1, self.factors["max_d"] + 1):
            self.progress(f"Running {self.name} class lists in S_{d}.")
            classes = partitions_of(d)
            failures = {"rotation": [], "reversal": [], "character": []}
            lists = 0
            for length in range(1, self.factors["max_length"] + 1):
                for chosen in product(classes, repeat=length):
                    lists += 1
                    chosen = list(chosen)
                    count = hurwitz_count(ClassList(d, chosen))
                    key = [c.to_json() for c in chosen]
                    rotated = hurwitz_count(ClassList(d, chosen[1:] + chosen[:1]))
                    if rotated != count:
                        failures["rotation"].append({"classes": key, "count": count, "rotated": rotated})
                    # Inverting a factorization reverses it and keeps cycle types.
                    reversed_count = hurwitz_count(ClassList(d, chosen[::-1]))
                    if reversed_count != count:
                        failures["reversal"].append({"classes": key, "count": count, "reversed": reversed_count})
                    character_count = hurwitz_count(ClassList(d, chosen), backend="character")
                    if character_count != count:
                        failures["character"].append({"classes": key, "brute": count, "character": character_count})
            for name, found in failures.items():
                results.append(self.result({"d": d, "property": name}, not found, lists=lists, failures=found))
        return results
