#!/usr/bin/env python
"""
Summary
-------
Provide base classes for verification checks and their results,
and the exception hierarchy shared by every module.
"""
import sys

from mrg32k3a.mrg32k3a import MRG32k3a


class SymconeError(Exception):
    """Base class of every error raised by the package."""


class InvalidConfig(SymconeError):
    """A check or run was configured with factors that fail validation."""


PASS = "PASS"
FAIL = "FAIL"


class Check(object):
    """Base class to implement verification checks.

    A check is a unit of verification work (the analogue of a simulation
    model): it carries changeable factors, validates them against its
    specifications, and produces a list of ``base.CheckResult`` records
    when run.

    Attributes
    ----------
    name : str
        Name of check.
    acceptance : str
        Acceptance family the check reports under, e.g. "A4".
    factors : dict
        Changeable factors of the check.
    specifications : dict
        Details of each factor (for CLI flags, data validation, and defaults).
    check_factor_list : dict
        Switch case for checking factor validity.
    rng_list : list [``mrg32k3a.mrg32k3a.MRG32k3a``]
        RNGs used by the check for specializations and randomized orders.

    Parameters
    ----------
    fixed_factors : dict
        Dictionary of user-specified check factors.
    """
    def __init__(self, fixed_factors):
        # Set factors of the check.
        # Fill in missing factors with default values.
        self.factors = dict(fixed_factors)
        for key in self.specifications:
            if key not in fixed_factors:
                self.factors[key] = self.specifications[key]["default"]
        self.rng_list = []

    def __eq__(self, other):
        """Check if two checks are equivalent.

        Parameters
        ----------
        other : ``base.Check``
            Other ``base.Check`` object to compare to self.

        Returns
        -------
        bool
            True if the two checks are equivalent, otherwise False.
        """
        if type(self) == type(other):
            return self.factors == other.factors
        return False

    def __repr__(self):
        return f"{type(self).__name__}({self.factors})"

    def check_factor_datatype(self, factor_name):
        """Determine if a factor's data type matches its specification.

        Returns
        -------
        is_right_type : bool
            True if factor is of specified data type, otherwise False.
        """
        is_right_type = isinstance(self.factors[factor_name], self.specifications[factor_name]["datatype"])
        return is_right_type

    def check_runnable_factor(self, factor_name):
        """Determine if the check can be run with the given factor.

        Parameters
        ----------
        factor_name : str
            Name of factor for dictionary lookup (i.e., key).

        Returns
        -------
        is_runnable : bool
            True if the factor has the right type and passes its checker.
        """
        is_runnable = True
        is_runnable *= self.check_factor_datatype(factor_name)
        if factor_name in self.check_factor_list:
            is_runnable *= self.check_factor_list[factor_name]()
        return bool(is_runnable)

    def check_runnable_factors(self):
        """Determine if the check can be run with the given factors.

        Notes
        -----
        Subclasses override this with cross-factor rules.

        Returns
        -------
        is_runnable : bool
            True if the factors are jointly valid, otherwise False.
        """
        return True

    def validate(self):
        """Raise ``InvalidConfig`` naming the first factor that fails its checks."""
        for factor_name in self.specifications:
            if not self.check_runnable_factor(factor_name):
                raise InvalidConfig(f"Check {self.name}: invalid value {self.factors[factor_name]!r} for factor '{factor_name}'.")
        if not self.check_runnable_factors():
            raise InvalidConfig(f"Check {self.name}: factors {self.factors} are not jointly valid.")

    def attach_rngs(self, rng_list):
        """Attach a list of random-number generators to the check.

        Parameters
        ----------
        rng_list : list [``mrg32k3a.mrg32k3a.MRG32k3a``]
            List of random-number generators used for the check's randomness.
        """
        self.rng_list = rng_list

    def default_rngs(self, seed):
        """Create the RNGs a check uses when none were attached.

        Substream 0 draws specialization points, substream 1 shuffles
        combining orders, substream 2 builds random fixtures.
        """
        return [MRG32k3a(s_ss_sss_index=[seed, ss, 0]) for ss in range(3)]

    def progress(self, message):
        if self.factors.get("verbose", False):
            print(message, file=sys.stderr)

    def result(self, key, passed, **diagnostics):
        """Build a ``base.CheckResult`` tagged with this check's name."""
        return CheckResult(check=self.name, acceptance=self.acceptance, key=key,
                           verdict=PASS if passed else FAIL, diagnostics=diagnostics)

    def run(self):
        """Run the check for the current factors.

        Returns
        -------
        results : list [``base.CheckResult``]
            One record per verified unit.
        """
        raise NotImplementedError


class CheckResult(object):
    """Outcome of one verified unit of a check.

    Attributes
    ----------
    check : str
        Name of the check that produced the record.
    acceptance : str
        Acceptance family, e.g. "A3".
    key : dict
        JSON-serializable identification of the unit (sector, index, edge, ...).
    verdict : str
        "PASS" or "FAIL".
    diagnostics : dict
        JSON-serializable details: observed values, diffs, probe findings.
    """
    def __init__(self, check, acceptance, key, verdict, diagnostics=None):
        self.check = check
        self.acceptance = acceptance
        self.key = key
        self.verdict = verdict
        self.diagnostics = {} if diagnostics is None else diagnostics

    @property
    def passed(self):
        return self.verdict == PASS

    def to_record(self):
        record = {"check": self.check, "acceptance": self.acceptance, "verdict": self.verdict}
        record.update(self.key)
        if self.diagnostics:
            record["diagnostics"] = self.diagnostics
        return record

    def sort_key(self):
        return (self.acceptance, self.check, repr(sorted(self.key.items())))

    def __repr__(self):
        return f"CheckResult({self.check}, {self.key}, {self.verdict})"
