#!/usr/bin/env python
"""
Summary
-------
Provide dictionary directories listing checks, the checks behind each
CLI subcommand, and the acceptance suite.
"""
from .checks.base_term import BaseTerm
from .checks.beginning_terms import BeginningTerms
from .checks.classical import ClassicalReduction
from .checks.combining import CombiningCalculus
from .checks.hurwitz import HurwitzOracle
from .checks.identities import PsiBinomialIdentity, RatioIdentity, SignSumIdentity, WRecursionCoefficient
from .checks.involution import EdgeInvolution
from .checks.poles import PoleCondition
from .checks.recursion import LabelConventionProbe, RecursionCondition

# directory dictionaries
check_directory = {
    "BASE-TERM": BaseTerm,
    "D1-REDUCTION": ClassicalReduction,
    "CONDITION-I": PoleCondition,
    "CONDITION-II": RecursionCondition,
    "LABEL-CONVENTION": LabelConventionProbe,
    "SIGN-SUM": SignSumIdentity,
    "PSI-BINOMIAL": PsiBinomialIdentity,
    "HURWITZ-ORACLE": HurwitzOracle,
    "COMBINING": CombiningCalculus,
    "RATIO-IDENTITY": RatioIdentity,
    "W-RC": WRecursionCoefficient,
    "EDGE-INVOLUTION": EdgeInvolution,
    "BEGINNING-TERMS": BeginningTerms
}

subcommand_checks = {
    "verify": ["CONDITION-I", "CONDITION-II"],
    "identities": ["SIGN-SUM", "PSI-BINOMIAL", "RATIO-IDENTITY", "W-RC"]
}

# Desk-scale acceptance battery, in report order.
suite_units = [
    ("BASE-TERM", {"max_d": 4, "max_r": 2}),
    ("D1-REDUCTION", {"max_r": 2, "beta_cap": 3}),
    ("CONDITION-I", {"d": 1, "r": 1, "beta_cap": 3, "x_cap": 0}),
    ("CONDITION-I", {"d": 2, "r": 1, "beta_cap": 2, "x_cap": 2}),
    ("CONDITION-I", {"d": 3, "r": 1, "beta_cap": 2, "x_cap": 1}),
    ("CONDITION-I", {"d": 2, "r": 2, "beta_cap": 2, "x_cap": 1}),
    ("CONDITION-II", {"d": 1, "r": 1, "beta_cap": 3}),
    ("CONDITION-II", {"d": 1, "r": 2, "beta_cap": 3}),
    ("CONDITION-II", {"d": 2, "r": 1, "beta_cap": 2, "x_cap": 1, "probe": True,
                      "accept_uniform_normalization": True}),
    ("CONDITION-II", {"d": 2, "r": 1, "beta_cap": 2, "x_cap": 1, "rc_normalization": "factors"}),
    ("SIGN-SUM", {"max_sigma": 4}),
    ("PSI-BINOMIAL", {"max_k": 8}),
    ("HURWITZ-ORACLE", {"max_d": 5, "max_length": 3, "single_class_d": 6}),
    ("COMBINING", {"max_d": 2, "max_edges": 4, "n_orders": 1000}),
    ("RATIO-IDENTITY", {"max_d": 6, "beta_cap": 2}),
    ("W-RC", {"max_d": 3, "beta_cap": 2}),
    ("EDGE-INVOLUTION", {"max_d": 3, "beta_cap": 2}),
    ("BEGINNING-TERMS", {"max_d": 3, "max_r": 2})
]
