"""
Summary
-------
Closed-form identities used by the recursion proof: the alternating
sign sum over moving parts, the psi-class binomial identity, the
centralizer ratio identity and the W-times-RC prefactor identity.
"""
from ..base import Check
from ..combinat import partitions_of
from ..coneverify import (check_identity_signsum, check_psi_binomial, check_ratio_identity, check_w_rc,
                          signsum_patterns)
from ..sectors import RC_NORMALIZATIONS, enumerate_edges, enumerate_sectors


class SignSumIdentity(Check):
    """
    Brute-force the sign sum for every pole group with at most
    ``max_sigma`` parts, every order a and every membership pattern.

    See also
    --------
    base.Check
    """
    def __init__(self, fixed_factors=None):
        if fixed_factors is None:
            fixed_factors = {}
        self.name = "SIGN-SUM"
        self.acceptance = "A5"
        self.specifications = {
            "max_sigma": {
                "description": "largest number of parts of the pole group",
                "datatype": int,
                "default": 4
            },
            "verbose": {
                "description": "print progress messages to stderr",
                "datatype": bool,
                "default": False
            }
        }
        self.check_factor_list = {"max_sigma": self.check_max_sigma}
        super().__init__(fixed_factors)

    def check_max_sigma(self):
        return 1 <= self.factors["max_sigma"] <= 8

    def run(self):
        results = []
        for total in range(1, self.factors["max_sigma"] + 1):
            for sigma_t in partitions_of(total):
                self.progress(f"Running {self.name} on {sigma_t}.")
                n = len(sigma_t)
                for a in range(1, n + 1):
                    failures = []
                    patterns = signsum_patterns(n, a)
                    for pattern in patterns:
                        verdict = check_identity_signsum(sigma_t, pattern, a)
                        if not verdict.passed:
                            failures.append({"pattern": list(pattern), **verdict.details})
                    results.append(self.result({"sigma_t": sigma_t.to_json(), "a": a}, not failures,
                                               patterns=len(patterns), failures=failures))
        return results


class PsiBinomialIdentity(Check):
    """
    Verify the psi-class binomial identity in QQ(X, Y) for k = 1..max_k.

    See also
    --------
    base.Check
    """
    def __init__(self, fixed_factors=None):
        if fixed_factors is None:
            fixed_factors = {}
        self.name = "PSI-BINOMIAL"
        self.acceptance = "A6"
        self.specifications = {
            "max_k": {
                "description": "largest k",
                "datatype": int,
                "default": 8
            },
            "verbose": {
                "description": "print progress messages to stderr",
                "datatype": bool,
                "default": False
            }
        }
        self.check_factor_list = {"max_k": self.check_max_k}
        super().__init__(fixed_factors)

    def check_max_k(self):
        return self.factors["max_k"] >= 1

    def run(self):
        results = []
        for k in range(1, self.factors["max_k"] + 1):
            verdict = check_psi_binomial(k)
            results.append(self.result({"k": k}, verdict.passed, **verdict.details))
        return results


class EdgeIdentityCheck(Check):
    """Base class for identities checked on every enumerated edge."""
    def edge_specifications(self, max_d):
        return {
            "max_d": {
                "description": "largest number of points d",
                "datatype": int,
                "default": max_d
            },
            "max_r": {
                "description": "largest dimension r of the projective space",
                "datatype": int,
                "default": 1
            },
            "beta_cap": {
                "description": "largest edge degree beta(kappa)",
                "datatype": int,
                "default": 2
            },
            "verbose": {
                "description": "print progress messages to stderr",
                "datatype": bool,
                "default": False
            }
        }

    def edge_check_factor_list(self):
        return {
            "max_d": self.check_max_d,
            "max_r": self.check_max_r,
            "beta_cap": self.check_beta_cap
        }

    def check_max_d(self):
        return self.factors["max_d"] >= 1

    def check_max_r(self):
        return self.factors["max_r"] >= 1

    def check_beta_cap(self):
        return self.factors["beta_cap"] >= 1

    def edges(self):
        """Yield (d, r, kappa) for every edge within the factors."""
        for d in range(1, self.factors["max_d"] + 1):
            for r in range(1, self.factors["max_r"] + 1):
                self.progress(f"Running {self.name} on Sym^{d} P^{r}.")
                for s in enumerate_sectors(d, r):
                    for kappa in enumerate_edges(s, self.factors["beta_cap"]):
                        yield d, r, kappa

    def check_edge(self, kappa):
        """Return a list of (key, ``coneverify.Verdict``) pairs for one edge."""
        raise NotImplementedError

    def run(self):
        results = []
        for d, r, kappa in self.edges():
            for key, verdict in self.check_edge(kappa):
                results.append(self.result({"d": d, "r": r, "edge": kappa.to_json(), **key}, verdict.passed,
                                           **verdict.details))
        return results


class RatioIdentity(EdgeIdentityCheck):
    """
    |C_mu(sigma)| / (|S_e| prod beta_eta) = q^{-mov} binom(sigma_{i1}, Mov)
    on every edge with d <= max_d.

    See also
    --------
    checks.identities.EdgeIdentityCheck
    """
    def __init__(self, fixed_factors=None):
        if fixed_factors is None:
            fixed_factors = {}
        self.name = "RATIO-IDENTITY"
        self.acceptance = "A9"
        self.specifications = self.edge_specifications(6)
        self.check_factor_list = self.edge_check_factor_list()
        super().__init__(fixed_factors)

    def check_edge(self, kappa):
        return [({}, check_ratio_identity(kappa))]


class WRecursionCoefficient(EdgeIdentityCheck):
    """
    RC(kappa, a) * W(kappa) equals the combinatorial prefactor for every
    edge with d <= max_d and every a in 1..mov.

    See also
    --------
    checks.identities.EdgeIdentityCheck
    """
    def __init__(self, fixed_factors=None):
        if fixed_factors is None:
            fixed_factors = {}
        self.name = "W-RC"
        self.acceptance = "A10"
        self.specifications = self.edge_specifications(3)
        self.check_factor_list = self.edge_check_factor_list()
        super().__init__(fixed_factors)

    def check_edge(self, kappa):
        return [({"a": a, "rc_normalization": normalization}, check_w_rc(kappa, a, normalization))
                for a in range(1, kappa.mov_count + 1) for normalization in RC_NORMALIZATIONS]
