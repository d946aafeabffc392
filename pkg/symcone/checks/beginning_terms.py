"""
Summary
-------
The leading terms of every restriction: the x_Pi coefficient at Q^0 is
the constant H(sigma, Pi), and with the exponential factor on the t_i
coefficient at Q^0 is the restricted divisor.
"""
from ..base import Check
from ..combinat import NONNEG, partitions_of
from ..ifunction import SeriesCaps, SeriesIndex, i_restricted
from ..sectors import enumerate_sectors
from ..symgroup import BRUTE_FORCE_CAP, HURWITZ_BACKENDS, class_size


def expected_two_class_count(sigma, pi):
    """H(sigma, Pi) in closed form: pairs g, g^{-1} from one class."""
    underlying = sigma.underlying()
    if underlying != pi:
        return 0
    return class_size(underlying.total, underlying)


def restricted_divisor(s, i):
    """sum_eta r_sigma (a_{i(eta)} - a_i), z-free."""
    ctx = s.ring()
    total = ctx.zero()
    for i_eta, _ in s.occurrences():
        total = total + (ctx.alpha(i_eta) - ctx.alpha(i)) * s.r_sigma
    return total


class BeginningTerms(Check):
    """
    Check the Q^0 coefficients linear in x and in t on every sector of
    Sym^d P^r for d <= ``max_d`` and 1 <= r <= ``max_r``.

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
        self.name = "BEGINNING-TERMS"
        self.acceptance = "S1"
        self.specifications = {
            "max_d": {
                "description": "largest number of points d",
                "datatype": int,
                "default": 3
            },
            "max_r": {
                "description": "largest dimension r of the projective space",
                "datatype": int,
                "default": 2
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
            "max_d": self.check_max_d,
            "max_r": self.check_max_r,
            "hurwitz_backend": self.check_hurwitz_backend
        }
        super().__init__(fixed_factors)

    def check_max_d(self):
        return self.factors["max_d"] >= 1

    def check_max_r(self):
        return self.factors["max_r"] >= 1

    def check_hurwitz_backend(self):
        return self.factors["hurwitz_backend"] in HURWITZ_BACKENDS

    def check_runnable_factors(self):
        return self.factors["hurwitz_backend"] != "brute" or self.factors["max_d"] <= BRUTE_FORCE_CAP

    def run(self):
        results = []
        caps = SeriesCaps(0, 1, 1)
        options = {"label_convention": NONNEG, "include_exp_factor": True,
                   "hurwitz_backend": self.factors["hurwitz_backend"]}
        for d in range(1, self.factors["max_d"] + 1):
            classes = partitions_of(d)
            for r in range(1, self.factors["max_r"] + 1):
                self.progress(f"Running {self.name} on Sym^{d} P^{r}.")
                zeros = (0,) * (r + 1)
                for s in enumerate_sectors(d, r):
                    series = i_restricted(s, caps, options)
                    mismatches = []
                    for pi in classes:
                        observed = series.coefficient(SeriesIndex(0, ((pi, 1),), zeros))
                        expected = expected_two_class_count(s.sigma, pi)
                        if observed != s.ring().const(expected):
                            mismatches.append({"x": pi.to_json(), "observed": str(observed), "expected": expected})
                    for i in range(r + 1):
                        m = tuple(int(j == i) for j in range(r + 1))
                        observed = series.coefficient(SeriesIndex(0, (), m))
                        expected = restricted_divisor(s, i) if s.is_ones() else s.ring().zero()
                        if observed != expected:
                            mismatches.append({"t": i, "observed": str(observed), "expected": str(expected)})
                    results.append(self.result({"d": d, "r": r, "sector": s.to_json()}, not mismatches,
                                               mismatches=mismatches))
        return results
