"""
Summary
-------
Condition (I): every coefficient of every restriction is regular away
from z = 0, z = infinity and the edge weights wbar(kappa).
"""
from ..base import Check
from ..coneverify import check_condition_I
from ..combinat import LABEL_CONVENTIONS, NONNEG
from ..ifunction import SeriesCaps, all_restrictions
from ..symgroup import BRUTE_FORCE_CAP, HURWITZ_BACKENDS


def series_specifications():
    """Factors shared by the checks that compute restricted series."""
    return {
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


class SeriesCheck(Check):
    """Base class for checks that consume the restricted series of Sym^d P^r."""
    def series_check_factor_list(self):
        return {
            "d": self.check_d,
            "r": self.check_r,
            "beta_cap": self.check_beta_cap,
            "x_cap": self.check_x_cap,
            "t_cap": self.check_t_cap,
            "convention": self.check_convention,
            "hurwitz_backend": self.check_hurwitz_backend
        }

    def check_d(self):
        return self.factors["d"] >= 1

    def check_r(self):
        return self.factors["r"] >= 0

    def check_beta_cap(self):
        return self.factors["beta_cap"] >= 0

    def check_x_cap(self):
        return self.factors["x_cap"] >= 0

    def check_t_cap(self):
        return self.factors["t_cap"] >= 0

    def check_convention(self):
        return self.factors["convention"] in LABEL_CONVENTIONS

    def check_hurwitz_backend(self):
        return self.factors["hurwitz_backend"] in HURWITZ_BACKENDS

    def check_runnable_factors(self):
        # Brute-force counting needs d below its cap.
        return self.factors["hurwitz_backend"] != "brute" or self.factors["d"] <= BRUTE_FORCE_CAP

    def caps(self):
        return SeriesCaps(self.factors["beta_cap"], self.factors["x_cap"], self.factors["t_cap"])

    def options(self):
        return {"label_convention": self.factors["convention"],
                "include_exp_factor": self.factors["include_exp_factor"],
                "hurwitz_backend": self.factors["hurwitz_backend"]}

    def restrictions(self):
        self.progress(f"Running restricted series for Sym^{self.factors['d']} P^{self.factors['r']} with {self.caps()}.")
        return all_restrictions(self.factors["d"], self.factors["r"], self.caps(), self.options())


class PoleCondition(SeriesCheck):
    """
    Scan the factored denominators of every coefficient and compare the
    pole locations with {0} and {wbar(kappa)}.

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
        self.name = "CONDITION-I"
        self.acceptance = "A3"
        self.specifications = series_specifications()
        self.check_factor_list = self.series_check_factor_list()
        super().__init__(fixed_factors)

    def run(self):
        results = []
        for sector, series in sorted(self.restrictions().items()):
            self.progress(f"Running {self.name} on {sector!r}.")
            report = check_condition_I(series)
            stray = sorted({str(form) for form in report.stray_poles()})
            errors = [row["error"] for row in report.rows if row["error"] is not None]
            infinity = max((row["support"].infinity_degree for row in report.rows if row["support"] is not None), default=None)
            results.append(self.result({"sector": sector.to_json()}, report.passed,
                                       indices=len(report.rows), allowed=[str(form) for form in report.allowed],
                                       stray=stray, nonlinear=errors, max_infinity_degree=infinity))
        return results
