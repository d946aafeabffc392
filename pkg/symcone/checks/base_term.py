"""
Summary
-------
The beta = 0 term of the restricted I-function without x or t: -z on
every sector with ones monodromy, absent on every other sector.
"""
from ..base import Check
from ..combinat import LABEL_CONVENTIONS, NONNEG
from ..ifunction import SeriesCaps, SeriesIndex, i_restricted
from ..sectors import enumerate_sectors


class BaseTerm(Check):
    """
    Compare the (beta, k, m) = (0, 0, 0) coefficient of every fixed-sector
    restriction with -z on ones sectors and with zero elsewhere.

    Attributes
    ----------
    name : str
        Name of check.
    acceptance : str
        Acceptance family.
    factors : dict
        Changeable factors of the check.
    specifications : dict
        Details of each factor (for CLI flags, data validation, and defaults).
    check_factor_list : dict
        Switch case for checking factor validity.

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
        self.name = "BASE-TERM"
        self.acceptance = "A1"
        self.specifications = {
            "max_d": {
                "description": "largest number of points d",
                "datatype": int,
                "default": 4
            },
            "max_r": {
                "description": "largest dimension r of the projective space",
                "datatype": int,
                "default": 2
            },
            "convention": {
                "description": "label positivity convention (nonneg or pos)",
                "datatype": str,
                "default": NONNEG
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
            "convention": self.check_convention
        }
        super().__init__(fixed_factors)

    def check_max_d(self):
        return 1 <= self.factors["max_d"] <= 6

    def check_max_r(self):
        return self.factors["max_r"] >= 0

    def check_convention(self):
        return self.factors["convention"] in LABEL_CONVENTIONS

    def run(self):
        results = []
        caps = SeriesCaps(0, 0, 0)
        options = {"label_convention": self.factors["convention"]}
        for d in range(1, self.factors["max_d"] + 1):
            for r in range(self.factors["max_r"] + 1):
                self.progress(f"Running {self.name} on Sym^{d} P^{r}.")
                index = SeriesIndex(0, (), (0,) * (r + 1))
                mismatches = []
                sectors = enumerate_sectors(d, r)
                for s in sectors:
                    series = i_restricted(s, caps, options)
                    ctx = s.ring()
                    expected = -ctx.zvar() if s.is_ones() else ctx.zero()
                    observed = series.coefficient(index)
                    if observed != expected:
                        mismatches.append({"sector": s.to_json(), "observed": str(observed), "expected": str(expected)})
                results.append(self.result({"d": d, "r": r}, not mismatches,
                                           sectors=len(sectors), mismatches=mismatches))
        return results
