"""
Summary
-------
For d = 1 the restriction must reduce to the I-function of P^r at a
fixed point, coded here directly in sympy expressions.
"""
from sympy import Integer, cancel, symbols

from ..base import Check
from ..combinat import NONNEG
from ..ifunction import SeriesCaps, SeriesIndex, i_restricted
from ..sectors import enumerate_sectors


def classical_restriction(r, j, beta):
    """The Q^beta coefficient of I_{P^r}(Q, -z) restricted to P_j:
    -z / prod_{gamma=1}^{beta} prod_{i=0}^{r} (a_j - a_i - gamma*z).

    Returns
    -------
    expr : ``sympy.Expr``
        In the symbols a0..ar and z.
    """
    alphas = symbols(f"a0:{r + 1}")
    z = symbols("z")
    denominator = Integer(1)
    for gamma in range(1, beta + 1):
        for i in range(r + 1):
            denominator *= alphas[j] - alphas[i] - gamma * z
    return -z / denominator


class ClassicalReduction(Check):
    """
    Compare every d = 1 restriction with the classical projective-space
    formula, coefficient by coefficient in beta.

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
        self.name = "D1-REDUCTION"
        self.acceptance = "A2"
        self.specifications = {
            "max_r": {
                "description": "largest dimension r of the projective space",
                "datatype": int,
                "default": 2
            },
            "beta_cap": {
                "description": "largest Novikov exponent beta",
                "datatype": int,
                "default": 3
            },
            "verbose": {
                "description": "print progress messages to stderr",
                "datatype": bool,
                "default": False
            }
        }
        self.check_factor_list = {
            "max_r": self.check_max_r,
            "beta_cap": self.check_beta_cap
        }
        super().__init__(fixed_factors)

    def check_max_r(self):
        return self.factors["max_r"] >= 0

    def check_beta_cap(self):
        return self.factors["beta_cap"] >= 0

    def run(self):
        results = []
        beta_cap = self.factors["beta_cap"]
        caps = SeriesCaps(beta_cap, 0, 0)
        for r in range(self.factors["max_r"] + 1):
            self.progress(f"Running {self.name} on P^{r}.")
            for s in enumerate_sectors(1, r):
                j = s.mu.index(1)
                series = i_restricted(s, caps, {"label_convention": NONNEG})
                mismatches = []
                for beta in range(beta_cap + 1):
                    observed = series.coefficient(SeriesIndex(beta, (), (0,) * (r + 1))).to_expr()
                    expected = classical_restriction(r, j, beta)
                    if cancel(observed - expected) != 0:
                        mismatches.append({"beta": beta, "observed": str(observed), "expected": str(expected)})
                results.append(self.result({"r": r, "sector": s.to_json()}, not mismatches,
                                           betas=beta_cap + 1, mismatches=mismatches))
        return results
