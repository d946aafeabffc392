"""
Summary
-------
Condition (II): the Laurent recursion at every (sector, wbar, a), with
a randomized specialization cross-check of each symbolic comparison and
a run-level summary of any uniform normalization discrepancy.
"""
from ..coneverify import check_condition_II, normalization_probe, normalization_variants
from ..combinat import LABEL_CONVENTIONS
from ..sectors import PRINTED, RC_NORMALIZATIONS, edge_weight, enumerate_edges
from .poles import SeriesCheck, series_specifications

MAX_DIFFS_REPORTED = 3


def recursion_specifications():
    specifications = series_specifications()
    specifications.update({
        "probe": {
            "description": "run the normalization probe on failing reports",
            "datatype": bool,
            "default": False
        },
        "n_specializations": {
            "description": "random rational points per report for the cross-check",
            "datatype": int,
            "default": 5
        },
        "seed": {
            "description": "MRG32k3a stream index for specialization points",
            "datatype": int,
            "default": 0
        },
        "rc_normalization": {
            "description": "how r_sigma enters the recursion coefficients (printed or factors)",
            "datatype": str,
            "default": PRINTED
        },
        "accept_uniform_normalization": {
            "description": "count failures as passing when one global r_sigma exponent or one RC normalization explains them all",
            "datatype": bool,
            "default": False
        }
    })
    return specifications


class RecursionCondition(SeriesCheck):
    """
    Compare Laur(f_s, (wbar - z)^{-a}) with the edge sum of recursion
    coefficients times target Laurent coefficients, index by index.

    Attributes
    ----------
    reports : list [``coneverify.RecursionReport``]
        Reports of the last run.
    summary : dict
        Run-level normalization summary of the last run.

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
        self.name = "CONDITION-II"
        self.specifications = recursion_specifications()
        self.check_factor_list = self.series_check_factor_list()
        self.check_factor_list["n_specializations"] = self.check_n_specializations
        self.check_factor_list["seed"] = self.check_seed
        self.check_factor_list["rc_normalization"] = self.check_rc_normalization
        super().__init__(fixed_factors)
        self.acceptance = "A4" if self.factors["d"] == 1 else "A4'"
        self.reports = []
        self.summary = {}

    def check_n_specializations(self):
        return self.factors["n_specializations"] >= 0

    def check_seed(self):
        return self.factors["seed"] >= 0

    def check_rc_normalization(self):
        return self.factors["rc_normalization"] in RC_NORMALIZATIONS

    def expansion_points(self, sector):
        """Each distinct wbar of an edge leaving ``sector`` with the largest mov there."""
        points = {}
        edges = enumerate_edges(sector, self.factors["beta_cap"])
        for kappa in edges:
            wbar = edge_weight(kappa)[1]
            points[wbar] = max(points.get(wbar, 0), kappa.mov_count)
        return edges, sorted(points.items())

    def run(self):
        if not self.rng_list:
            self.attach_rngs(self.default_rngs(self.factors["seed"]))
        specialization_rng = self.rng_list[0]
        all_series = self.restrictions()
        self.reports = []
        for sector in sorted(all_series):
            self.progress(f"Running {self.name} on {sector!r}.")
            edges, points = self.expansion_points(sector)
            for wbar, max_mov in points:
                # One order past the largest mov, where the right side is empty.
                for a in range(1, max_mov + 2):
                    report = check_condition_II(all_series, sector, wbar, a, edges=edges, rng=specialization_rng,
                                                n_specializations=self.factors["n_specializations"],
                                                normalization=self.factors["rc_normalization"])
                    if self.factors["probe"] and not report.symbolic_pass:
                        report.probe = normalization_probe(report)
                        report.variants = normalization_variants(report)
                    self.reports.append(report)
        self.summary = summarize_normalization(self.reports)
        accept = self.factors["accept_uniform_normalization"] and self.summary["explained"]
        results = []
        for report in self.reports:
            normalized_by = explanation(report, self.summary) if accept and not report.passed else None
            diffs = sorted(report.diff.items())
            results.append(self.result(
                {"sector": report.sector.to_json(), "wbar": str(report.wbar), "a": report.a,
                 "rc_normalization": report.normalization},
                report.passed or normalized_by is not None,
                indices=len(report.lhs), edges=len(report.edges), nonzero_diffs=len(diffs),
                diff=[{"index": index.to_json(), "value": str(value)} for index, value in diffs[:MAX_DIFFS_REPORTED]],
                specializations=report.specializations,
                probe=report.probe.to_json() if report.probe is not None else None,
                variants=report.variants,
                normalized_by=normalized_by))
        summary_passed = self.summary["failing"] == 0 or accept
        results.append(self.result({"summary": "normalization", "d": self.factors["d"], "r": self.factors["r"],
                                    "convention": self.factors["convention"],
                                    "rc_normalization": self.factors["rc_normalization"]},
                                   summary_passed, **self.summary))
        return results


def summarize_normalization(reports):
    """Whether the failing reports share one explanation: a single r_sigma
    exponent, or an RC normalization under which each of them holds.

    Returns
    -------
    summary : dict
        reports, failing, unprobed, exponents, global_exponent, uniform,
        variants, explained.
    """
    failing = [report for report in reports if not report.passed]
    unprobed = sum(1 for report in failing if report.probe is None)
    exponents = sorted({str(report.probe.exponent) for report in failing if report.probe is not None})
    uniform = bool(failing) and unprobed == 0 and len(exponents) == 1
    variants = []
    if failing:
        variants = [normalization for normalization in RC_NORMALIZATIONS
                    if all(report.variants and normalization in report.variants for report in failing)]
    return {"reports": len(reports), "failing": len(failing), "unprobed": unprobed, "exponents": exponents,
            "global_exponent": exponents[0] if uniform else None, "uniform": uniform,
            "variants": variants, "explained": uniform or bool(variants)}


def explanation(report, summary):
    """What accounts for a failing report under ``summary``, or None."""
    if summary["variants"]:
        return f"rc_normalization={summary['variants'][0]}"
    if summary["uniform"] and report.probe is not None and str(report.probe.exponent) == summary["global_exponent"]:
        return f"r_sigma**{summary['global_exponent']}"
    return None


class LabelConventionProbe(SeriesCheck):
    """
    Run the recursion under each label convention and report which ones
    satisfy it, exactly or up to one global normalization.

    Parameters
    ----------
    fixed_factors : dict
        Fixed factors of the check.

    See also
    --------
    checks.recursion.RecursionCondition
    """
    def __init__(self, fixed_factors=None):
        if fixed_factors is None:
            fixed_factors = {}
        self.name = "LABEL-CONVENTION"
        self.acceptance = "A4'"
        self.specifications = recursion_specifications()
        self.specifications["d"]["default"] = 2
        self.specifications["beta_cap"]["default"] = 2
        self.specifications["x_cap"]["default"] = 1
        self.check_factor_list = self.series_check_factor_list()
        super().__init__(fixed_factors)

    def run(self):
        summaries = {}
        satisfying = []
        for convention in LABEL_CONVENTIONS:
            self.progress(f"Running {self.name} with convention {convention}.")
            factors = dict(self.factors)
            factors.update({"convention": convention, "probe": True, "accept_uniform_normalization": True})
            check = RecursionCondition(factors)
            check.attach_rngs(self.rng_list)
            check.run()
            summaries[convention] = check.summary
            if check.summary["failing"] == 0 or check.summary["explained"]:
                satisfying.append(convention)
        return [self.result({"d": self.factors["d"], "r": self.factors["r"]}, bool(satisfying),
                            satisfying=satisfying, summaries=summaries)]
