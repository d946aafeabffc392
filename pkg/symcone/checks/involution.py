"""
Summary
-------
Every edge has exactly one reverse edge from its target back to its
source, with opposite weight and the same r_sigma.
"""
from ..coneverify import Verdict
from ..sectors import edge_weight, enumerate_edges
from .identities import EdgeIdentityCheck


class EdgeInvolution(EdgeIdentityCheck):
    """
    Check the edge/target involution on every enumerated edge.

    See also
    --------
    checks.identities.EdgeIdentityCheck
    """
    def __init__(self, fixed_factors=None):
        if fixed_factors is None:
            fixed_factors = {}
        self.name = "EDGE-INVOLUTION"
        self.acceptance = "S3"
        self.specifications = self.edge_specifications(3)
        self.check_factor_list = self.edge_check_factor_list()
        super().__init__(fixed_factors)

    def check_edge(self, kappa):
        problems = []
        reverse = kappa.reverse()
        back = [other for other in enumerate_edges(kappa.target, self.factors["beta_cap"])
                if other.target == kappa.base and other.i1 == kappa.i2 and other.i2 == kappa.i1
                and other.mov == kappa.mov and other.q == kappa.q]
        if back != [reverse]:
            problems.append(f"{len(back)} reverse edges found")
        if reverse.r_sigma != kappa.r_sigma:
            problems.append(f"r_sigma changes from {kappa.r_sigma} to {reverse.r_sigma}")
        if edge_weight(reverse)[1] != -edge_weight(kappa)[1]:
            problems.append("wbar of the reverse edge is not the negative")
        return [({}, Verdict(not problems, problems=problems))]
