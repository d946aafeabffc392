"""
Summary
-------
Edge-combining calculus on random valid chains: combining a subset of
combinable pairs does not depend on the order, every subset gives its
own tree, and the subset can be read back from the edge map.
"""
from ..base import Check
from ..trees import (canonical_form, combinable_pairs, combine_set, edge_map_fibers, is_refinement,
                     minimal_form, pairs_from_edge_map, random_chain, subsets_of_pairs, validate)


class CombiningCalculus(Check):
    """
    Generate ``n_fixtures`` chains and run ``n_orders`` randomized
    combining orders across them.

    Substream 2 builds the chains, substream 1 draws subsets and orders.

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
        self.name = "COMBINING"
        self.acceptance = "A8"
        self.specifications = {
            "max_d": {
                "description": "largest number of points d of the fixtures",
                "datatype": int,
                "default": 2
            },
            "r": {
                "description": "dimension r of the projective space",
                "datatype": int,
                "default": 1
            },
            "max_edges": {
                "description": "longest chain",
                "datatype": int,
                "default": 4
            },
            "n_fixtures": {
                "description": "number of random chains",
                "datatype": int,
                "default": 20
            },
            "n_orders": {
                "description": "total number of randomized combining orders",
                "datatype": int,
                "default": 1000
            },
            "seed": {
                "description": "MRG32k3a stream index",
                "datatype": int,
                "default": 0
            },
            "verbose": {
                "description": "print progress messages to stderr",
                "datatype": bool,
                "default": False
            }
        }
        self.check_factor_list = {
            "max_d": self.check_max_d,
            "r": self.check_r,
            "max_edges": self.check_max_edges,
            "n_fixtures": self.check_n_fixtures,
            "n_orders": self.check_n_orders,
            "seed": self.check_seed
        }
        super().__init__(fixed_factors)

    def check_max_d(self):
        return self.factors["max_d"] >= 1

    def check_r(self):
        return self.factors["r"] >= 1

    def check_max_edges(self):
        return self.factors["max_edges"] >= 1

    def check_n_fixtures(self):
        return self.factors["n_fixtures"] >= 1

    def check_n_orders(self):
        return self.factors["n_orders"] >= 0

    def check_seed(self):
        return self.factors["seed"] >= 0

    def fixtures(self, rng):
        chains = []
        for index in range(self.factors["n_fixtures"]):
            d = 1 + index % self.factors["max_d"]
            n_edges = rng.randint(1, self.factors["max_edges"])
            chains.append((d, random_chain(rng, d, self.factors["r"], n_edges)))
        return chains

    def run(self):
        if not self.rng_list:
            self.attach_rngs(self.default_rngs(self.factors["seed"]))
        order_rng = self.rng_list[1]
        results = []
        fixtures = self.fixtures(self.rng_list[2])
        orders_left = self.factors["n_orders"]
        for index, (d, t) in enumerate(fixtures):
            self.progress(f"Running {self.name} on fixture {index} with {len(t.edges)} edges.")
            n_orders = orders_left // (len(fixtures) - index)
            orders_left -= n_orders
            failures, summary = check_fixture(t, order_rng, n_orders)
            results.append(self.result({"fixture": index, "d": d}, not failures, **summary, failures=failures))
        return results


def check_fixture(t, rng, n_orders):
    """Run the combining checks on one tree.

    Returns
    -------
    failures : list [str]
        Descriptions of the properties that failed.
    summary : dict
        Edge, pair, subset and order counts.
    """
    failures = []
    verdict = validate(t)
    if not verdict.passed:
        return [f"fixture fails {verdict.failed()}"], {"edges": len(t.edges)}
    pairs = combinable_pairs(t)
    subsets = subsets_of_pairs(t)
    reference = {}
    forms = {}
    for subset in subsets:
        combined, phi = combine_set(t, subset)
        key = frozenset(subset)
        reference[key] = (canonical_form(combined), edge_map_fibers(phi))
        if not validate(combined).passed:
            failures.append(f"combining {list(subset)} gives an invalid tree")
        recovered = pairs_from_edge_map(t, combined, phi)
        if set(recovered) != set(subset):
            failures.append(f"edge map of {list(subset)} recovers {recovered}")
        forms.setdefault(reference[key][0], []).append(list(subset))
        if not is_refinement(t, combined):
            failures.append(f"combining {list(subset)} is not below the fixture")
    for form, sources in forms.items():
        if len(sources) > 1:
            failures.append(f"subsets {sources} give the same tree")
    minimal = minimal_form(t)
    if combinable_pairs(minimal):
        failures.append("minimal form still has combinable pairs")
    if pairs and is_refinement(minimal, t):
        failures.append("fixture is below its minimal form")
    for _ in range(n_orders):
        subset = [pair for pair in pairs if rng.random() < 0.5]
        rng.shuffle(subset)
        combined, phi = combine_set(t, subset)
        if (canonical_form(combined), edge_map_fibers(phi)) != reference[frozenset(subset)]:
            failures.append(f"order {subset} changes the result")
    return failures, {"edges": len(t.edges), "pairs": len(pairs), "subsets": len(subsets), "orders": n_orders}
