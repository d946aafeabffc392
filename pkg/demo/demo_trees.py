"""
This script walks through the tree-combining calculus on a small chain.
It splits one edge of Sym^3 P^1 into three unit moves, lists the
combinable pairs, and collapses the chain to its minimal form.
"""

import sys
import os.path as o
sys.path.append(o.abspath(o.join(o.dirname(sys.modules[__name__].__file__), "..")))

from symcone.sectors import EdgeClass, FixedSector
from symcone.trees import combinable_pairs, combine_set, minimal_form, one_edge_tree, split_edge, validate

# One edge moving three unit parts from coordinate 0 to coordinate 1.
kappa = EdgeClass(FixedSector((3, 0), [[1, 1, 1], []]), 0, 1, [1, 1, 1], 1)

chain = split_edge(kappa, [[1], [1], [1]])
print(f"Chain: {chain}")
print(f"Valid: {validate(chain).to_json()}")

pairs = combinable_pairs(chain)
print(f"Combinable pairs: {pairs}")

combined, edge_map = combine_set(chain, pairs)
print(f"Edge map after combining every pair: {edge_map}")

minimal = minimal_form(chain)
print(f"Minimal form equals the original edge: {minimal == one_edge_tree(kappa)}")
