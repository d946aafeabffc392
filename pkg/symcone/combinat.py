"""
Summary
-------
Partitions, multipartitions and labelings, with the automorphism
counts used throughout the fixed-point formulas.
"""
from collections import Counter
from functools import reduce
from itertools import product
from math import gcd

from scipy.special import comb, factorial

from .base import SymconeError

NONNEG = "nonneg"
POS = "pos"
LABEL_CONVENTIONS = (NONNEG, POS)


class InvalidPart(SymconeError):
    """A partition was given a part that is not a positive integer."""


class ShapeMismatch(SymconeError):
    """Two combinatorial objects that must have matching shapes do not."""


def _lcm(a, b):
    return a * b // gcd(a, b)


class Partition(object):
    """A multiset of positive integers stored in descending order.

    Attributes
    ----------
    parts : tuple [int]
        Parts, sorted descending.

    Parameters
    ----------
    parts : iterable [int], default=()
        Parts in any order; the empty partition is permitted.
    """
    __slots__ = ("parts",)

    def __init__(self, parts=()):
        if isinstance(parts, Partition):
            parts = parts.parts
        checked = []
        for part in parts:
            if isinstance(part, bool) or int(part) != part or part < 1:
                raise InvalidPart(f"Part {part!r} is not a positive integer.")
            checked.append(int(part))
        self.parts = tuple(sorted(checked, reverse=True))

    @property
    def total(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(("Partition", self.parts))

    def __lt__(self, other):
        return (self.total, self.parts) < (other.total, other.parts)

    def __repr__(self):
        return f"Partition({self.parts})"

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def multiplicities(self):
        return Counter(self.parts)

    def is_ones(self):
        return all(p == 1 for p in self.parts)

    def lcm(self):
        """Least common multiple of the parts; 1 for the empty partition."""
        return reduce(_lcm, self.parts, 1)

    def gcd(self):
        return reduce(gcd, self.parts, 0)

    def product(self):
        return reduce(lambda a, b: a * b, self.parts, 1)

    def contains(self, sub):
        """True if ``sub`` is a submultiset of this partition."""
        mine = self.multiplicities()
        return all(mine[v] >= m for v, m in sub.multiplicities().items())

    def minus(self, sub):
        if not self.contains(sub):
            raise ShapeMismatch(f"{sub} is not a submultiset of {self}.")
        remaining = self.multiplicities() - sub.multiplicities()
        return Partition(remaining.elements())

    def plus(self, other):
        return Partition(self.parts + tuple(other))

    def submultisets(self, nonempty=True):
        """Distinct submultisets, ordered by size then descending parts."""
        values = sorted(self.multiplicities().items(), reverse=True)
        ranges = [range(m + 1) for _, m in values]
        subs = []
        for counts in product(*ranges):
            sub = Partition([v for (v, _), c in zip(values, counts) for _ in range(c)])
            if nonempty and len(sub) == 0:
                continue
            subs.append(sub)
        return sorted(subs, key=lambda p: (len(p), p.total, tuple(-x for x in p.parts)))

    def to_json(self):
        return list(self.parts)


def canonicalize_partition(raw):
    """Return the canonical (sorted descending) form of a list of parts.

    Raises
    ------
    InvalidPart
        If any entry is not a positive integer.
    """
    return Partition(raw)


def partitions_of(n, max_part=None):
    """All partitions of ``n``, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [Partition()]
    result = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            result.append(Partition((first,) + rest.parts))
    return result


class OrderedZeroPartition(tuple):
    """An (r+1)-tuple of nonnegative integers; the distribution of d points
    over the torus-fixed points of P^r.
    """
    def __new__(cls, entries):
        entries = tuple(int(e) for e in entries)
        if len(entries) == 0 or any(e < 0 for e in entries):
            raise ShapeMismatch(f"{entries} is not an ordered zero-partition.")
        return super().__new__(cls, entries)

    @property
    def d(self):
        return sum(self)

    @property
    def r(self):
        return len(self) - 1


def zpart_enumerate(d, r):
    """All (r+1)-tuples of nonnegative integers summing to ``d``,
    in descending lexicographic order.
    """
    if r == 0:
        return [OrderedZeroPartition((d,))]
    result = []
    for first in range(d, -1, -1):
        for rest in zpart_enumerate(d - first, r - 1):
            result.append(OrderedZeroPartition((first,) + tuple(rest)))
    return result


class Multipartition(object):
    """A coordinate-indexed tuple of partitions.

    The label i(eta) of a part is the index of the component holding it.

    Attributes
    ----------
    components : tuple [``combinat.Partition``]
        One partition per coordinate 0..r.
    """
    __slots__ = ("components",)

    def __init__(self, components):
        self.components = tuple(Partition(c) for c in components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __eq__(self, other):
        return isinstance(other, Multipartition) and self.components == other.components

    def __hash__(self):
        return hash(("Multipartition", self.components))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return tuple(c.parts for c in self.components)

    def __repr__(self):
        return f"Multipartition({[list(c.parts) for c in self.components]})"

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.components) + ")"

    @property
    def total(self):
        return sum(c.total for c in self.components)

    @property
    def n_parts(self):
        return sum(len(c) for c in self.components)

    def mu(self):
        return OrderedZeroPartition(c.total for c in self.components)

    def underlying(self):
        """The partition of d obtained as the union of all components."""
        return Partition([p for c in self.components for p in c])

    def occurrences(self):
        """(coordinate, part) for every part occurrence in canonical order."""
        return [(i, p) for i, c in enumerate(self.components) for p in c]

    def lcm(self):
        return self.underlying().lcm()

    def is_ones(self):
        return self.underlying().is_ones()

    def replace(self, i, partition):
        components = list(self.components)
        components[i] = Partition(partition)
        return Multipartition(components)

    def to_json(self):
        return [c.to_json() for c in self.components]


class Labeling(tuple):
    """Labels L_eta, one per part occurrence, parallel to ``occurrences()``."""
    @property
    def total(self):
        return sum(self)


def _occurrence_keys(sigma):
    if isinstance(sigma, Multipartition):
        return sigma.occurrences()
    return [(0, p) for p in sigma]


def aut_order(sigma):
    """Order of the group S_sigma of part permutations preserving values
    (and coordinates, for a multipartition).
    """
    order = 1
    for multiplicity in Counter(_occurrence_keys(sigma)).values():
        order *= int(factorial(multiplicity, exact=True))
    return order


def labeled_aut_order(sigma, labeling):
    """Order of S_{sigma,L}, the part permutations that also preserve labels.

    Raises
    ------
    ShapeMismatch
        If the labeling does not have one label per part occurrence.
    """
    keys = _occurrence_keys(sigma)
    if len(keys) != len(labeling):
        raise ShapeMismatch(f"Labeling {tuple(labeling)} does not label the {len(keys)} parts of {sigma}.")
    order = 1
    for multiplicity in Counter((i, p, label) for (i, p), label in zip(keys, labeling)).values():
        order *= int(factorial(multiplicity, exact=True))
    return order


def multiset_binomial(whole, sub):
    """Number of ways to choose ``sub`` as a submultiset of ``whole``."""
    mine = whole.multiplicities()
    count = 1
    for value, m in sub.multiplicities().items():
        count *= int(comb(mine[value], m, exact=True))
    return count


def _compositions(total, n_slots, minimum):
    if n_slots == 0:
        if total == 0:
            yield ()
        return
    if n_slots == 1:
        if total >= minimum:
            yield (total,)
        return
    for first in range(total - minimum * (n_slots - 1), minimum - 1, -1):
        for rest in _compositions(total - first, n_slots - 1, minimum):
            yield (first,) + rest


def enumerate_labelings(sigma, total, convention=NONNEG):
    """All labelings of the part occurrences of ``sigma`` with the given total.

    Labelings are on part occurrences; no quotient by S_sigma is taken.
    Under ``NONNEG`` labels are >= 0, under ``POS`` labels are >= 1.
    """
    if convention not in LABEL_CONVENTIONS:
        raise ValueError(f"Unknown label convention {convention!r}.")
    minimum = 1 if convention == POS else 0
    n_slots = len(_occurrence_keys(sigma))
    return [Labeling(c) for c in _compositions(total, n_slots, minimum)]


def canonical_labelings(sigma, total, convention=NONNEG):
    """One representative per S_sigma-orbit of labelings: labels are
    non-increasing along each run of equal parts in a coordinate.
    """
    keys = _occurrence_keys(sigma)
    representatives = []
    for labeling in enumerate_labelings(sigma, total, convention):
        if all(labeling[j] >= labeling[j + 1] for j in range(len(keys) - 1) if keys[j] == keys[j + 1]):
            representatives.append(labeling)
    return representatives
