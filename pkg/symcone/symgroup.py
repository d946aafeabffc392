"""
Summary
-------
Conjugacy-class arithmetic in the symmetric group S_d and the count
H of factorizations of the identity with prescribed cycle types.

Two backends count factorizations: ``"brute"`` enumerates products of
class members over a materialized permutation table, and ``"character"``
evaluates the Frobenius character sum with Murnaghan-Nakayama characters.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

import numpy as np
from scipy.special import factorial

from .base import SymconeError
from .combinat import Partition, ShapeMismatch, aut_order, partitions_of

BRUTE_FORCE_CAP = 6
HURWITZ_BACKENDS = ("brute", "character")


class CapExceeded(SymconeError):
    """The brute-force backend was asked for a degree above its cap."""


def centralizer_order(d, sigma):
    """Order z_sigma = |S_sigma| * prod(eta) of the centralizer of a
    permutation of cycle type ``sigma`` in S_d.

    Raises
    ------
    ShapeMismatch
        If ``sigma`` is not a partition of ``d``.
    """
    sigma = Partition(sigma)
    if sigma.total != d:
        raise ShapeMismatch(f"{sigma} is not a partition of {d}.")
    return aut_order(sigma) * sigma.product()


def class_size(d, sigma):
    return int(factorial(d, exact=True)) // centralizer_order(d, sigma)


def sector_centralizer_order(mu, sigma):
    """|C_mu(sigma)|, the product over coordinates of z_{sigma_i}."""
    if len(mu) != len(sigma):
        raise ShapeMismatch(f"{sigma} has {len(sigma)} coordinates, expected {len(mu)}.")
    order = 1
    for mu_i, sigma_i in zip(mu, sigma.components):
        order *= centralizer_order(mu_i, sigma_i)
    return order


def cycle_type(perm):
    """Cycle type of a permutation given as an image sequence."""
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = int(perm[j])
            length += 1
        lengths.append(length)
    return Partition(lengths)


class PermTable(object):
    """All elements of S_d as rows of an integer array, tagged by class.

    Row ``n`` holds the permutation of lexicographic rank ``n``; products
    compose right to left, ``(a*b)(x) = a(b(x))``.

    Attributes
    ----------
    d : int
        Degree.
    elements : numpy.ndarray
        Array of shape (d!, d).
    classes : list [``combinat.Partition``]
        Conjugacy classes of S_d.
    class_tags : numpy.ndarray
        Index into ``classes`` of every row.

    Parameters
    ----------
    d : int
        Degree of the symmetric group.
    """
    def __init__(self, d):
        self.d = d
        self.elements = np.array(list(permutations(range(d))), dtype=np.int64).reshape(-1, d)
        self.classes = partitions_of(d)
        index = {c: n for n, c in enumerate(self.classes)}
        self.class_tags = np.array([index[cycle_type(row)] for row in self.elements], dtype=np.int64)
        self._weights = np.array([int(factorial(d - 1 - i, exact=True)) for i in range(d)], dtype=np.int64)

    def class_index(self, sigma):
        return self.classes.index(Partition(sigma))

    def members(self, sigma):
        """Rows of all permutations of cycle type ``sigma``."""
        return np.flatnonzero(self.class_tags == self.class_index(sigma))

    def rank(self, perms):
        """Lexicographic ranks of the permutations in the last axis of ``perms``."""
        perms = np.asarray(perms).reshape(-1, self.d)
        ranks = np.zeros(perms.shape[0], dtype=np.int64)
        for i in range(self.d):
            smaller_after = (perms[:, i + 1:] < perms[:, i:i + 1]).sum(axis=1)
            ranks += smaller_after * self._weights[i]
        return ranks

    def compose(self, left_rows, right_rows):
        """Ranks of every product left*right, shape (len(left), len(right))."""
        left = self.elements[left_rows]
        right = self.elements[right_rows]
        products = left[:, right]
        return self.rank(products).reshape(len(left_rows), len(right_rows))


@lru_cache(maxsize=None)
def perm_table(d):
    return PermTable(d)


class ClassList(object):
    """An ordered list of conjugacy classes of S_d.

    Parameters
    ----------
    d : int
        Degree.
    classes : list [``combinat.Partition``]
        Nonempty list of partitions of ``d``.
    """
    def __init__(self, d, classes):
        self.d = d
        self.classes = tuple(Partition(c) for c in classes)
        if len(self.classes) == 0:
            raise ShapeMismatch("A class list needs at least one class.")
        for c in self.classes:
            if c.total != d:
                raise ShapeMismatch(f"{c} is not a partition of {d}.")

    def __len__(self):
        return len(self.classes)

    def __repr__(self):
        return f"ClassList({self.d}, {[str(c) for c in self.classes]})"


def _brute_force_count(class_list):
    table = perm_table(class_list.d)
    classes = class_list.classes
    if len(classes) == 1:
        return int(classes[0].is_ones())
    # Count products of the first m-1 factors by group element; the
    # last factor is then forced to be the inverse of the product.
    counts = np.zeros(table.elements.shape[0], dtype=np.int64)
    for row in table.members(classes[0]):
        counts[row] += 1
    for sigma in classes[1:-1]:
        support = np.flatnonzero(counts)
        products = table.compose(support, table.members(sigma))
        updated = np.zeros_like(counts)
        np.add.at(updated, products.ravel(), np.repeat(counts[support], products.shape[1]))
        counts = updated
    last = table.members(classes[-1])
    return int(counts[last].sum())


@lru_cache(maxsize=None)
def _character(lam, mu):
    """Irreducible character chi^lam at cycle type mu (Murnaghan-Nakayama)."""
    if len(mu) == 0:
        return 1 if len(lam) == 0 else 0
    k = mu[0]
    n = len(lam)
    betas = [lam[i] + (n - 1 - i) for i in range(n)]
    beta_set = set(betas)
    value = 0
    for b in betas:
        target = b - k
        if target < 0 or target in beta_set:
            continue
        height = sum(1 for c in betas if target < c < b)
        moved = sorted((beta_set - {b}) | {target}, reverse=True)
        new_lam = tuple(p for p in (moved[i] - (n - 1 - i) for i in range(n)) if p > 0)
        value += (-1) ** height * _character(new_lam, mu[1:])
    return value


def character(lam, mu):
    return _character(Partition(lam).parts, Partition(mu).parts)


def _character_count(class_list):
    d = class_list.d
    m = len(class_list)
    d_factorial = int(factorial(d, exact=True))
    prefactor = Fraction(1, d_factorial)
    for sigma in class_list.classes:
        prefactor *= class_size(d, sigma)
    ones = Partition([1] * d)
    total = Fraction(0)
    for lam in partitions_of(d):
        dimension = character(lam, ones)
        term = Fraction(1)
        for sigma in class_list.classes:
            term *= character(lam, sigma)
        total += term / Fraction(dimension) ** (m - 2)
    count = prefactor * total
    if count.denominator != 1:
        raise ArithmeticError(f"Character sum for {class_list} is not integral: {count}.")
    return int(count)


def hurwitz_count(class_list, backend="brute", cap=BRUTE_FORCE_CAP):
    """Number of tuples (a_1, ..., a_m), a_j of cycle type ``classes[j]``,
    with a_1 * ... * a_m equal to the identity.

    Parameters
    ----------
    class_list : ``symgroup.ClassList``
        Degree and ordered classes.
    backend : str, default="brute"
        "brute" or "character".
    cap : int, default=6
        Largest degree the brute-force backend accepts.

    Returns
    -------
    count : int
        The factorization count.

    Raises
    ------
    CapExceeded
        If the brute-force backend is asked for a degree above ``cap``.
    """
    if backend == "brute":
        if class_list.d > cap:
            raise CapExceeded(f"Degree {class_list.d} exceeds the brute-force cap {cap}; use the character backend.")
        return _brute_force_count(class_list)
    if backend == "character":
        return _character_count(class_list)
    raise ValueError(f"Unknown Hurwitz backend {backend!r}.")
