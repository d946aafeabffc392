"""
Summary
-------
Fixed-sector restrictions of the extended I-function of Sym^d P^r as
exact truncated series. Series are stored in the variable -z, that is
the restriction of I(Q, t, x, -z), the function the cone conditions test.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from scipy.special import factorial

from .combinat import (NONNEG, Partition, aut_order, canonical_labelings, labeled_aut_order,
                       partitions_of)
from .sectors import enumerate_sectors
from .symgroup import ClassList, hurwitz_count

SIGN_CONVENTION = "f(z) = I(Q,t,x,-z)"


class SeriesIndex(object):
    """Multi-index of a series coefficient: Q^beta x^k t^m.

    Attributes
    ----------
    beta : int
        Novikov exponent.
    k : tuple [tuple]
        Sorted pairs (``combinat.Partition``, positive exponent) of x_Pi exponents.
    m : tuple [int]
        Exponents of t_0..t_r.
    """
    __slots__ = ("beta", "k", "m")

    def __init__(self, beta, k=(), m=()):
        self.beta = int(beta)
        if isinstance(k, dict):
            k = k.items()
        self.k = tuple(sorted((Partition(p), int(c)) for p, c in k if c > 0))
        self.m = tuple(int(e) for e in m)

    @property
    def x_degree(self):
        return sum(c for _, c in self.k)

    @property
    def t_degree(self):
        return sum(self.m)

    def k_factorial(self):
        value = 1
        for _, c in self.k:
            value *= int(factorial(c, exact=True))
        return value

    def shifted(self, dbeta):
        return SeriesIndex(self.beta - dbeta, self.k, self.m)

    def __eq__(self, other):
        return (isinstance(other, SeriesIndex) and self.beta == other.beta
                and self.k == other.k and self.m == other.m)

    def __hash__(self):
        return hash(("SeriesIndex", self.beta, self.k, self.m))

    def sort_key(self):
        return (self.beta, self.x_degree, [(p.parts, c) for p, c in self.k], self.t_degree, self.m)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"SeriesIndex(beta={self.beta}, k={[(str(p), c) for p, c in self.k]}, m={self.m})"

    def to_json(self):
        return {"beta": self.beta, "k": [[p.to_json(), c] for p, c in self.k], "m": list(self.m)}


class SeriesCaps(object):
    """Truncation of a restricted series in Q, x and t."""
    __slots__ = ("beta_cap", "x_cap", "t_cap")

    def __init__(self, beta_cap, x_cap=0, t_cap=0):
        self.beta_cap = beta_cap
        self.x_cap = x_cap
        self.t_cap = t_cap

    def contains(self, index):
        return (0 <= index.beta <= self.beta_cap and index.x_degree <= self.x_cap
                and index.t_degree <= self.t_cap)

    def __eq__(self, other):
        return isinstance(other, SeriesCaps) and self.to_json() == other.to_json()

    def __repr__(self):
        return f"SeriesCaps({self.beta_cap}, {self.x_cap}, {self.t_cap})"

    def to_json(self):
        return {"beta_cap": self.beta_cap, "x_cap": self.x_cap, "t_cap": self.t_cap}


def x_exponents(d, x_cap):
    """All x-exponent maps k over Part(d) with total degree <= x_cap."""
    classes = partitions_of(d)
    exponents = []
    for degree in range(x_cap + 1):
        for chosen in combinations_with_replacement(classes, degree):
            counts = {}
            for p in chosen:
                counts[p] = counts.get(p, 0) + 1
            exponents.append(tuple(sorted(counts.items())))
    return exponents


def t_exponents(r, t_cap):
    """All (r+1)-vectors of nonnegative integers with sum <= t_cap."""
    vectors = [()]
    for _ in range(r + 1):
        vectors = [v + (e,) for v in vectors for e in range(t_cap + 1 - sum(v))]
    return sorted(vectors, key=lambda v: (sum(v), tuple(-e for e in v)))


@lru_cache(maxsize=None)
def _hurwitz(underlying, k, backend):
    classes = [underlying]
    for p, c in k:
        classes.extend([p] * c)
    return hurwitz_count(ClassList(underlying.total, classes), backend=backend)


def hurwitz_number(sigma, k, backend="brute"):
    """H(sigma, x^k): factorizations of the identity with classes
    (underlying sigma, then k_Pi copies of each Pi).
    """
    return _hurwitz(sigma.underlying(), tuple(sorted(k)), backend)


def _gamma_factors(s, occurrences_and_labels):
    """Linear factors r_sigma (a_{i(eta)} - a_i) - (gamma/eta) z for the
    given (coordinate, part, label) triples.
    """
    ctx = s.ring()
    a = ctx.alphas
    r_s = s.r_sigma
    factors = []
    for i_eta, eta, label in occurrences_and_labels:
        for gamma in range(1, label + 1):
            for i in range(s.r + 1):
                factors.append(((a[i_eta] - a[i]) * r_s - ctx.z * ctx.ground(Fraction(gamma, eta)), 1))
    return factors


def label_weight(s, labeling):
    """|S_sigma| / |S_{sigma,L}|."""
    return Fraction(aut_order(s.sigma), labeled_aut_order(s.sigma, labeling))


def _labeled_parts(s, labeling):
    return [(i_eta, eta, label) for (i_eta, eta), label in zip(s.occurrences(), labeling)]


def label_term(s, labeling):
    """(|S_sigma|/|S_{sigma,L}|) / prod_eta prod_gamma prod_i (...) for one labeling."""
    ctx = s.ring()
    return ctx.from_factors(ctx.ring.one, _gamma_factors(s, _labeled_parts(s, labeling))) * label_weight(s, labeling)


def x_prefactor(s, k, backend="brute"):
    """-z * H(sigma, x^k) / (k! (-z)^{|k|}), or None when H vanishes."""
    ctx = s.ring()
    index = SeriesIndex(0, k)
    h = hurwitz_number(s.sigma, index.k, backend)
    if h == 0:
        return None
    minus_z = -ctx.zvar()
    return minus_z ** (1 - index.x_degree) * Fraction(h, index.k_factorial())


def divisor_factor(s, beta, i):
    """beta + sum_eta r_sigma (a_{i(eta)} - a_i) / (-z), the t_i exponent."""
    ctx = s.ring()
    total = ctx.zero()
    for i_eta, _ in s.occurrences():
        total = total + (ctx.alpha(i_eta) - ctx.alpha(i)) * s.r_sigma
    return ctx.const(beta) + total / (-ctx.zvar())


def exp_coefficient(s, beta, m):
    """Coefficient of t^m in exp(sum_i t_i * divisor_factor(s, beta, i))."""
    ctx = s.ring()
    value = ctx.one()
    for i, e in enumerate(m):
        if e:
            value = value * divisor_factor(s, beta, i) ** e * Fraction(1, int(factorial(e, exact=True)))
    return value


class RestrictedSeries(object):
    """Truncated restriction of I(Q, t, x, -z) to one fixed sector.

    Attributes
    ----------
    sector : ``sectors.FixedSector``
        Sector the series is restricted to.
    coeffs : dict
        ``ifunction.SeriesIndex`` mapped to nonzero ``exactalg.RationalFunction``.
    caps : ``ifunction.SeriesCaps``
        Truncation.
    options : dict
        label_convention, include_exp_factor, hurwitz_backend.
    sign_convention : str
        Always ``SIGN_CONVENTION``.
    """
    def __init__(self, sector, coeffs, caps, options):
        self.sector = sector
        self.coeffs = {index: c for index, c in coeffs.items() if not c.is_zero}
        self.caps = caps
        self.options = dict(options)
        self.sign_convention = SIGN_CONVENTION

    def coefficient(self, index):
        return self.coeffs.get(index, self.sector.ring().zero())

    def indices(self):
        return sorted(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def to_records(self):
        return [{"sector": self.sector.to_json(), "index": index.to_json(),
                 "coefficient": str(self.coeffs[index])} for index in self.indices()]


DEFAULT_OPTIONS = {"label_convention": NONNEG, "include_exp_factor": False, "hurwitz_backend": "brute"}


def i_restricted(s, caps, opts=None):
    """Restriction of the extended I-function at (-z) to sector ``s``.

    Parameters
    ----------
    s : ``sectors.FixedSector``
        Fixed sector.
    caps : ``ifunction.SeriesCaps``
        Truncation in beta, x-degree and t-degree.
    opts : dict, optional
        label_convention ("nonneg" or "pos"), include_exp_factor (bool),
        hurwitz_backend ("brute" or "character").

    Returns
    -------
    series : ``ifunction.RestrictedSeries``
        Nonzero coefficients within the caps.

    Raises
    ------
    symgroup.CapExceeded
        If a Hurwitz count exceeds the brute-force cap.
    """
    options = dict(DEFAULT_OPTIONS)
    options.update(opts or {})
    ctx = s.ring()
    # Label sums depend only on beta.
    label_sums = {}
    for beta in range(caps.beta_cap + 1):
        total = ctx.zero()
        for labeling in canonical_labelings(s.sigma, beta, options["label_convention"]):
            total = total + label_term(s, labeling)
        label_sums[beta] = total
    if options["include_exp_factor"]:
        t_vectors = t_exponents(s.r, caps.t_cap)
    else:
        t_vectors = [(0,) * (s.r + 1)]
    coeffs = {}
    for k in x_exponents(s.d, caps.x_cap):
        prefactor = x_prefactor(s, k, options["hurwitz_backend"])
        if prefactor is None:
            continue
        for beta, label_sum in label_sums.items():
            if label_sum.is_zero:
                continue
            for m in t_vectors:
                coefficient = prefactor * label_sum
                if any(m):
                    coefficient = coefficient * exp_coefficient(s, beta, m)
                coeffs[SeriesIndex(beta, k, m)] = coefficient
    return RestrictedSeries(s, coeffs, caps, options)


def pole_group(s, labeling, q, i1):
    """Occurrences eta with i(eta) = i1 and L_eta >= q eta (the group sigma_T)."""
    return [(i_eta, eta, label) for i_eta, eta, label in _labeled_parts(s, labeling)
            if i_eta == i1 and label >= q * eta]


def omega_factor(s, k, labeling, q, i1, backend="brute"):
    """The part of a labeled term that is regular at the pole group:
    the x/H prefactor times the gamma-products of the excluded parts.
    """
    ctx = s.ring()
    prefactor = x_prefactor(s, k, backend)
    if prefactor is None:
        return ctx.zero()
    group = pole_group(s, labeling, q, i1)
    excluded = list(_labeled_parts(s, labeling))
    for part in group:
        excluded.remove(part)
    return prefactor * ctx.from_factors(ctx.ring.one, _gamma_factors(s, excluded))


def t_l_term(s, labeling, q, i1):
    """T_L: the label weight over the gamma-products of the pole group
    (the Q^beta factor is carried by the series index).
    """
    ctx = s.ring()
    group = pole_group(s, labeling, q, i1)
    return ctx.from_factors(ctx.ring.one, _gamma_factors(s, group)) * label_weight(s, labeling)


def all_restrictions(d, r, caps, opts=None):
    """Restricted series of every fixed sector of Sym^d P^r, keyed by sector."""
    return {s: i_restricted(s, caps, opts) for s in enumerate_sectors(d, r)}
