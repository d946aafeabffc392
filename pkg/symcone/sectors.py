"""
Summary
-------
Torus-fixed sectors (mu, sigma) of the inertia stack of Sym^d P^r and
the one-edge decorated trees leaving them, with their pole weights,
edge factors W and recursion coefficients RC.
"""
from fractions import Fraction
from itertools import product

from scipy.special import comb

from .base import SymconeError
from .combinat import (Multipartition, OrderedZeroPartition, Partition, ShapeMismatch,
                       aut_order, multiset_binomial, partitions_of, zpart_enumerate)
from .exactalg import LinearForm, exact_ring
from .symgroup import centralizer_order, sector_centralizer_order

# How r_sigma enters RC: "printed" leaves W as is, "factors" scales each
# linear factor of W by r_sigma.
PRINTED = "printed"
FACTORS = "factors"
RC_NORMALIZATIONS = (PRINTED, FACTORS)


class BadExponent(SymconeError):
    """A Laurent order a outside 1..mov was requested for a recursion coefficient."""


class FixedSector(object):
    """A torus-fixed point (mu, sigma) of the inertia stack.

    Attributes
    ----------
    mu : ``combinat.OrderedZeroPartition``
        Number of points over each coordinate point P_i.
    sigma : ``combinat.Multipartition``
        Monodromy; component i is a partition of mu_i.

    Parameters
    ----------
    mu : iterable [int]
        Ordered zero-partition of d.
    sigma : ``combinat.Multipartition`` or list of lists
        Monodromy multipartition.
    """
    __slots__ = ("mu", "sigma")

    def __init__(self, mu, sigma):
        self.mu = OrderedZeroPartition(mu)
        self.sigma = sigma if isinstance(sigma, Multipartition) else Multipartition(sigma)
        if len(self.sigma) != len(self.mu):
            raise ShapeMismatch(f"sigma {self.sigma} has {len(self.sigma)} coordinates but mu {tuple(self.mu)} has {len(self.mu)}.")
        for i, (mu_i, sigma_i) in enumerate(zip(self.mu, self.sigma.components)):
            if sigma_i.total != mu_i:
                raise ShapeMismatch(f"Component {i} of {self.sigma} does not partition {mu_i}.")

    @classmethod
    def from_sigma(cls, sigma):
        sigma = sigma if isinstance(sigma, Multipartition) else Multipartition(sigma)
        return cls(sigma.mu(), sigma)

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, dict):
            if "mu" in obj:
                return cls(obj["mu"], obj["sigma"])
            return cls.from_sigma(obj["sigma"])
        return cls.from_sigma(obj)

    @property
    def d(self):
        return self.mu.d

    @property
    def r(self):
        return self.mu.r

    @property
    def r_sigma(self):
        """lcm of all parts of sigma (1 when sigma is empty)."""
        return self.sigma.lcm()

    def occurrences(self):
        return self.sigma.occurrences()

    def is_ones(self):
        return self.sigma.is_ones()

    def ring(self):
        return exact_ring(self.r)

    def __eq__(self, other):
        return isinstance(other, FixedSector) and self.mu == other.mu and self.sigma == other.sigma

    def __hash__(self):
        return hash(("FixedSector", tuple(self.mu), self.sigma))

    def sort_key(self):
        return (tuple(-m for m in self.mu), self.sigma.sort_key())

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"FixedSector(mu={tuple(self.mu)}, sigma={self.sigma})"

    def to_json(self):
        return {"mu": list(self.mu), "sigma": self.sigma.to_json()}


def enumerate_sectors(d, r):
    """All torus-fixed sectors of Sym^d P^r, grouped by mu in descending
    lexicographic order, then by sigma components in partition order.
    """
    sectors = []
    for mu in zpart_enumerate(d, r):
        for components in product(*[partitions_of(mu_i) for mu_i in mu]):
            sectors.append(FixedSector(mu, Multipartition(components)))
    return sectors


def sector_euler_class(s):
    """Euler class prod_{eta} prod_{i != i(eta)} (a_{i(eta)} - a_i) of the
    tangent space at the sector, as a z-free ``exactalg.RationalFunction``.
    """
    ctx = s.ring()
    euler = ctx.ring.one
    for i_eta, _ in s.occurrences():
        for i in range(s.r + 1):
            if i != i_eta:
                euler *= ctx.alphas[i_eta] - ctx.alphas[i]
    return ctx.poly(euler)


class EdgeClass(object):
    """A one-edge decorated tree leaving a fixed sector.

    Attributes
    ----------
    base : ``sectors.FixedSector``
        Source sector (mu, sigma).
    i1 : int
        Coordinate the moving parts leave.
    i2 : int
        Coordinate the moving parts arrive at.
    mov : ``combinat.Partition``
        Moving parts, a nonempty submultiset of sigma_{i1}.
    q : ``fractions.Fraction``
        Degree ratio; q * eta is a positive integer for every eta in mov.

    Parameters
    ----------
    base, i1, i2, mov, q
        As above.
    """
    __slots__ = ("base", "i1", "i2", "mov", "q")

    def __init__(self, base, i1, i2, mov, q):
        self.base = base
        self.i1 = i1
        self.i2 = i2
        self.mov = Partition(mov)
        self.q = Fraction(q)
        if i1 == i2 or not (0 <= i1 <= base.r and 0 <= i2 <= base.r):
            raise ShapeMismatch(f"Coordinates ({i1}, {i2}) do not name two distinct points of P^{base.r}.")
        if len(self.mov) == 0 or not base.sigma[i1].contains(self.mov):
            raise ShapeMismatch(f"{self.mov} is not a nonempty submultiset of {base.sigma[i1]}.")
        if self.q <= 0 or any((self.q * eta).denominator != 1 for eta in self.mov):
            raise ShapeMismatch(f"q={self.q} does not make q*eta integral for eta in {self.mov}.")

    @property
    def beta_parts(self):
        return [int(self.q * eta) for eta in self.mov]

    @property
    def beta(self):
        return sum(self.beta_parts)

    @property
    def mov_count(self):
        return len(self.mov)

    @property
    def stat(self):
        return self.base.sigma.replace(self.i1, self.base.sigma[self.i1].minus(self.mov))

    @property
    def r_sigma(self):
        return self.base.r_sigma

    @property
    def target(self):
        moved = self.mov.total
        mu = list(self.base.mu)
        mu[self.i1] -= moved
        mu[self.i2] += moved
        sigma = self.stat.replace(self.i2, self.base.sigma[self.i2].plus(self.mov))
        return FixedSector(mu, sigma)

    def reverse(self):
        """The edge from the target sector back to the base."""
        return EdgeClass(self.target, self.i2, self.i1, self.mov, self.q)

    def __eq__(self, other):
        return (isinstance(other, EdgeClass) and self.base == other.base and self.i1 == other.i1
                and self.i2 == other.i2 and self.mov == other.mov and self.q == other.q)

    def __hash__(self):
        return hash(("EdgeClass", self.base, self.i1, self.i2, self.mov, self.q))

    def sort_key(self):
        return (self.base.sort_key(), self.i1, self.i2, len(self.mov), self.mov.parts, self.q)

    def __repr__(self):
        return f"EdgeClass({self.base!r}, i1={self.i1}, i2={self.i2}, mov={self.mov}, q={self.q})"

    def to_json(self):
        _, wbar = edge_weight(self)
        return {"i1": self.i1, "i2": self.i2, "mov": self.mov.to_json(), "q": str(self.q),
                "beta": self.beta, "wbar": str(wbar), "target": self.target.to_json()}


def enumerate_edges(s, beta_cap):
    """All one-edge trees kappa leaving ``s`` with beta(kappa) <= beta_cap.

    q runs over (1/g) Z_{>0} with g = gcd(Mov), the values making every
    q * eta integral.
    """
    beta_cap = Fraction(beta_cap)
    edges = []
    for i1 in range(s.r + 1):
        if len(s.sigma[i1]) == 0:
            continue
        for i2 in range(s.r + 1):
            if i2 == i1:
                continue
            for mov in s.sigma[i1].submultisets():
                g = mov.gcd()
                n = 1
                while Fraction(n, g) * mov.total <= beta_cap:
                    edges.append(EdgeClass(s, i1, i2, mov, Fraction(n, g)))
                    n += 1
    return edges


def edge_weight(kappa):
    """Return (w, wbar) with w = (a_{i1} - a_{i2}) / q and wbar = r_sigma * w."""
    w = LinearForm.difference(kappa.base.r, kappa.i1, kappa.i2, 1 / kappa.q)
    return w, w.scaled(kappa.r_sigma)


def edge_factor_polys(kappa, normalization=PRINTED):
    """The linear factors of W(kappa), one polynomial per (eta, B, i)."""
    if normalization not in RC_NORMALIZATIONS:
        raise ValueError(f"Unknown RC normalization {normalization!r}.")
    scale = kappa.r_sigma if normalization == FACTORS else 1
    ctx = kappa.base.ring()
    a = ctx.alphas
    factors = []
    for eta, beta_eta in zip(kappa.mov, kappa.beta_parts):
        for B in range(1, beta_eta + 1):
            for i in range(kappa.base.r + 1):
                if B == beta_eta and i == kappa.i2:
                    continue
                left = Fraction(beta_eta - B, beta_eta)
                right = Fraction(B, beta_eta)
                factors.append((a[kappa.i1] * ctx.ground(left) + a[kappa.i2] * ctx.ground(right) - a[i]) * ctx.ground(scale))
    return factors


def edge_factor_W(kappa, normalization=PRINTED):
    """W(kappa), the product of the edge factors, as a z-free rational function."""
    ctx = kappa.base.ring()
    w = ctx.one()
    for factor in edge_factor_polys(kappa, normalization):
        w = w * ctx.poly(factor)
    return w


def rc_prefactor(kappa, a):
    """(-1)^{mov-a} q^{-mov} binom(sigma_{i1}, Mov) C(mov-1, a-1)."""
    mov = kappa.mov_count
    if not 1 <= a <= mov:
        raise BadExponent(f"Order a={a} is outside 1..{mov} for {kappa!r}.")
    sign = -1 if (mov - a) % 2 else 1
    return (sign * kappa.q ** (-mov) * multiset_binomial(kappa.base.sigma[kappa.i1], kappa.mov)
            * int(comb(mov - 1, a - 1, exact=True)))


def recursion_coefficient(kappa, a, normalization=PRINTED):
    """RC(kappa, a) = rc_prefactor(kappa, a) / W(kappa), with W built under
    ``normalization``.

    Raises
    ------
    BadExponent
        If a is not in 1..mov(kappa).
    """
    ctx = kappa.base.ring()
    prefactor = rc_prefactor(kappa, a)
    inverse_w = ctx.from_factors(ctx.ring.one, [(factor, 1) for factor in edge_factor_polys(kappa, normalization)])
    return inverse_w * prefactor


def centralizer_ratio(kappa):
    """Both sides of |C_mu(sigma)| / (|S_e| prod beta_eta) = q^{-mov} binom(sigma_{i1}, Mov).

    Returns
    -------
    lhs, rhs : ``fractions.Fraction``
    """
    stat = kappa.stat
    z_stat = 1
    for component in stat.components:
        z_stat *= centralizer_order(component.total, component)
    s_e = z_stat * aut_order(kappa.mov)
    beta_product = 1
    for beta_eta in kappa.beta_parts:
        beta_product *= beta_eta
    lhs = Fraction(sector_centralizer_order(kappa.base.mu, kappa.base.sigma), s_e * beta_product)
    rhs = kappa.q ** (-kappa.mov_count) * multiset_binomial(kappa.base.sigma[kappa.i1], kappa.mov)
    return lhs, rhs
