"""
Summary
-------
Mechanical verification of the cone conditions on the restricted
I-function: (I) poles only at z = 0, z = infinity and the edge weights
wbar, and (II) the Laurent-coefficient recursion along one-edge trees.
Also verifies the closed-form identities the recursion proof relies on.
"""
from fractions import Fraction
from itertools import product

from scipy.special import comb
from sympy import QQ, expand, field, symbols

from .base import SymconeError
from .combinat import ShapeMismatch
from .exactalg import DivByZero, NonLinearPole, laurent_at, pole_support, random_point
from .sectors import (PRINTED, RC_NORMALIZATIONS, centralizer_ratio, edge_factor_W, edge_weight, enumerate_edges,
                      rc_prefactor, recursion_coefficient)


class Incomplete(SymconeError):
    """A series needed on the right side of the recursion was not supplied."""


class InvalidPattern(SymconeError):
    """A membership pattern is contradictory or outside the identity's range."""


class Verdict(object):
    """Outcome of a standalone identity check."""
    def __init__(self, passed, **details):
        self.passed = bool(passed)
        self.details = details

    def __bool__(self):
        return self.passed

    def __repr__(self):
        return f"Verdict({'PASS' if self.passed else 'FAIL'}, {self.details})"


class PoleReport(object):
    """Pole support of every coefficient of a series against the allowed set.

    Attributes
    ----------
    sector : ``sectors.FixedSector``
        Sector of the series.
    allowed : list [``exactalg.LinearForm``]
        Allowed nonzero pole locations wbar(kappa).
    rows : list [dict]
        Per index: observed pole support, stray poles, or a nonlinear-factor error.
    passed : bool
        True iff no index has a stray pole or a nonlinear factor.
    """
    def __init__(self, sector, allowed, rows):
        self.sector = sector
        self.allowed = sorted(allowed)
        self.rows = rows
        self.passed = all(not row["stray"] and row["error"] is None for row in rows)

    @property
    def verdict(self):
        return "PASS" if self.passed else "FAIL"

    def stray_poles(self):
        return [form for row in self.rows for form in row["stray"]]

    def to_json(self):
        return {"sector": self.sector.to_json(),
                "allowed": [str(form) for form in self.allowed],
                "rows": [{"index": row["index"].to_json(),
                          "support": row["support"].to_json() if row["support"] is not None else None,
                          "stray": [str(form) for form in row["stray"]],
                          "error": row["error"]} for row in self.rows]}


def allowed_poles(sector, beta_cap, edges=None):
    """The nonzero pole locations {wbar(kappa)} allowed by condition (I)."""
    if edges is None:
        edges = enumerate_edges(sector, beta_cap)
    return {edge_weight(kappa)[1] for kappa in edges}


def check_condition_I(series, edges=None):
    """Compare every coefficient's poles with {0} and {wbar(kappa)}.

    Poles at infinity are recorded (``infinity_degree``) but never fail.
    A nonlinear denominator factor fails the index with its text.
    """
    allowed = allowed_poles(series.sector, series.caps.beta_cap, edges)
    rows = []
    for index in series.indices():
        try:
            support = pole_support(series.coeffs[index])
        except NonLinearPole as error:
            rows.append({"index": index, "support": None, "stray": [], "error": str(error)})
            continue
        stray = [form for form in support.locations() if form not in allowed]
        rows.append({"index": index, "support": support, "stray": stray, "error": None})
    return PoleReport(series.sector, allowed, rows)


class NormalizationMonomial(object):
    """A uniform discrepancy RHS = r_sigma**exponent * LHS found by the probe."""
    def __init__(self, r_sigma, exponent, constant):
        self.r_sigma = r_sigma
        self.exponent = Fraction(exponent)
        self.constant = Fraction(constant)

    def __eq__(self, other):
        return (isinstance(other, NormalizationMonomial) and self.r_sigma == other.r_sigma
                and self.exponent == other.exponent and self.constant == other.constant)

    def __repr__(self):
        return f"NormalizationMonomial(r_sigma={self.r_sigma}, exponent={self.exponent})"

    def to_json(self):
        return {"r_sigma": self.r_sigma, "exponent": str(self.exponent), "constant": str(self.constant)}


class RecursionReport(object):
    """Both sides of the Laurent recursion at (sector, wbar, a), index by index.

    Attributes
    ----------
    sector : ``sectors.FixedSector``
        Sector whose series is expanded.
    wbar : ``exactalg.LinearForm``
        Expansion point.
    a : int
        Order of the pole term (w - z)^{-a} on the left.
    edges : list [``sectors.EdgeClass``]
        Edges with wbar(kappa) = wbar and mov(kappa) >= a.
    lhs, rhs : dict
        ``ifunction.SeriesIndex`` mapped to z-free ``exactalg.RationalFunction``.
    diff : dict
        Nonzero lhs - rhs entries.
    normalization : str
        RC normalization the right side was built with.
    probe : ``coneverify.NormalizationMonomial`` or None
        Global r_sigma power relating the sides, when requested on a failing report.
    variants : list [str] or None
        RC normalizations under which the diff vanishes, when requested.
    specializations : list [bool]
        For each random point: True iff lhs - rhs vanished at every index.
    n_specializations : int
        Number of points the cross-check was asked for.
    """
    def __init__(self, sector, wbar, a, edges, lhs, rhs, normalization=PRINTED):
        self.sector = sector
        self.wbar = wbar
        self.a = a
        self.edges = edges
        self.lhs = lhs
        self.rhs = rhs
        self.diff = {}
        for index in lhs:
            difference = lhs[index] - rhs[index]
            if not difference.is_zero:
                self.diff[index] = difference
        self.normalization = normalization
        self.probe = None
        self.variants = None
        self.specializations = []
        self.n_specializations = 0
        self.rhs_terms = {}

    @property
    def symbolic_pass(self):
        return not self.diff

    @property
    def passed(self):
        return (self.symbolic_pass and len(self.specializations) == self.n_specializations
                and all(self.specializations))

    @property
    def verdict(self):
        return "PASS" if self.passed else "FAIL"

    def to_json(self):
        return {"sector": self.sector.to_json(), "wbar": str(self.wbar), "a": self.a,
                "edges": [kappa.to_json() for kappa in self.edges],
                "normalization": self.normalization,
                "indices": len(self.lhs),
                "diff": {str(index.to_json()): str(value) for index, value in sorted(self.diff.items())},
                "probe": self.probe.to_json() if self.probe is not None else None,
                "variants": self.variants,
                "specializations": self.specializations}


def _matching_edges(sector, wbar, a, beta_cap, edges=None):
    if edges is None:
        edges = enumerate_edges(sector, beta_cap)
    return [kappa for kappa in edges
            if edge_weight(kappa)[1] == wbar and kappa.mov_count >= a and kappa.beta <= beta_cap]


def check_condition_II(all_series, sector, wbar, a, edges=None, rng=None, n_specializations=5,
                       normalization=PRINTED):
    """Compare Laur(f_s, (wbar - z)^{-a}) with the edge sum of target
    Laurent coefficients, index by index.

    Parameters
    ----------
    all_series : dict
        ``sectors.FixedSector`` mapped to ``ifunction.RestrictedSeries``.
    sector : ``sectors.FixedSector``
        Sector whose series is expanded.
    wbar : ``exactalg.LinearForm``
        Expansion point.
    a : int
        Positive pole order.
    edges : list [``sectors.EdgeClass``], optional
        Edges leaving ``sector``; enumerated from the caps if omitted.
    rng : ``mrg32k3a.mrg32k3a.MRG32k3a``, optional
        Stream for the specialization cross-check; skipped if omitted.
    n_specializations : int, default=5
        Number of random points for the cross-check.
    normalization : str, default="printed"
        How r_sigma enters the recursion coefficients, one of
        ``sectors.RC_NORMALIZATIONS``.

    Returns
    -------
    report : ``coneverify.RecursionReport``

    Raises
    ------
    Incomplete
        If the series of ``sector`` or of a target sector is missing.
    """
    if sector not in all_series:
        raise Incomplete(f"No series for {sector!r}.")
    series = all_series[sector]
    beta_cap = series.caps.beta_cap
    matching = _matching_edges(sector, wbar, a, beta_cap, edges)
    targets = {}
    for kappa in matching:
        if kappa.target not in all_series:
            raise Incomplete(f"No series for target {kappa.target!r} of {kappa!r}.")
        targets[kappa] = all_series[kappa.target]
    # Indices pushed beyond beta_cap are dropped from both sides.
    indices = set(series.coeffs)
    for kappa, target in targets.items():
        for index in target.coeffs:
            if index.beta + kappa.beta <= beta_cap:
                indices.add(index.shifted(-kappa.beta))
    coefficients = {kappa: recursion_coefficient(kappa, a, normalization) for kappa in matching}
    ctx = sector.ring()
    lhs = {}
    rhs = {}
    rhs_terms = {}
    for index in sorted(indices):
        lhs[index] = laurent_at(series.coefficient(index), wbar, -a)
        total = ctx.zero()
        terms = []
        for kappa in matching:
            source = index.shifted(kappa.beta)
            if source.beta < 0:
                continue
            laurent = laurent_at(targets[kappa].coefficient(source), wbar, kappa.mov_count - a)
            if laurent.is_zero:
                continue
            terms.append((kappa, coefficients[kappa], laurent))
            total = total + coefficients[kappa] * laurent
        rhs[index] = total
        rhs_terms[index] = terms
    report = RecursionReport(sector, wbar, a, matching, lhs, rhs, normalization)
    report.rhs_terms = rhs_terms
    if rng is not None:
        report.n_specializations = n_specializations
        report.specializations = specialization_crosscheck(report, rng, n_specializations)
    return report


def specialization_crosscheck(report, rng, n_points=5, max_tries=20):
    """Evaluate both sides at random rational points, term by term.

    Returns
    -------
    agreements : list [bool]
        One entry per point: True iff the evaluated sides agree at every
        index. A point where some term has a pole is redrawn; a point
        that hits a pole on every try counts as False.
    """
    r = report.sector.r
    agreements = []
    for _ in range(n_points):
        agree = False
        for _ in range(max_tries):
            point = random_point(rng, r + 2)
            try:
                agree = all(left.evaluate(point) == sum((coefficient.evaluate(point) * laurent.evaluate(point)
                                                         for _, coefficient, laurent
                                                         in report.rhs_terms.get(index, [])), Fraction(0))
                            for index, left in report.lhs.items())
                break
            except DivByZero:
                continue
        agreements.append(agree)
    return agreements


def _rational_power(base, value, max_exponent=40, max_root=6):
    """Exponent e with base**e == value, as a Fraction, or None."""
    for root in range(1, max_root + 1):
        target = value ** root
        for numerator in range(-max_exponent * root, max_exponent * root + 1):
            if Fraction(base) ** numerator == target:
                return Fraction(numerator, root)
    return None


def normalization_probe(report):
    """Look for one power of r_sigma relating the two sides uniformly.

    Returns
    -------
    monomial : ``coneverify.NormalizationMonomial`` or None
        ``RHS = r_sigma**exponent * LHS`` at every index, if such an exponent exists.
    """
    r_sigma = report.sector.r_sigma
    ratio = None
    for index in report.lhs:
        left, right = report.lhs[index], report.rhs[index]
        if left.is_zero and right.is_zero:
            continue
        if left.is_zero or right.is_zero:
            return None
        quotient = right / left
        if not quotient.is_constant():
            return None
        value = quotient.constant_value()
        if ratio is None:
            ratio = value
        elif value != ratio:
            return None
    if ratio is None or ratio == 1:
        return NormalizationMonomial(r_sigma, 0, 1)
    if r_sigma == 1 or ratio <= 0:
        return None
    exponent = _rational_power(r_sigma, ratio)
    if exponent is None:
        return None
    return NormalizationMonomial(r_sigma, exponent, ratio)


def normalization_variants(report, normalizations=RC_NORMALIZATIONS):
    """The RC normalizations under which the recursion of ``report`` holds.

    The right side is rebuilt from the stored target Laurent coefficients
    with each variant's recursion coefficients; the left side is unchanged.

    Returns
    -------
    variants : list [str]
        Members of ``normalizations`` with an identically zero diff.
    """
    ctx = report.sector.ring()
    variants = []
    for normalization in normalizations:
        coefficients = {kappa: recursion_coefficient(kappa, report.a, normalization) for kappa in report.edges}
        holds = True
        for index, left in report.lhs.items():
            right = ctx.zero()
            for kappa, _, laurent in report.rhs_terms.get(index, []):
                right = right + coefficients[kappa] * laurent
            if not (left - right).is_zero:
                holds = False
                break
        if holds:
            variants.append(normalization)
    return variants


def signsum_patterns(n, a):
    """All per-occurrence membership patterns (+1 in, -1 out, 0 free)
    constraining at most n - a occurrences.
    """
    return [pattern for pattern in product((1, -1, 0), repeat=n)
            if sum(1 for p in pattern if p) <= n - a]


def check_identity_signsum(sigma_t, pattern, a):
    """Brute-force the alternating sum over labeled Mov within sigma_T.

    Parameters
    ----------
    sigma_t : ``combinat.Partition``
        The pole group sigma_T; occurrences are labeled by position.
    pattern : sequence
        Per occurrence +1 (forced into Mov), -1 (forced out) or 0 (free);
        alternatively a list of (position, inside) constraints.
    a : int
        Positive pole order.

    Returns
    -------
    verdict : ``coneverify.Verdict``
        Sum and expected closed form (1 if nothing is forced in, else 0).

    Raises
    ------
    InvalidPattern
        If a position is forced both in and out, or more than n - a
        occurrences are constrained.
    """
    n = len(sigma_t)
    states = _pattern_states(n, pattern)
    if sum(1 for state in states if state) > n - a:
        raise InvalidPattern(f"Pattern {tuple(states)} constrains more than {n - a} of {n} occurrences.")
    total = 0
    for chosen in product((0, 1), repeat=n):
        if any((state == 1 and not c) or (state == -1 and c) for state, c in zip(states, chosen)):
            continue
        size = sum(chosen)
        if size < a:
            continue
        sign = -1 if (size - a) % 2 else 1
        total += sign * int(comb(size - 1, a - 1, exact=True))
    expected = 0 if any(state == 1 for state in states) else 1
    return Verdict(total == expected, value=total, expected=expected)


def _pattern_states(n, pattern):
    pattern = list(pattern)
    if all(isinstance(p, int) for p in pattern):
        if len(pattern) != n:
            raise ShapeMismatch(f"Pattern {pattern} does not have one entry per occurrence of {n}.")
        if any(p not in (-1, 0, 1) for p in pattern):
            raise InvalidPattern(f"Pattern entries must be -1, 0 or 1, got {pattern}.")
        return pattern
    states = [0] * n
    for position, inside in pattern:
        wanted = 1 if inside else -1
        if states[position] == -wanted:
            raise InvalidPattern(f"Occurrence {position} is forced both into and out of Mov.")
        states[position] = wanted
    return states


def check_psi_binomial(k):
    """Verify sum_{m1+m2=k-1} C(k-1,m1) X^{-(m1+1)} Y^{-(m2+1)} = (X+Y)^{k-1} / (X^k Y^k)
    in the rational function field QQ(X, Y), and independently compare the
    cleared numerator with the binomial expansion of (X+Y)^{k-1}.
    """
    _, X, Y = field("X,Y", QQ)
    lhs = sum((int(comb(k - 1, m1, exact=True)) * X ** (-(m1 + 1)) * Y ** (-(k - m1))
               for m1 in range(k)), X * 0)
    rhs = (X + Y) ** (k - 1) / (X ** k * Y ** k)
    x, y = symbols("X Y")
    cleared = sum(int(comb(k - 1, m1, exact=True)) * x ** (k - 1 - m1) * y ** m1 for m1 in range(k))
    binomial_ok = expand(cleared - (x + y) ** (k - 1)) == 0
    return Verdict(lhs == rhs and binomial_ok, k=k, field_identity=lhs == rhs, binomial_theorem=binomial_ok)


def check_ratio_identity(kappa):
    """|C_mu(sigma)| / (|S_e| prod beta_eta) = q^{-mov} binom(sigma_{i1}, Mov)."""
    lhs, rhs = centralizer_ratio(kappa)
    return Verdict(lhs == rhs, lhs=str(lhs), rhs=str(rhs))


def check_w_rc(kappa, a, normalization=PRINTED):
    """RC(kappa, a) * W(kappa) equals the combinatorial prefactor, both
    built under ``normalization``.
    """
    product_value = recursion_coefficient(kappa, a, normalization) * edge_factor_W(kappa, normalization)
    prefactor = rc_prefactor(kappa, a)
    return Verdict(product_value == prefactor, product=str(product_value), prefactor=str(prefactor))
