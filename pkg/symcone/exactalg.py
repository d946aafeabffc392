"""
Summary
-------
Exact arithmetic kernel: polynomials in the equivariant parameters
a0..ar (and z), rational functions with factored denominators,
linear forms, Laurent coefficients at movable poles, pole supports,
and random rational specializations.

All polynomials live in one sympy ring QQ[a0, ..., ar, z] per r, with
graded lexicographic order. A ``RationalFunction`` keeps its denominator
as a map from monic irreducible factors to exponents, with no factor
dividing the numerator, which makes the representation canonical.
"""
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd

from sympy import QQ, grlex, ring

from .base import SymconeError

BigRational = Fraction


class DivByZero(SymconeError):
    """Division by an exactly zero element, or evaluation at a pole."""


class DegeneratePole(SymconeError):
    """A substitution made a denominator factor vanish identically."""


class NonLinearPole(SymconeError):
    """A denominator factor is not linear in z with a linear-form root."""


class SpecializationFailed(SymconeError):
    """No admissible rational point was found within the retry budget."""


def _qq(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _fraction(value):
    return Fraction(int(QQ.numer(value)), int(QQ.denom(value)))


def _total_degree(p):
    return max((sum(m) for m in p.itermonoms()), default=0)


class ExactRing(object):
    """The polynomial ring QQ[a0..ar, z] with graded lexicographic order.

    Attributes
    ----------
    r : int
        Index of the last equivariant parameter.
    ring : ``sympy.polys.rings.PolyRing``
        Underlying sympy ring.
    alphas : tuple
        Generators a0..ar.
    z : ``sympy.polys.rings.PolyElement``
        The generator z.
    z_index : int
        Position of z among the generators.
    """
    def __init__(self, r):
        self.r = r
        names = ",".join([f"a{i}" for i in range(r + 1)] + ["z"])
        generated = ring(names, QQ, grlex)
        self.ring = generated[0]
        self.alphas = tuple(generated[1:-1])
        self.z = generated[-1]
        self.z_index = r + 1

    def __eq__(self, other):
        return isinstance(other, ExactRing) and self.r == other.r

    def __hash__(self):
        return hash(("ExactRing", self.r))

    def __reduce__(self):
        return (exact_ring, (self.r,))

    def const(self, value):
        return RationalFunction(self, self.ring.ground_new(_qq(value)))

    def ground(self, value):
        """A rational number as an element of the coefficient domain."""
        return _qq(value)

    def zero(self):
        return RationalFunction(self, self.ring.zero)

    def one(self):
        return RationalFunction(self, self.ring.one)

    def poly(self, p):
        """Wrap a polynomial of this ring as a rational function."""
        return RationalFunction(self, p)

    def alpha(self, i):
        return self.poly(self.alphas[i])

    def zvar(self):
        return self.poly(self.z)

    def linear_poly(self, form):
        """The polynomial sum(c_i a_i) of a ``LinearForm``."""
        if len(form.coeffs) != self.r + 1:
            raise ValueError(f"Linear form {form} has {len(form.coeffs)} coefficients, expected {self.r + 1}.")
        p = self.ring.zero
        for c, a in zip(form.coeffs, self.alphas):
            if c:
                p += a * _qq(c)
        return p

    def linear(self, form):
        return self.poly(self.linear_poly(form))

    def from_factors(self, numerator, factors):
        """Build numerator / prod(factor**exp) from polynomial factors.

        Parameters
        ----------
        numerator : ``sympy.polys.rings.PolyElement``
            Numerator polynomial.
        factors : iterable [tuple]
            Pairs (polynomial, positive exponent); polynomials must be nonzero.
        """
        denominator = {}
        for factor, exponent in factors:
            numerator = _absorb_factor(denominator, numerator, factor, exponent)
        return RationalFunction(self, numerator, denominator)


@lru_cache(maxsize=None)
def exact_ring(r):
    return ExactRing(r)


def _absorb_factor(denominator, numerator, factor, exponent):
    """Split ``factor**exponent`` into monic irreducibles added to
    ``denominator`` and a constant folded into the numerator.
    """
    if not factor:
        raise DivByZero("Division by the zero polynomial.")
    if exponent == 0:
        return numerator
    if _total_degree(factor) == 0:
        return numerator * (factor.LC ** -exponent)
    if _total_degree(factor) == 1:
        pieces = [(factor, 1)]
        content = factor.ring.domain.one
    else:
        content, pieces = factor.factor_list()
    numerator = numerator * (content ** -exponent)
    for piece, multiplicity in pieces:
        leading = piece.LC
        numerator = numerator * (leading ** -(exponent * multiplicity))
        monic = piece.monic()
        denominator[monic] = denominator.get(monic, 0) + exponent * multiplicity
    return numerator


def _cancel(numerator, denominator):
    if not numerator:
        return numerator, {}
    reduced = {}
    for factor, exponent in denominator.items():
        while exponent > 0:
            quotient, remainder = divmod(numerator, factor)
            if remainder:
                break
            numerator = quotient
            exponent -= 1
        if exponent > 0:
            reduced[factor] = exponent
    return numerator, reduced


class RationalFunction(object):
    """An exact rational function over QQ in a0..ar and z.

    Elements not involving z play the role of coefficients in the fraction
    field of the equivariant parameters; elements involving z are the
    series coefficients of the fixed-point restrictions.

    Attributes
    ----------
    ctx : ``exactalg.ExactRing``
        Ring the numerator and denominator factors live in.
    num : ``sympy.polys.rings.PolyElement``
        Numerator.
    den : dict
        Monic irreducible denominator factors mapped to positive exponents.
    """
    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx, num, den=None):
        self.ctx = ctx
        self.num, self.den = _cancel(num, dict(den or {}))

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.ctx != self.ctx:
                raise ValueError("Rational functions over different rings.")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.const(other)
        return NotImplemented

    @property
    def is_zero(self):
        return not self.num

    def is_constant(self):
        return not self.den and _total_degree(self.num) == 0

    def depends_on_z(self):
        return self.num.degree(self.ctx.z_index) > 0 or any(f.degree(self.ctx.z_index) > 0 for f in self.den)

    def constant_value(self):
        """The value as a ``Fraction``; only for constant elements."""
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant.")
        return _fraction(self.num.coeff(1)) if self.num else Fraction(0)

    def denominator_poly(self):
        p = self.ctx.ring.one
        for factor, exponent in self.den.items():
            p *= factor ** exponent
        return p

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        common = dict(self.den)
        for factor, exponent in other.den.items():
            common[factor] = max(common.get(factor, 0), exponent)
        total = self.ctx.ring.zero
        for part in (self, other):
            lifted = part.num
            for factor, exponent in common.items():
                lifted = lifted * factor ** (exponent - part.den.get(factor, 0))
            total += lifted
        return RationalFunction(self.ctx, total, common)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(self.ctx, -self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero or other.is_zero:
            return self.ctx.zero()
        merged = dict(self.den)
        for factor, exponent in other.den.items():
            merged[factor] = merged.get(factor, 0) + exponent
        return RationalFunction(self.ctx, self.num * other.num, merged)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise DivByZero("Division by an exactly zero rational function.")
        denominator = {}
        numerator = _absorb_factor(denominator, self.denominator_poly(), self.num, 1)
        return RationalFunction(self.ctx, numerator, denominator)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return self.ctx.one()
        return RationalFunction(self.ctx, self.num ** n, {f: e * n for f, e in self.den.items()})

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((frozenset(self.num.items()), frozenset(self.den.items())))

    def evaluate(self, values):
        """Exact value at a point given for a0..ar (and z, if present).

        Raises
        ------
        DivByZero
            If the denominator vanishes at the point.
        """
        values = list(values)
        if len(values) == self.ctx.r + 1:
            values.append(0)
        point = [_qq(v) for v in values]
        denominator = Fraction(1)
        for factor, exponent in self.den.items():
            value = _fraction(factor(*point))
            if value == 0:
                raise DivByZero(f"Denominator factor {factor} vanishes at {values}.")
            denominator *= value ** exponent
        return _fraction(self.num(*point)) / denominator

    def to_expr(self):
        expr = self.num.as_expr()
        for factor, exponent in self.den.items():
            expr = expr / factor.as_expr() ** exponent
        return expr

    def denominator_str(self):
        if not self.den:
            return "1"
        factors = sorted(f"({factor})" + (f"**{exponent}" if exponent > 1 else "") for factor, exponent in self.den.items())
        return "*".join(factors)

    def __str__(self):
        if not self.den:
            return str(self.num)
        return f"({self.num})/({self.denominator_str()})"

    def __repr__(self):
        return f"RationalFunction({self})"

    def to_json(self):
        return {"num": str(self.num), "den": self.denominator_str()}


AlphaRat = RationalFunction
ZRat = RationalFunction


class LinearForm(object):
    """A linear form sum(c_i a_i) with rational coefficients.

    Equality is exact: forms with the same direction and different scale
    are different pole locations.

    Parameters
    ----------
    coeffs : iterable
        Coefficients c_0..c_r, converted to ``Fraction``.
    """
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @classmethod
    def difference(cls, r, i, j, scale=1):
        """scale * (a_i - a_j)."""
        coeffs = [Fraction(0)] * (r + 1)
        coeffs[i] += Fraction(scale)
        coeffs[j] -= Fraction(scale)
        return cls(coeffs)

    def is_zero(self):
        return not any(self.coeffs)

    def direction(self):
        """Return (canonical form, scale) with self = scale * canonical.

        The canonical form has coprime integer coefficients and a positive
        first nonzero coefficient.
        """
        if self.is_zero():
            return self, Fraction(1)
        common_den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in self.coeffs), 1)
        integers = [int(c * common_den) for c in self.coeffs]
        content = reduce(gcd, (abs(v) for v in integers), 0)
        sign = 1 if next(v for v in integers if v) > 0 else -1
        canonical = LinearForm([Fraction(sign * v, content) for v in integers])
        return canonical, Fraction(sign * content, common_den)

    def scaled(self, factor):
        factor = Fraction(factor)
        return LinearForm([c * factor for c in self.coeffs])

    def __neg__(self):
        return self.scaled(-1)

    def __add__(self, other):
        return LinearForm([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("LinearForm", self.coeffs))

    def __lt__(self, other):
        return self.coeffs < other.coeffs

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            magnitude = abs(c)
            body = f"a{i}" if magnitude == 1 else f"{magnitude}*a{i}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"

    def __repr__(self):
        return f"LinearForm({self})"

    def to_json(self):
        return str(self)


def _coefficients_in_z(p, z_index):
    """Split a polynomial by powers of z into z-free polynomials."""
    pieces = {}
    ring_ = p.ring
    for monom, coeff in p.iterterms():
        j = monom[z_index]
        stripped = monom[:z_index] + (0,) + monom[z_index + 1:]
        pieces.setdefault(j, ring_.zero)
        pieces[j] = pieces[j] + ring_({stripped: coeff})
    return {j: q for j, q in pieces.items() if q}


def _series_mul(a, b, n, zero):
    out = [zero] * (n + 1)
    for i in range(n + 1):
        if a[i].is_zero:
            continue
        for j in range(n + 1 - i):
            if not b[j].is_zero:
                out[i + j] = out[i + j] + a[i] * b[j]
    return out


def _series_inverse(u, n, ctx):
    """Inverse of a power series with constant term 1, to order n."""
    inv = [ctx.one()] + [ctx.zero()] * n
    for m in range(1, n + 1):
        acc = ctx.zero()
        for i in range(1, m + 1):
            if not u[i].is_zero:
                acc = acc + u[i] * inv[m - i]
        inv[m] = -acc
    return inv


def laurent_at(f, w, k):
    """Coefficient of u**k in the Laurent expansion of f(z = w - u).

    Parameters
    ----------
    f : ``exactalg.RationalFunction``
        Function of z (and a0..ar).
    w : ``exactalg.LinearForm``
        Expansion point.
    k : int
        Order of the coefficient.

    Returns
    -------
    coefficient : ``exactalg.RationalFunction``
        A z-free rational function.

    Raises
    ------
    DegeneratePole
        If the substitution makes a denominator factor vanish identically.
    """
    ctx = f.ctx
    if f.is_zero:
        return ctx.zero()
    shift = ctx.linear_poly(w) - ctx.z
    numerator = _coefficients_in_z(f.num.compose(ctx.z, shift), ctx.z_index)
    valuation = min(numerator)
    units = []
    leading = ctx.one()
    for factor, exponent in f.den.items():
        pieces = _coefficients_in_z(factor.compose(ctx.z, shift), ctx.z_index)
        if not pieces:
            raise DegeneratePole(f"Factor {factor} vanishes identically at z = {w} - u.")
        v = min(pieces)
        valuation -= exponent * v
        lead = ctx.poly(pieces[v])
        leading = leading * lead ** exponent
        units.append((pieces, v, lead, exponent))
    if k < valuation:
        return ctx.zero()
    n = k - valuation
    zero = ctx.zero()
    shifted = min(numerator)
    series = [ctx.poly(numerator[shifted + i]) if shifted + i in numerator else zero for i in range(n + 1)]
    for pieces, v, lead, exponent in units:
        unit = [ctx.poly(pieces[v + i]) / lead if v + i in pieces else zero for i in range(n + 1)]
        inverse = _series_inverse(unit, n, ctx)
        for _ in range(exponent):
            series = _series_mul(series, inverse, n, zero)
    return series[n] / leading


class PoleSupport(object):
    """Finite poles of a rational function of z.

    Attributes
    ----------
    poles : list [tuple]
        (``exactalg.LinearForm``, order) for every nonzero pole location, sorted.
    zero_order : int
        Pole order at z = 0 (0 if regular there).
    infinity_degree : int
        Degree in z of numerator minus denominator.
    """
    def __init__(self, poles, zero_order, infinity_degree):
        self.poles = sorted(poles.items())
        self.zero_order = zero_order
        self.infinity_degree = infinity_degree

    def locations(self):
        return [form for form, _ in self.poles]

    def order_at(self, form):
        return dict(self.poles).get(form, 0)

    def to_json(self):
        return {"poles": [[str(form), order] for form, order in self.poles],
                "zero_order": self.zero_order,
                "infinity_degree": self.infinity_degree}


def pole_support(f):
    """Read off the poles of ``f`` from its factored denominator.

    Raises
    ------
    NonLinearPole
        If a denominator factor is not of the form c*z + (linear form in a)
        with c a nonzero rational.
    """
    ctx = f.ctx
    zi = ctx.z_index
    poles = {}
    zero_order = 0
    denominator_degree = 0
    for factor, exponent in sorted(f.den.items(), key=lambda item: str(item[0])):
        degree = factor.degree(zi)
        if degree == 0:
            continue
        if degree > 1:
            raise NonLinearPole(f"Denominator factor {factor} has degree {degree} in z.")
        pieces = _coefficients_in_z(factor, zi)
        slope = pieces[1]
        if _total_degree(slope) != 0:
            raise NonLinearPole(f"Denominator factor {factor} has a non-constant z coefficient.")
        offset = pieces.get(0, ctx.ring.zero)
        coeffs = [Fraction(0)] * (ctx.r + 1)
        for monom, coeff in offset.iterterms():
            if sum(monom) != 1:
                raise NonLinearPole(f"Denominator factor {factor} has a root that is not a linear form.")
            coeffs[monom.index(1)] = -_fraction(coeff) / _fraction(slope.LC)
        denominator_degree += exponent
        location = LinearForm(coeffs)
        if location.is_zero():
            zero_order += exponent
        else:
            poles[location] = poles.get(location, 0) + exponent
    infinity_degree = (f.num.degree(zi) if f.num else 0) - denominator_degree
    return PoleSupport(poles, zero_order, infinity_degree)


def random_point(rng, n, low=-60, high=60, max_denominator=7):
    """Draw n pairwise distinct rationals from an MRG32k3a stream."""
    point = []
    while len(point) < n:
        value = Fraction(rng.randint(low, high), rng.randint(1, max_denominator))
        if value not in point:
            point.append(value)
    return point


def random_specialize(f, rng, max_tries=20, first_point=None):
    """Evaluate ``f`` at a random rational point avoiding its poles.

    Parameters
    ----------
    f : ``exactalg.RationalFunction``
        Function to specialize.
    rng : ``mrg32k3a.mrg32k3a.MRG32k3a``
        Source of the random points.
    max_tries : int, default=20
        Number of points tried before giving up.
    first_point : list, optional
        A point to try before any random draw.

    Returns
    -------
    value : ``fractions.Fraction``
        Exact value.
    point : list [``fractions.Fraction``]
        Values of a0..ar, then z.

    Raises
    ------
    SpecializationFailed
        If every tried point was rejected.
    """
    n = f.ctx.r + 2
    for attempt in range(max_tries):
        if attempt == 0 and first_point is not None:
            point = [Fraction(v) for v in first_point]
            if len(point) == n - 1:
                point.append(Fraction(0))
        else:
            point = random_point(rng, n)
        alpha_values = point[:-1]
        if len(set(alpha_values)) != len(alpha_values):
            continue
        try:
            return f.evaluate(point), point
        except DivByZero:
            continue
    raise SpecializationFailed(f"No admissible point for {f} after {max_tries} tries.")
