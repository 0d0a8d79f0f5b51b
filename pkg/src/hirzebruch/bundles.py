"""Chern-root calculus on bundle classes.

Everything here works through the splitting principle without ever naming
individual roots: a bundle class is its total Chern class, Newton's
identities convert between Chern classes and power sums of the roots, and a
multiplicative genus is applied as exp(sum of log-series coefficients times
power sums).  This keeps every computation exact, works uniformly for
virtual classes, and keeps lambda-class coefficients inside Q[y] (no (1+y)
denominators ever appear on the K-theory side).

Four genus series are built in, each expanded from its own closed form:

* ``chern``      1 + x
* ``todd``       x / (1 - exp(-x))
* ``lclass``     x / tanh(x)
* ``hirzebruch`` x(1+y) / (1 - exp(-x(1+y))) - xy

The last one interpolates the other three at y = -1, 0, 1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import InvalidParameter
from .rings import LaurentY, RationalFunctionY
from .spaces import BundleClass


# -- series on coefficient lists (index = power of x, entries LaurentY) ------


def _series_mul(a, b, order):
    out = []
    for k in range(order + 1):
        acc = LaurentY()
        for i in range(k + 1):
            if i < len(a) and k - i < len(b):
                acc = acc + a[i] * b[k - i]
        out.append(acc)
    return out


def _series_recip(a, order):
    if a[0] != 1:
        raise InvalidParameter("series reciprocal needs constant term 1")
    out = [LaurentY.one()]
    for k in range(1, order + 1):
        acc = LaurentY()
        for i in range(1, k + 1):
            if i < len(a):
                acc = acc + a[i] * out[k - i]
        out.append(-acc)
    return out


def _series_log(a, order):
    if a[0] != 1:
        raise InvalidParameter("series log needs constant term 1")
    out = [LaurentY()]
    for k in range(1, order + 1):
        acc = (a[k] if k < len(a) else LaurentY()) * k
        for j in range(1, k):
            if k - j < len(a):
                acc = acc - out[j] * a[k - j] * j
        out.append(acc / k)
    return out


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


class ChernRootSeries:
    """A normalized one-root genus series: coefficients of x^0..x^order."""

    __slots__ = ("kind", "coeffs", "order")

    def __init__(self, kind, coeffs, order):
        if coeffs[0] != 1:
            raise InvalidParameter("genus series must be normalized (constant term 1)")
        self.kind = kind
        self.coeffs = tuple(coeffs)
        self.order = order

    def at_y(self, value):
        """Evaluate the y-dependence at a rational value, as a plain list."""
        return [LaurentY.const(c(Fraction(value))) for c in self.coeffs]

    def __repr__(self):
        return f"ChernRootSeries({self.kind}, order={self.order})"


@lru_cache(maxsize=None)
def genus_series(kind, order):
    """Expand one of the built-in genus series exactly to the given order."""
    if order < 1:
        raise InvalidParameter("series order must be >= 1")
    if kind == "chern":
        coeffs = [LaurentY.one(), LaurentY.one()] + [LaurentY()] * (order - 1)
    elif kind == "todd":
        # (1 - exp(-x))/x, then reciprocal
        g = [LaurentY.const(Fraction((-1) ** k, _factorial(k + 1))) for k in range(order + 1)]
        coeffs = _series_recip(g, order)
    elif kind == "lclass":
        # cosh(x) / (sinh(x)/x)
        sh = [LaurentY.const(Fraction(1, _factorial(k + 1))) if k % 2 == 0 else LaurentY()
              for k in range(order + 1)]
        co = [LaurentY.const(Fraction(1, _factorial(k))) if k % 2 == 0 else LaurentY()
              for k in range(order + 1)]
        coeffs = _series_mul(co, _series_recip(sh, order), order)
    elif kind == "hirzebruch":
        # x(1+y)/(1 - exp(-x(1+y))) = 1/g with g_k = (-1)^k (1+y)^k / (k+1)!
        one_y = LaurentY({0: 1, 1: 1})
        g = [one_y**k * Fraction((-1) ** k, _factorial(k + 1)) for k in range(order + 1)]
        coeffs = _series_recip(g, order)
        coeffs[1] = coeffs[1] - LaurentY.y()
    else:
        raise InvalidParameter(f"unknown genus series kind {kind!r}")
    return ChernRootSeries(kind, coeffs, order)


# -- Newton's identities -------------------------------------------------------


def power_sums(V, order=None):
    """Power sums p_1..p_order of the Chern roots, from the Chern classes."""
    space = V.space
    if order is None:
        order = space.dim
    e = [V.chern(i) for i in range(order + 1)]
    p = [None]
    for k in range(1, order + 1):
        acc = e[k] * Fraction((-1) ** (k - 1) * k)
        for i in range(1, k):
            term = e[i] * p[k - i]
            acc = acc + (term if i % 2 == 1 else -term)
        p.append(acc)
    return p[1:]


def _elementary_from_power_sums(space, psums, upto):
    """e_0..e_upto from power sums (Newton's identities, exact division)."""
    e = [space.one()]
    for k in range(1, upto + 1):
        acc = space.zero()
        for i in range(1, k + 1):
            if i - 1 < len(psums):
                term = e[k - i] * psums[i - 1]
                acc = acc + (term if i % 2 == 1 else -term)
        e.append(acc * Fraction(1, k))
    return e


def chern_from_power_sums(space, rank, psums):
    """Rebuild a BundleClass from power sums of its roots."""
    e = _elementary_from_power_sums(space, psums, space.dim)
    total = space.zero()
    for c in e:
        total = total + c
    return BundleClass(rank, total)


def chern_character(V, order=None):
    """ch(V) = rank + sum of p_m / m!."""
    space = V.space
    if order is None:
        order = space.dim
    total = space.constant(Fraction(V.rank))
    for m, p in enumerate(power_sums(V, order), start=1):
        total = total + p * Fraction(1, _factorial(m))
    return total


def class_exp(X):
    """exp of a cohomology class with zero constant term (finite sum)."""
    space = X.space
    out = space.one()
    term = space.one()
    for j in range(1, space.dim + 1):
        term = term * X * Fraction(1, j)
        out = out + term
    return out


def apply_series(series, V, space=None):
    """Product of series(root) over the Chern roots of V.

    Computed as exp(sum of log-series coefficients times power sums), which
    is exact to the truncation order and multiplicative over Whitney sums.
    """
    if space is None:
        space = V.space
    if series.order < space.dim:
        raise InvalidParameter(
            f"series order {series.order} is below the space dimension {space.dim}"
        )
    lcoeffs = _series_log(list(series.coeffs), space.dim)
    X = space.zero()
    for m, p in enumerate(power_sums(V, space.dim), start=1):
        if lcoeffs[m]:
            X = X + p * lcoeffs[m]
    return class_exp(X)


# -- bundle combinations ---------------------------------------------------------


def bundle_sum(a, b):
    """Whitney sum (also available as a + b)."""
    return a + b


def bundle_dual(a):
    return a.dual()


def bundle_tensor(a, b):
    """Tensor product via power sums: roots add pairwise."""
    if a.space.key != b.space.key:
        raise InvalidParameter("bundles live on different spaces")
    space = a.space
    d = space.dim
    pa = [space.constant(Fraction(a.rank))] + power_sums(a, d)
    pb = [space.constant(Fraction(b.rank))] + power_sums(b, d)
    psums = []
    for m in range(1, d + 1):
        acc = space.zero()
        binom = 1
        for k in range(m + 1):
            acc = acc + pa[k] * pb[m - k] * Fraction(binom)
            binom = binom * (m - k) // (k + 1)
        psums.append(acc)
    return chern_from_power_sums(space, a.rank * b.rank, psums)


# -- K-theory classes with y-graded coefficients -----------------------------------


def _as_laurent(x):
    if isinstance(x, LaurentY):
        return x
    return LaurentY({0: Fraction(x)})


def _invert_y_coeff(c):
    if isinstance(c, LaurentY):
        return c.invert_y()
    if isinstance(c, RationalFunctionY):
        return c.invert_y()
    return c


class KPolyClass:
    """A Laurent-in-y combination of K-theory classes, carried as a virtual
    rank polynomial together with its Chern character."""

    __slots__ = ("rank_poly", "ch")

    def __init__(self, rank_poly, ch):
        rank_poly = _as_laurent(rank_poly)
        if ch.coeff(ch.space._zero_exp) != rank_poly:
            raise InvalidParameter("degree-0 part of the Chern character must equal the rank")
        self.rank_poly = rank_poly
        self.ch = ch

    @property
    def space(self):
        return self.ch.space

    @classmethod
    def structure_sheaf(cls, space):
        return cls(LaurentY.one(), space.one())

    @classmethod
    def from_bundle(cls, V):
        r = LaurentY.const(V.rank)
        return cls(r, chern_character(V))

    def __eq__(self, other):
        if not isinstance(other, KPolyClass):
            return NotImplemented
        return self.rank_poly == other.rank_poly and self.ch == other.ch

    def __add__(self, other):
        if not isinstance(other, KPolyClass):
            return NotImplemented
        return KPolyClass(self.rank_poly + other.rank_poly, self.ch + other.ch)

    def __sub__(self, other):
        if not isinstance(other, KPolyClass):
            return NotImplemented
        return KPolyClass(self.rank_poly - other.rank_poly, self.ch - other.ch)

    def __mul__(self, other):
        if isinstance(other, KPolyClass):
            return KPolyClass(self.rank_poly * other.rank_poly, self.ch * other.ch)
        scalar = _as_laurent(other) if isinstance(other, (int, Fraction, LaurentY)) else None
        if scalar is None:
            return NotImplemented
        return KPolyClass(self.rank_poly * scalar, self.ch * scalar)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __repr__(self):
        return f"KPolyClass(rank={self.rank_poly}, ch={self.space.render_class(self.ch)!r})"


def lambda_y(V):
    """The total exterior-power class of a bundle, sum of y^i [Lambda^i V].

    The Chern character is assembled from elementary symmetric functions of
    the root exponentials, whose power sums are rank + sum of k^m p_m / m!;
    all coefficients stay in Q[y].
    """
    if V.rank < 0:
        raise InvalidParameter("lambda_y needs an honest (non-virtual) rank")
    space = V.space
    d = space.dim
    p = power_sums(V, d)
    q = []
    for k in range(1, V.rank + 1):
        acc = space.constant(Fraction(V.rank))
        for m in range(1, d + 1):
            acc = acc + p[m - 1] * Fraction(k**m, _factorial(m))
        q.append(acc)
    e = _elementary_from_power_sums(space, q, V.rank)
    ch = space.zero()
    rank_poly = LaurentY()
    binom = 1
    for i in range(V.rank + 1):
        ch = ch + e[i] * LaurentY.y(i)
        rank_poly = rank_poly + LaurentY({i: binom})
        binom = binom * (V.rank - i) // (i + 1)
    return KPolyClass(rank_poly, ch)


def k_dual(k, space=None):
    """Grothendieck duality on K-classes of a smooth model of dimension m:
    each term [F] y^i goes to (-1)^m [F* (x) omega] (1/y)^i."""
    if space is None:
        space = k.space
    m = space.dim
    sign = Fraction((-1) ** m)
    omega_ch = class_exp(space.canonical_chern_root())
    ch = k.ch.degree_sign().map_coeffs(_invert_y_coeff) * omega_ch * sign
    rank = k.rank_poly.invert_y() * sign
    return KPolyClass(rank, ch)
