"""Truncated multivariate Taylor jets.

A Jet is a polynomial in displacements x = p - base, kept up to total degree
``order``. Differentiation lowers the order by one, so the order recorded
on a jet is always the degree up to which its coefficients are valid.

Coefficients live in a JetField: exact Fractions by default, or mpmath
floats at a fixed binary precision.
"""

import itertools
from fractions import Fraction
from math import isqrt

import mpmath

from ..exact.gaussian import GaussianRational


class JetOrderError(ValueError):
    """An operation needs more Taylor orders than the jet carries."""


class ExactField:
    """Rational coefficients; residuals must vanish identically."""

    name = "exact"
    tolerance = 0

    def convert(self, x):
        if isinstance(x, GaussianRational):
            if not x.is_real():
                raise TypeError("jet coefficients are real; split complex values first")
            x = x.re
        return Fraction(x)

    def sqrt(self, x):
        if x <= 0:
            raise ValueError("sqrt of a jet needs a positive constant term")
        num, den = x.numerator, x.denominator
        rn, rd = isqrt(num), isqrt(den)
        if rn * rn != num or rd * rd != den:
            raise ValueError(f"constant term {x} is not a rational square; use float mode "
                             "or a rational base point")
        return Fraction(rn, rd)

    def is_negligible(self, x, scale=1):
        return x == 0

    def magnitude(self, x):
        return abs(x)


class FloatField:
    """mpmath coefficients at ``bits`` of precision with a relative tolerance."""

    name = "float"

    def __init__(self, bits=113, tolerance="1e-20"):
        self.ctx = mpmath.mp.clone()
        self.ctx.prec = bits
        self.bits = bits
        self.tolerance = self.ctx.mpf(tolerance)

    def convert(self, x):
        if isinstance(x, GaussianRational):
            if not x.is_real():
                raise TypeError("jet coefficients are real; split complex values first")
            x = x.re
        if isinstance(x, Fraction):
            return self.ctx.mpf(x.numerator) / x.denominator
        return self.ctx.mpf(x)

    def sqrt(self, x):
        if x <= 0:
            raise ValueError("sqrt of a jet needs a positive constant term")
        return self.ctx.sqrt(x)

    def is_negligible(self, x, scale=1):
        return abs(x) <= self.tolerance * max(1, scale)

    def magnitude(self, x):
        return abs(x)


EXACT = ExactField()


def monomials(nvars, order):
    """Exponent tuples of total degree <= order, graded then lexicographic."""
    out = []
    for deg in range(order + 1):
        for combo in itertools.combinations_with_replacement(range(nvars), deg):
            e = [0] * nvars
            for v in combo:
                e[v] += 1
            out.append(tuple(e))
    return sorted(set(out), key=lambda e: (sum(e), tuple(-x for x in e)))


class Jet:
    """Truncated Taylor expansion around ``base``; coefficients keyed by exponent."""

    __slots__ = ("field", "base", "order", "coeffs")

    def __init__(self, field, base, order, coeffs):
        self.field = field
        self.base = tuple(base)
        self.order = order
        self.coeffs = {e: c for e, c in coeffs.items() if c != 0 and sum(e) <= order}

    @property
    def nvars(self):
        return len(self.base)

    @classmethod
    def constant(cls, field, base, order, c):
        return cls(field, base, order, {(0,) * len(base): field.convert(c)})

    @classmethod
    def coordinate(cls, field, base, order, k):
        """The jet of the coordinate p_k (k counts from 0 over the jet variables)."""
        n = len(base)
        zero = (0,) * n
        unit = tuple(1 if v == k else 0 for v in range(n))
        return cls(field, base, order, {zero: field.convert(base[k]), unit: field.convert(1)})

    @classmethod
    def from_polynomial(cls, field, base, order, poly):
        """Expand a polynomial in the absolute coordinates around ``base``.

        ``poly`` maps exponent tuples to coefficients.
        """
        out = cls(field, base, order, {})
        coords = [cls.coordinate(field, base, order, k) for k in range(len(base))]
        for e, c in poly.items():
            term = cls.constant(field, base, order, c)
            for k, a in enumerate(e):
                for _ in range(a):
                    term = term * coords[k]
            out = out + term
        return out

    def _check(self, other):
        if self.base != other.base or self.field is not other.field:
            raise ValueError("jets at different base points or fields")

    def zero_like(self, order=None):
        return Jet(self.field, self.base, self.order if order is None else order, {})

    def __add__(self, other):
        if not isinstance(other, Jet):
            return self + Jet.constant(self.field, self.base, self.order, other)
        self._check(other)
        order = min(self.order, other.order)
        out = {e: c for e, c in self.coeffs.items() if sum(e) <= order}
        for e, c in other.coeffs.items():
            if sum(e) <= order:
                out[e] = out.get(e, 0) + c
        return Jet(self.field, self.base, order, out)

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.field, self.base, self.order, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self.field.convert(c)
        return Jet(self.field, self.base, self.order, {e: c * v for e, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return self.scale(other)
        self._check(other)
        order = min(self.order, other.order)
        out = {}
        for e1, c1 in self.coeffs.items():
            d1 = sum(e1)
            if d1 > order:
                continue
            for e2, c2 in other.coeffs.items():
                if d1 + sum(e2) > order:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Jet(self.field, self.base, order, out)

    __rmul__ = __mul__

    def constant_term(self):
        return self.coeffs.get((0,) * self.nvars, 0)

    def derivative(self, k):
        """Partial derivative in variable k; the result is valid to order - 1."""
        if self.order < 1:
            raise JetOrderError("insufficient jet order: differentiating needs order >= 1; "
                                "raise the jet order")
        out = {}
        for e, c in self.coeffs.items():
            a = e[k]
            if a:
                f = list(e)
                f[k] -= 1
                out[tuple(f)] = c * a
        return Jet(self.field, self.base, self.order - 1, out)

    def sqrt(self):
        """Square root of a jet with positive constant term, by the binomial series."""
        c0 = self.constant_term()
        s0 = self.field.sqrt(c0)
        g = (self - Jet.constant(self.field, self.base, self.order, c0)).scale(1 / c0)
        out = Jet.constant(self.field, self.base, self.order, 1)
        power = Jet.constant(self.field, self.base, self.order, 1)
        binom = Fraction(1)
        for k in range(1, self.order + 1):
            binom = binom * (Fraction(1, 2) - (k - 1)) / k
            power = power * g
            out = out + power.scale(self.field.convert(binom))
        return out.scale(s0)

    def truncate(self, order):
        if order > self.order:
            raise JetOrderError(f"cannot raise the order from {self.order} to {order}")
        return Jet(self.field, self.base, order, self.coeffs)

    def is_zero(self, scale=1):
        """Identically zero (exact mode) or within tolerance * max(1, scale) (float mode)."""
        return all(self.field.is_negligible(c, scale) for c in self.coeffs.values())

    def max_abs(self):
        return max((self.field.magnitude(c) for c in self.coeffs.values()), default=0)

    def __eq__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self):
        return f"Jet(order={self.order}, terms={len(self.coeffs)})"


class ComplexJet:
    """A pair (re, im) of real jets; real operators act componentwise."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        self.re = re
        self.im = re.zero_like() if im is None else im

    @property
    def order(self):
        return min(self.re.order, self.im.order)

    def map(self, op):
        return ComplexJet(op(self.re), op(self.im))

    def __add__(self, other):
        return ComplexJet(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return ComplexJet(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return ComplexJet(-self.re, -self.im)

    def times_real(self, jet):
        return ComplexJet(self.re * jet, self.im * jet)

    def scale(self, c):
        """Multiply by a Gaussian rational (or a real number)."""
        c = GaussianRational.coerce(c)
        a, b = c.re, c.im
        re = self.re.scale(a) - self.im.scale(b) if b else self.re.scale(a)
        im = self.re.scale(b) + self.im.scale(a) if b else self.im.scale(a)
        return ComplexJet(re, im)

    def scale_real(self, x):
        return ComplexJet(self.re.scale(x), self.im.scale(x))

    def is_zero(self, scale=1):
        return self.re.is_zero(scale) and self.im.is_zero(scale)

    def max_abs(self):
        return max(self.re.max_abs(), self.im.max_abs())

    def size(self):
        return len(self.re.coeffs) + len(self.im.coeffs)

    def __repr__(self):
        return f"ComplexJet(order={self.order}, terms={self.size()})"


__all__ = ["EXACT", "ComplexJet", "ExactField", "FloatField", "Jet", "JetOrderError",
           "monomials"]
