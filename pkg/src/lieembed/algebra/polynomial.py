"""Noncommutative polynomials in PBW normal form."""

from fractions import Fraction
from math import gcd

from ..exact.gaussian import GaussianRational


def _split_scalar(c):
    """Write a scalar as (x + y*i) / d with integers x, y and d > 0."""
    if isinstance(c, int):
        return c, 0, 1
    if isinstance(c, Fraction):
        return c.numerator, 0, c.denominator
    c = GaussianRational.coerce(c)
    d = c.re.denominator * c.im.denominator // gcd(c.re.denominator, c.im.denominator)
    return int(c.re * d), int(c.im * d), d


def _lcm(a, b):
    return a * b // gcd(a, b)


class NCPolynomial:
    """Element of an enveloping algebra, stored in PBW normal form.

    Terms map dense exponent tuples to Gaussian integer numerators
    ``(re, im)`` over one shared positive denominator. The representation is
    canonical (no zero terms, numerators and denominator jointly coprime),
    so equality is structural.
    """

    __slots__ = ("algebra", "_t", "_d", "_hash")

    def __init__(self, algebra, terms=None, den=1):
        self.algebra = algebra
        self._hash = None
        if terms is None:
            self._t, self._d = {}, 1
        else:
            self._t, self._d = _canonical(terms, den)

    @classmethod
    def _trusted(cls, algebra, terms, den):
        out = cls.__new__(cls)
        out.algebra = algebra
        out._t = terms
        out._d = den
        out._hash = None
        return out

    @classmethod
    def from_coefficients(cls, algebra, coeffs):
        """Build from a map monomial -> scalar (int, Fraction or GaussianRational)."""
        den = 1
        parts = {}
        for m, c in coeffs.items():
            x, y, d = _split_scalar(c)
            parts[tuple(m)] = (x, y, d)
            den = _lcm(den, d)
        terms = {m: [x * (den // d), y * (den // d)] for m, (x, y, d) in parts.items()}
        return cls(algebra, terms, den)

    # basic queries

    @property
    def denominator(self):
        return self._d

    def raw_terms(self):
        """The canonical numerator map and shared denominator (read-only use)."""
        return self._t, self._d

    def coefficient(self, mono):
        v = self._t.get(tuple(mono))
        if v is None:
            return GaussianRational(0)
        return GaussianRational(Fraction(v[0], self._d), Fraction(v[1], self._d))

    def terms(self):
        """Map monomial -> GaussianRational coefficient."""
        return {m: GaussianRational(Fraction(r, self._d), Fraction(i, self._d))
                for m, (r, i) in self._t.items()}

    def monomials(self):
        return sorted(self._t)

    def __len__(self):
        return len(self._t)

    def is_zero(self):
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def degree(self):
        return max((sum(m) for m in self._t), default=-1)

    def is_scalar(self):
        return all(not any(m) for m in self._t)

    def scalar_value(self):
        """The constant coefficient, requiring the polynomial to be a scalar."""
        if not self.is_scalar():
            raise ValueError("polynomial is not a scalar")
        return self.coefficient((0,) * self.algebra.ngens)

    def max_exponent(self, index):
        return max((m[index] for m in self._t), default=0)

    # arithmetic

    def _check_same(self, other):
        if self.algebra is not other.algebra and self.algebra.key != other.algebra.key:
            raise ValueError("polynomials belong to different algebras")

    def _coerce(self, other):
        if isinstance(other, NCPolynomial):
            self._check_same(other)
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.algebra.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._t:
            return self
        if not self._t:
            return o
        den = _lcm(self._d, o._d)
        fa, fb = den // self._d, den // o._d
        out = {m: [r * fa, i * fa] for m, (r, i) in self._t.items()}
        for m, (r, i) in o._t.items():
            v = out.get(m)
            if v is None:
                out[m] = [r * fb, i * fb]
            else:
                v[0] += r * fb
                v[1] += i * fb
        return NCPolynomial(self.algebra, out, den)

    __radd__ = __add__

    def __neg__(self):
        return NCPolynomial._trusted(self.algebra, {m: (-r, -i) for m, (r, i) in self._t.items()}, self._d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c):
        x, y, d = _split_scalar(c)
        if x == 0 and y == 0:
            return self.algebra.zero()
        out = {m: [r * x - i * y, r * y + i * x] for m, (r, i) in self._t.items()}
        return NCPolynomial(self.algebra, out, self._d * d)

    def __mul__(self, other):
        if isinstance(other, NCPolynomial):
            self._check_same(other)
            if not self._t or not other._t:
                return self.algebra.zero()
            raw = self.algebra.kernel.mul_terms(self._t, other._t)
            return NCPolynomial(self.algebra, raw, self._d * other._d)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(GaussianRational(1) / GaussianRational.coerce(other))
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = self.algebra.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def commutator(self, other):
        return self * other - other * self

    def __eq__(self, other):
        if isinstance(other, NCPolynomial):
            if self.algebra is not other.algebra and self.algebra.key != other.algebra.key:
                return False
            return self._d == other._d and self._t == other._t
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == self.algebra.scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._d, frozenset(self._t.items())))
        return self._hash

    # display and serialization

    def sorted_items(self):
        return sorted(self.terms().items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0])))

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for m, c in self.sorted_items():
            word = self.algebra.format_monomial(m)
            cs = str(c)
            if not c.is_real() and c.re != 0:
                cs = f"({cs})"
            if not word:
                parts.append(cs)
            elif c == 1:
                parts.append(word)
            elif c == -1:
                parts.append("-" + word)
            else:
                parts.append(f"{cs}*{word}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        text = str(self)
        if len(text) > 200:
            text = text[:200] + "..."
        return f"NCPolynomial({text})"

    def to_data(self):
        """JSON-friendly canonical data: sorted [exponents, re, im] rows and the denominator."""
        rows = [[list(m), r, i] for m, (r, i) in sorted(self._t.items())]
        return {"den": self._d, "terms": rows}

    @classmethod
    def from_data(cls, algebra, data):
        terms = {tuple(m): (r, i) for m, r, i in data["terms"]}
        return cls(algebra, terms, data["den"])


def _canonical(terms, den):
    """Clear fractional numerators, drop zeros and reduce by the content."""
    if den <= 0:
        if den == 0:
            raise ZeroDivisionError("polynomial denominator is zero")
        terms = {m: (-v[0], -v[1]) for m, v in terms.items()}
        den = -den
    scale = 1
    for r, i in terms.values():
        if type(r) is Fraction and r.denominator != 1:
            scale = _lcm(scale, r.denominator)
        if type(i) is Fraction and i.denominator != 1:
            scale = _lcm(scale, i.denominator)
    out = {}
    g = den * scale
    for m, (r, i) in terms.items():
        if scale != 1:
            r = r * scale
            i = i * scale
        r = int(r)
        i = int(i)
        if r or i:
            out[m] = (r, i)
            if g != 1:
                g = gcd(g, r, i)
    den = den * scale
    if not out:
        return {}, 1
    if g != 1:
        out = {m: (r // g, i // g) for m, (r, i) in out.items()}
        den //= g
    return out, den
