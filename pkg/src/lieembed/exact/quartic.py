"""Exact arithmetic at a numeric value of q, with t = q^(1/4) kept algebraic.

For rational q the fourth root is usually irrational, so the scalar field is
Q(i)[t] / (t^4 - q). Elements are stored as four Gaussian rational
coordinates on the basis 1, t, t^2, t^3. The quotient is a field whenever
t^4 - q is irreducible over Q(i); the constructor checks this.
"""

from fractions import Fraction
from math import isqrt

from .gaussian import ExactDivisionError, GaussianRational
from .laurent import LaurentPoly, RationalFunction

_ZERO = GaussianRational(0)
_ONE = GaussianRational(1)


def _rational_square_root(x):
    """Exact square root of a nonnegative Fraction, or None."""
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _gaussian_square_root(z):
    """Exact square root of a Gaussian rational inside Q(i), or None."""
    z = GaussianRational.coerce(z)
    # sqrt(a+bi) = x + yi with x^2 - y^2 = a, 2xy = b
    mod = _rational_square_root(z.norm())
    if mod is None:
        return None
    x2 = (mod + z.re) / 2
    y2 = (mod - z.re) / 2
    x = _rational_square_root(x2)
    y = _rational_square_root(y2)
    if x is None or y is None:
        return None
    if 2 * x * y != z.im:
        y = -y
    cand = GaussianRational(x, y)
    return cand if cand * cand == z else None


def quartic_is_irreducible(q):
    """Whether t^4 - q is irreducible over Q(i) for a nonzero q.

    By Capelli's theorem x^4 - a is reducible over a field K of
    characteristic zero exactly when a is a square in K or a = -4c^4 for
    some c in K. Over Q(i) we have -4 = (1+i)^4, so the second case is a
    fourth power and already a square. Irreducibility therefore reduces to
    q having no square root in Q(i).
    """
    q = GaussianRational.coerce(q)
    if q.is_zero():
        return False
    return _gaussian_square_root(q) is None


class QuarticField:
    """The field Q(i)(t) with t^4 = q for a fixed rational q."""

    def __init__(self, q):
        q = Fraction(q)
        if q <= 0:
            raise ValueError("numeric q must be positive")
        self.q = q
        self._q = GaussianRational(q)
        self.is_field = quartic_is_irreducible(q)

    def __repr__(self):
        return f"QuarticField(q={self.q})"

    def element(self, coords):
        return QuarticElement(self, coords)

    def zero(self):
        return QuarticElement(self, (_ZERO,) * 4)

    def one(self):
        return QuarticElement(self, (_ONE, _ZERO, _ZERO, _ZERO))

    def scalar(self, c):
        return QuarticElement(self, (GaussianRational.coerce(c), _ZERO, _ZERO, _ZERO))

    def t_power(self, k):
        """t^k reduced with t^4 = q, valid for negative k as well."""
        quot, rem = divmod(k, 4)
        coeff = self._q ** quot
        coords = [_ZERO] * 4
        coords[rem] = coeff
        return QuarticElement(self, tuple(coords))

    def from_laurent(self, f):
        coords = [_ZERO] * 4
        for k, c in f.coeffs.items():
            quot, rem = divmod(k, 4)
            coords[rem] = coords[rem] + c * self._q ** quot
        return QuarticElement(self, tuple(coords))

    def from_rational_function(self, f):
        return self.from_laurent(f.numerator) / self.from_laurent(f.denominator)

    def coerce(self, x):
        if isinstance(x, QuarticElement):
            if x.field.q != self.q:
                raise ValueError("mixing elements of different quartic fields")
            return x
        if isinstance(x, LaurentPoly):
            return self.from_laurent(x)
        if isinstance(x, RationalFunction):
            return self.from_rational_function(x)
        return self.scalar(x)


class QuarticElement:
    """Element of a QuarticField, immutable."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        if len(coords) != 4:
            raise ValueError("quartic elements have four coordinates")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", tuple(GaussianRational.coerce(c) for c in coords))

    def __setattr__(self, name, value):
        raise AttributeError("QuarticElement is immutable")

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def __add__(self, other):
        o = self.field.coerce(other)
        return QuarticElement(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return QuarticElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self.field.coerce(other))

    def __rsub__(self, other):
        return self.field.coerce(other) - self

    def __mul__(self, other):
        o = self.field.coerce(other)
        prod = [_ZERO] * 7
        for i, a in enumerate(self.coords):
            if a.is_zero():
                continue
            for j, b in enumerate(o.coords):
                if not b.is_zero():
                    prod[i + j] = prod[i + j] + a * b
        q = self.field._q
        out = [prod[k] + q * prod[k + 4] if k < 3 else prod[k] for k in range(4)]
        return QuarticElement(self.field, tuple(out))

    __rmul__ = __mul__

    def _matrix(self):
        # columns are self * t^j expressed in the basis
        cols = []
        cur = self
        t = self.field.t_power(1)
        for _ in range(4):
            cols.append(cur.coords)
            cur = cur * t
        return [[cols[j][i] for j in range(4)] for i in range(4)]

    def inverse(self):
        if self.is_zero():
            raise ExactDivisionError("QuarticElement.inverse")
        if not self.field.is_field:
            raise ArithmeticError(f"t^4 - {self.field.q} is reducible; inverses are not unique")
        sol = _solve(self._matrix(), [_ONE, _ZERO, _ZERO, _ZERO])
        if sol is None:
            raise ExactDivisionError("QuarticElement.inverse", "zero divisor")
        return QuarticElement(self.field, tuple(sol))

    def __truediv__(self, other):
        return self * self.field.coerce(other).inverse()

    def __rtruediv__(self, other):
        return self.field.coerce(other) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        try:
            o = self.field.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        return hash((self.field.q, self.coords))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"QuarticElement(q={self.field.q}, {[str(c) for c in self.coords]})"


def _solve(matrix, rhs):
    """Gaussian elimination over Q(i); returns None for a singular matrix."""
    n = len(matrix)
    a = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col].inverse()
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and not a[r][col].is_zero():
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]
