"""Laurent polynomials and rational functions in the formal variable t.

The variable t stands for a fourth root of q, so both q and sqrt(q) powers
with integer weights become integer powers of t.
"""

from fractions import Fraction

from .gaussian import ExactDivisionError, GaussianRational

_ZERO = GaussianRational(0)
_ONE = GaussianRational(1)


def _coerce_coeff(c):
    return GaussianRational.coerce(c)


class LaurentPoly:
    """Finite sum of c_k t^k with Gaussian rational coefficients, k in Z."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for k, c in coeffs.items():
                if not isinstance(k, int):
                    raise TypeError("t-exponents must be integers")
                c = _coerce_coeff(c)
                if not c.is_zero():
                    clean[k] = c
        object.__setattr__(self, "_coeffs", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, k, c=1):
        return cls({k: c})

    @classmethod
    def t(cls):
        return cls({1: 1})

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def coefficient(self, k):
        return self._coeffs.get(k, _ZERO)

    def is_zero(self):
        return not self._coeffs

    def is_constant(self):
        return not self._coeffs or set(self._coeffs) == {0}

    def min_exp(self):
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self._coeffs)

    def max_exp(self):
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self._coeffs)

    def __add__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, _ZERO) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        out = {}
        for a, ca in self._coeffs.items():
            for b, cb in other._coeffs.items():
                out[a + b] = out.get(a + b, _ZERO) + ca * cb
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            # negative powers exist only for monomials
            if isinstance(k, int) and len(self._coeffs) == 1:
                (e, c), = self._coeffs.items()
                return LaurentPoly({e * k: c ** k})
            return NotImplemented
        out = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k):
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def invert_variable(self):
        """Substitute t -> 1/t."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def evaluate(self, t0):
        t0 = _coerce_coeff(t0)
        if not self._coeffs:
            return _ZERO
        if t0.is_zero() and self.min_exp() < 0:
            raise ExactDivisionError("LaurentPoly.evaluate", "negative power of t at t=0")
        total = _ZERO
        for k, c in self._coeffs.items():
            total = total + c * (t0 ** k)
        return total

    def __eq__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self._coeffs.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for k in sorted(self._coeffs, reverse=True):
            c = self._coeffs[k]
            cs = str(c)
            if not c.is_real() and c.re != 0:
                cs = f"({cs})"
            if k == 0:
                parts.append(cs)
            else:
                pw = "t" if k == 1 else f"t^{k}"
                if c == 1:
                    parts.append(pw)
                elif c == -1:
                    parts.append(f"-{pw}")
                else:
                    parts.append(f"{cs}*{pw}")
        return " + ".join(parts).replace("+ -", "- ")

    # dense helpers: list index = degree after shifting the lowest power to 0

    def _dense(self):
        lo, hi = self.min_exp(), self.max_exp()
        out = [_ZERO] * (hi - lo + 1)
        for k, c in self._coeffs.items():
            out[k - lo] = c
        return lo, out


def _as_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction, GaussianRational)):
        return LaurentPoly.constant(x)
    return None


def _strip(a):
    while a and a[-1].is_zero():
        a.pop()
    return a


def _poly_divmod(a, b):
    """Dense polynomial division over Q(i); lists are low-to-high."""
    a = list(a)
    _strip(a)
    b = _strip(list(b))
    if not b:
        raise ExactDivisionError("polynomial division")
    lead_inv = b[-1].inverse()
    if len(a) < len(b):
        return [], a
    quot = [_ZERO] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * lead_inv
        quot[i] = c
        if c.is_zero():
            continue
        for j, bj in enumerate(b):
            a[i + j] = a[i + j] - c * bj
    return quot, _strip(a[: len(b) - 1])


def _poly_gcd(a, b):
    a = _strip(list(a))
    b = _strip(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    inv = a[-1].inverse()
    return [c * inv for c in a]


def _from_dense(lo, dense):
    return LaurentPoly({lo + i: c for i, c in enumerate(dense) if not c.is_zero()})


def laurent_gcd(a, b):
    """Monic gcd of two Laurent polynomials, normalized to start at t^0."""
    if a.is_zero():
        return _normalize_unit(b)
    if b.is_zero():
        return _normalize_unit(a)
    _, da = a._dense()
    _, db = b._dense()
    return _from_dense(0, _poly_gcd(da, db))


def _normalize_unit(a):
    if a.is_zero():
        return a
    lo, d = a._dense()
    inv = d[-1].inverse()
    return _from_dense(0, [c * inv for c in d])


def laurent_exact_divide(a, b):
    """Return a / b, raising if the division leaves a remainder."""
    if b.is_zero():
        raise ExactDivisionError("LaurentPoly exact division")
    if a.is_zero():
        return a
    lo_a, da = a._dense()
    lo_b, db = b._dense()
    q, r = _poly_divmod(da, db)
    if r:
        raise ArithmeticError("Laurent division is not exact")
    return _from_dense(lo_a - lo_b, q)


class RationalFunction:
    """Quotient of two Laurent polynomials in t, kept in canonical form.

    Canonical form: numerator and denominator share no nontrivial common
    factor, and the denominator's lowest-degree term is exactly ``1*t^0``.
    Structural equality of (numerator, denominator) then decides equality.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num, den=None):
        num = _as_laurent(num) if not isinstance(num, LaurentPoly) else num
        if num is None:
            raise TypeError("numerator must be a Laurent polynomial or scalar")
        if den is None:
            den = LaurentPoly.constant(1)
        else:
            den = _as_laurent(den) if not isinstance(den, LaurentPoly) else den
        if den.is_zero():
            raise ExactDivisionError("RationalFunction construction")
        num, den = _canonical(num, den)
        object.__setattr__(self, "_num", num)
        object.__setattr__(self, "_den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @property
    def numerator(self):
        return self._num

    @property
    def denominator(self):
        return self._den

    def is_zero(self):
        return self._num.is_zero()

    def is_laurent(self):
        return self._den == LaurentPoly.constant(1)

    def __add__(self, other):
        other = _as_rational(other)
        if other is None:
            return NotImplemented
        if self._den == other._den:
            return RationalFunction(self._num + other._num, self._den)
        return RationalFunction(self._num * other._den + other._num * self._den,
                                self._den * other._den)

    __radd__ = __add__

    def __neg__(self):
        return _raw(-self._num, self._den)

    def __sub__(self, other):
        other = _as_rational(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_rational(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_rational(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalFunction(0)
        return RationalFunction(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def inverse(self):
        if self._num.is_zero():
            raise ExactDivisionError("RationalFunction.inverse")
        return RationalFunction(self._den, self._num)

    def __truediv__(self, other):
        other = _as_rational(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_rational(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self._num ** k, self._den ** k)

    def evaluate(self, t0):
        return evaluate_at(self, t0)

    def __eq__(self, other):
        other = _as_rational(other)
        if other is None:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((self._num, self._den))

    def __bool__(self):
        return not self._num.is_zero()

    def __repr__(self):
        return f"RationalFunction({self._num} / {self._den})"

    def __str__(self):
        if self.is_laurent():
            return str(self._num)
        return f"({self._num}) / ({self._den})"


def _raw(num, den):
    out = RationalFunction.__new__(RationalFunction)
    object.__setattr__(out, "_num", num)
    object.__setattr__(out, "_den", den)
    return out


def _as_rational(x):
    if isinstance(x, RationalFunction):
        return x
    lp = _as_laurent(x)
    if lp is None:
        return None
    return _raw(lp, LaurentPoly.constant(1))


def _canonical(num, den):
    if num.is_zero():
        return num, LaurentPoly.constant(1)
    g = laurent_gcd(num, den)
    if not (g.is_constant()):
        num = laurent_exact_divide(num, g)
        den = laurent_exact_divide(den, g)
    lo = den.min_exp()
    c = den.coefficient(lo)
    scale = c.inverse()
    den = LaurentPoly({k - lo: v * scale for k, v in den._coeffs.items()})
    num = LaurentPoly({k - lo: v * scale for k, v in num._coeffs.items()})
    return num, den


def evaluate_at(f, t0):
    """Exact value of a rational function (or Laurent polynomial) at t0."""
    t0 = GaussianRational.coerce(t0)
    if isinstance(f, LaurentPoly):
        return f.evaluate(t0)
    f = _as_rational(f)
    den = f.denominator.evaluate(t0)
    if den.is_zero():
        raise ExactDivisionError("evaluate_at", f"pole at t = {t0}")
    return f.numerator.evaluate(t0) / den


def q_number(x, base="q"):
    """The q-number [x] as a Laurent polynomial in t = q^(1/4).

    ``base="q"`` gives (q^(x/2) - q^(-x/2)) / (q^(1/2) - q^(-1/2)) and
    ``base="sqrt-q"`` the same expression with q replaced by sqrt(q).
    The weight x may be an integer or half-integer; the required powers
    of t must come out integral.
    """
    x = Fraction(x)
    if base == "q":
        step = 2
    elif base in ("sqrt-q", "sqrtq", "sqrt_q"):
        step = 1
    else:
        raise ValueError(f"unknown q-number base {base!r}")
    top = x * step
    if top.denominator != 1:
        raise ValueError("exponent not integral")
    top = int(top)
    # (t^{top} - t^{-top}) / (t^{step} - t^{-step}) summed as a geometric series
    if top == 0:
        return LaurentPoly()
    sign = 1
    if top < 0:
        sign, top = -1, -top
    if top % step:
        raise ValueError("exponent not integral")
    count = top // step
    terms = {}
    for j in range(count):
        e = top - step - 2 * step * j
        terms[e] = terms.get(e, 0) + sign
    return LaurentPoly(terms)
