"""Gaussian rationals: exact numbers a + b*i with rational a and b."""

from fractions import Fraction
from numbers import Rational


class ExactDivisionError(ZeroDivisionError):
    """Raised when an exact operation would divide by zero.

    The message always names the operation that failed so that callers
    further up (reports, the CLI) can surface it without a traceback.
    """

    def __init__(self, operation, detail=""):
        self.operation = operation
        msg = f"division by zero in {operation}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class GaussianRational:
    """Immutable exact complex number with rational real and imaginary parts.

    Floats are rejected on purpose. Both parts are stored as
    ``fractions.Fraction`` which keeps them in lowest terms with a positive
    denominator.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "_re", _as_fraction(re))
        object.__setattr__(self, "_im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @property
    def re(self):
        return self._re

    @property
    def im(self):
        return self._im

    @classmethod
    def coerce(cls, x):
        if isinstance(x, GaussianRational):
            return x
        return cls(x, 0)

    @classmethod
    def parse(cls, text):
        """Parse forms such as ``3``, ``-1/2``, ``2i``, ``1/2-3/4i``."""
        s = text.strip().replace(" ", "")
        if not s:
            raise ValueError("empty number")
        if not s.endswith("i"):
            return cls(Fraction(s))
        body = s[:-1]
        # split at the last sign that is not at position 0
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut <= 0:
            if body in ("", "+"):
                return cls(0, 1)
            if body == "-":
                return cls(0, -1)
            return cls(0, Fraction(body))
        re_part, im_part = body[:cut], body[cut:]
        if im_part in ("+", "-"):
            im_part += "1"
        return cls(Fraction(re_part), Fraction(im_part))

    def is_zero(self):
        return self._re == 0 and self._im == 0

    def is_real(self):
        return self._im == 0

    def conjugate(self):
        return GaussianRational(self._re, -self._im)

    def norm(self):
        """Squared modulus a^2 + b^2 as a Fraction."""
        return self._re * self._re + self._im * self._im

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re - o._re, self._im - o._im)

    def __rsub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self._re, self._im, o._re, o._im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ExactDivisionError("GaussianRational.inverse")
        return GaussianRational(self._re / n, -self._im / n)

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if o.is_zero():
            raise ExactDivisionError("GaussianRational division")
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._re == other._re and self._im == other._im
        if isinstance(other, (int, Fraction)):
            return self._im == 0 and self._re == other
        return NotImplemented

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"GaussianRational({self._re}, {self._im})"

    def __str__(self):
        if self._im == 0:
            return str(self._re)
        if self._re == 0:
            return _imag_str(self._im)
        sign = "+" if self._im > 0 else "-"
        return f"{self._re}{sign}{_imag_str(abs(self._im))}"


def _imag_str(x):
    if x == 1:
        return "i"
    if x == -1:
        return "-i"
    return f"{x}i"


I = GaussianRational(0, 1)
ONE = GaussianRational(1)
ZERO = GaussianRational(0)
