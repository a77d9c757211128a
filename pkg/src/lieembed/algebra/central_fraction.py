"""Fractions with a power of one central symbol in the denominator.

An element num / Y^k, with Y central, is all we need to handle the
deformed generators, which carry a single 1/Y each. Comparing such
fractions only requires lifting both to a common power of Y, so no
localization machinery is involved.
"""

from fractions import Fraction

from ..exact.gaussian import GaussianRational
from .polynomial import NCPolynomial


class CentralFraction:
    """The element ``numerator * root^(-power)`` for a central generator ``root``."""

    __slots__ = ("numerator", "power", "root")

    def __init__(self, numerator, power=0, root=None):
        if root is None:
            raise ValueError("a central root generator is required")
        self.numerator = numerator
        self.power = power
        self.root = root

    @property
    def algebra(self):
        return self.numerator.algebra

    def _root_poly(self):
        return self.algebra.gen(self.root)

    def lift(self, k):
        """Numerator over root^k, for k at least the current power."""
        if k < self.power:
            raise ValueError("cannot lower the denominator power")
        out = self.numerator
        y = self._root_poly()
        for _ in range(k - self.power):
            out = out * y
        return out

    def _coerce(self, other):
        if isinstance(other, CentralFraction):
            return other
        if isinstance(other, NCPolynomial):
            return CentralFraction(other, 0, self.root)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return CentralFraction(self.algebra.scalar(other), 0, self.root)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        k = max(self.power, o.power)
        return CentralFraction(self.lift(k) + o.lift(k), k, self.root)

    __radd__ = __add__

    def __neg__(self):
        return CentralFraction(-self.numerator, self.power, self.root)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return CentralFraction(self.numerator.scale(other), self.power, self.root)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CentralFraction(self.numerator * o.numerator, self.power + o.power, self.root)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return CentralFraction(self.numerator.scale(other), self.power, self.root)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    def is_zero(self):
        return self.numerator.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CentralFraction(power={self.power}, terms={len(self.numerator)})"


def substitute_cleared(mapping, x, target, root):
    """Image of x under a map whose generator images may carry 1/root factors.

    ``mapping`` sends generator names of x's algebra to CentralFraction (or
    NCPolynomial) values over ``target``. Each monomial's image is computed
    with numerators only and then brought to the common power of ``root``.
    """
    src = x.algebra
    images = {}
    for g, img in mapping.items():
        if isinstance(img, NCPolynomial):
            img = CentralFraction(img, 0, root)
        images[src.index(g)] = img
    y = target.gen(root)
    powers = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            if i not in images:
                raise KeyError(f"unmapped generator {src.generators[i].name}")
            img = images[i]
            num = img.numerator ** e
            powers[key] = (num, img.power * e)
        return powers[key]

    pieces = []
    top = 0
    for m, c in x.terms().items():
        num = target.one()
        weight = 0
        for i, e in enumerate(m):
            if e:
                p, w = power(i, e)
                num = num * p
                weight += w
        pieces.append((num.scale(c), weight))
        top = max(top, weight)
    ypow = [target.one()]
    for _ in range(top):
        ypow.append(ypow[-1] * y)
    out = target.zero()
    for num, w in pieces:
        out = out + (num if w == top else num * ypow[top - w])
    return CentralFraction(out, top, root)
