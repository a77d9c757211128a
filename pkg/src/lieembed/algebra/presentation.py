"""Finitely presented Lie-type algebras and their enveloping algebras."""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..exact.gaussian import GaussianRational
from ..report import VerificationReport
from .kernel import default_kernel
from .polynomial import NCPolynomial

DEFAULT_MAX_TERMS = 50_000_000


class PresentationError(ValueError):
    """Invalid algebra presentation (antisymmetry, Jacobi or centrality)."""


@dataclass(frozen=True)
class Generator:
    """A named generator.

    ``kind`` is one of "L" (rotation), "P" (translation), "Y" or "Z"
    (adjoined central symbols) or "X" for anything else. ``indices`` keeps
    the tensor indices, e.g. (0, 1) for L01.
    """

    name: str
    kind: str = "X"
    indices: tuple = ()


def _rational(c):
    if isinstance(c, GaussianRational):
        if not c.is_real():
            raise PresentationError("structure constants must be rational")
        c = c.re
    c = Fraction(c)
    return int(c) if c.denominator == 1 else c


class AlgebraPresentation:
    """Generators in a fixed total order, a bracket table and central roots.

    ``brackets`` maps index pairs (a, b) to dicts {z: c} meaning
    [g_a, g_b] = sum c * g_z, where z is a generator index or None for the
    identity. Only one orientation per pair needs to be supplied; if both
    are, they must be negatives of each other. ``roots`` maps a generator
    index to the square it rewrites to, as a dict monomial -> rational.
    """

    def __init__(self, generators, brackets, roots=None, name="", check=True,
                 max_terms=DEFAULT_MAX_TERMS, kernel_class=None):
        self.generators = tuple(generators)
        self.name = name
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise PresentationError("generator names must be unique")
        self._index = {g.name: i for i, g in enumerate(self.generators)}
        n = len(self.generators)
        self.ngens = n
        table = {}
        for (a, b), val in brackets.items():
            a, b = self._resolve(a), self._resolve(b)
            if a == b:
                if any(_rational(c) for c in val.values()):
                    raise PresentationError(f"[{names[a]}, {names[a]}] must vanish")
                continue
            clean = {}
            for z, c in val.items():
                c = _rational(c)
                if c:
                    clean[None if z is None else self._resolve(z)] = c
            if a < b:
                a, b = b, a
                clean = {z: -c for z, c in clean.items()}
            if (a, b) in table and table[(a, b)] != clean:
                raise PresentationError(
                    f"bracket of {names[a]} and {names[b]} is not antisymmetric")
            if clean:
                table[(a, b)] = clean
        self._table = table
        touched = set()
        for a, b in table:
            touched.update((a, b))
        s = n
        while s > 0 and (s - 1) not in touched:
            s -= 1
        for (a, b), val in table.items():
            for z in val:
                if z is not None and z >= s:
                    raise PresentationError("bracket results may not involve central tail generators")
        self.central_start = s
        self._roots = {}
        for g, square in (roots or {}).items():
            g = self._resolve(g)
            if g < s:
                raise PresentationError(f"root symbol {names[g]} is not central")
            self._roots[g] = {tuple(m): _rational(c) for m, c in square.items() if c}
        kernel_brackets = {k: [(-1 if z is None else z, c) for z, c in v.items()]
                           for k, v in table.items()}
        self.max_terms = max_terms
        cls = kernel_class or default_kernel()
        self.kernel = cls(n, kernel_brackets, s, self._roots, max_terms)
        self.key = (tuple(self.generators),
                    tuple(sorted((k, tuple(sorted(v.items(), key=str))) for k, v in table.items())),
                    tuple(sorted((g, tuple(sorted(sq.items()))) for g, sq in self._roots.items())))
        self._gens = [self._unit_poly(i) for i in range(n)]
        if check:
            bad = self.jacobi_violations(limit=5)
            if bad:
                raise PresentationError(
                    "Jacobi identity fails for " + ", ".join("(" + ",".join(t) + ")" for t in bad))

    # lookup helpers

    def _resolve(self, g):
        if isinstance(g, int):
            if not 0 <= g < len(self.generators):
                raise KeyError(f"generator index {g} out of range")
            return g
        if isinstance(g, Generator):
            g = g.name
        try:
            return self._index[g]
        except KeyError:
            raise KeyError(f"unknown generator {g!r}") from None

    def index(self, g):
        return self._resolve(g)

    def has(self, name):
        return name in self._index

    def _unit_poly(self, i):
        m = [0] * self.ngens
        m[i] = 1
        return NCPolynomial._trusted(self, {tuple(m): (1, 0)}, 1)

    def __repr__(self):
        return f"AlgebraPresentation({self.name or len(self.generators)} generators)"

    # element constructors

    def gen(self, g):
        return self._gens[self._resolve(g)]

    def zero(self):
        return NCPolynomial._trusted(self, {}, 1)

    def one(self):
        return self.scalar(1)

    def scalar(self, c):
        return NCPolynomial.from_coefficients(self, {(0,) * self.ngens: c})

    def monomial(self, exponents, coeff=1):
        if isinstance(exponents, dict):
            m = [0] * self.ngens
            for g, e in exponents.items():
                m[self._resolve(g)] += e
            exponents = m
        return NCPolynomial.from_coefficients(self, {tuple(exponents): coeff})

    def word(self, *gens):
        """Normal-ordered product of generators taken in the given order."""
        out = self.one()
        for g in gens:
            out = out * self.gen(g)
        return out

    def bracket(self, a, b):
        a, b = self._resolve(a), self._resolve(b)
        if a == b:
            return self.zero()
        sign = 1
        if a < b:
            a, b, sign = b, a, -1
        val = self._table.get((a, b), {})
        out = self.zero()
        for z, c in val.items():
            term = self.one() if z is None else self.gen(z)
            out = out + term.scale(sign * c)
        return out

    def bracket_table(self):
        """All nonzero brackets [g_a, g_b] for a < b, keyed by name pairs."""
        out = {}
        for a in range(self.ngens):
            for b in range(a + 1, self.ngens):
                v = self.bracket(a, b)
                if v:
                    out[(self.generators[a].name, self.generators[b].name)] = v
        return out

    def roots(self):
        """Adjoined root symbols with their squares as polynomials."""
        return {self.generators[g].name: NCPolynomial.from_coefficients(self, sq)
                for g, sq in self._roots.items()}

    def format_monomial(self, m):
        parts = []
        for i, e in enumerate(m):
            if e:
                nm = self.generators[i].name
                parts.append(nm if e == 1 else f"{nm}^{e}")
        return "*".join(parts)

    def monomial_word(self, m):
        """The monomial as ascending (Generator, exponent) pairs."""
        return [(self.generators[i], e) for i, e in enumerate(m) if e]

    # structural checks

    def jacobi_violations(self, limit=None):
        bad = []
        gens = self._gens
        for a, b, c in itertools.combinations(range(self.ngens), 3):
            x, y, z = gens[a], gens[b], gens[c]
            val = (commutator(commutator(x, y), z) + commutator(commutator(y, z), x)
                   + commutator(commutator(z, x), y))
            if val:
                bad.append(tuple(self.generators[i].name for i in (a, b, c)))
                if limit and len(bad) >= limit:
                    break
        return bad

    def noncommuting_generators(self, x):
        """Generators that fail to commute with the polynomial x."""
        return [g.name for g, gp in zip(self.generators, self._gens) if commutator(x, gp)]

    def with_settings(self, max_terms=None, kernel_class=None):
        """A copy of this presentation with a different guard or kernel."""
        return AlgebraPresentation(
            self.generators,
            {k: {(None if z is None else z): c for z, c in v.items()} for k, v in self._table.items()},
            self._roots, self.name, check=False,
            max_terms=max_terms or self.max_terms, kernel_class=kernel_class)


def normal_order(x, algebra=None):
    """PBW normal form of x.

    ``x`` may be an NCPolynomial (already normal, returned unchanged) or a
    sequence of ``(coefficient, [generator, ...])`` pairs describing an
    arbitrary linear combination of words.
    """
    if isinstance(x, NCPolynomial):
        return x
    if algebra is None:
        raise ValueError("an algebra is required to normal-order raw words")
    out = algebra.zero()
    for coeff, word in x:
        out = out + algebra.word(*word).scale(coeff)
    return out


def commutator(a, b):
    """[a, b] = ab - ba in normal form."""
    return a * b - b * a


def adjoin_central_root(algebra, name, square, kind="Y", check=True):
    """Extend ``algebra`` by a central symbol whose square rewrites to ``square``.

    The new symbol is placed last in the generator order. ``square`` must
    be central in ``algebra`` and have rational coefficients.
    """
    if square.algebra is not algebra and square.algebra.key != algebra.key:
        raise PresentationError("square must live in the algebra being extended")
    if check:
        bad = algebra.noncommuting_generators(square)
        if bad:
            raise PresentationError(
                f"square of {name} is not central: fails to commute with {', '.join(bad)}")
    sq_terms = {}
    num, den = square.raw_terms()
    for m, (r, i) in num.items():
        if i:
            raise PresentationError("square must have rational coefficients")
        sq_terms[m + (0,)] = Fraction(r, den)
    gens = list(algebra.generators) + [Generator(name, kind)]
    table = {k: dict(v) for k, v in algebra._table.items()}
    roots = {g: {m + (0,): c for m, c in sq.items()} for g, sq in algebra._roots.items()}
    roots[len(gens) - 1] = sq_terms
    return AlgebraPresentation(gens, table, roots, name=f"{algebra.name}+{name}",
                               check=False, max_terms=algebra.max_terms,
                               kernel_class=type(algebra.kernel))


def substitute(mapping, x, target):
    """Apply the algebra map defined on generators by ``mapping`` to x.

    ``mapping`` sends generator names (or Generator objects) of x's algebra
    to NCPolynomials over ``target``. The image of each monomial is the
    normal-ordered product of the generator images in word order.
    """
    src = x.algebra
    images = {}
    for g, img in mapping.items():
        images[src.index(g)] = img
    powers = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            if i not in images:
                raise KeyError(f"unmapped generator {src.generators[i].name}")
            powers[key] = images[i] ** e
        return powers[key]

    out = target.zero()
    for m, c in x.terms().items():
        term = target.one()
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        out = out + term.scale(c)
    return out


def check_jacobi(algebra):
    """Report on the Jacobi identity for every generator triple."""
    rep = VerificationReport("jacobi", {"algebra": algebra.name, "generators": algebra.ngens})
    gens = algebra._gens
    count = 0
    for a, b, c in itertools.combinations(range(algebra.ngens), 3):
        x, y, z = gens[a], gens[b], gens[c]
        val = (commutator(commutator(x, y), z) + commutator(commutator(y, z), x)
               + commutator(commutator(z, x), y))
        count += 1
        if val:
            names = ",".join(algebra.generators[i].name for i in (a, b, c))
            rep.add(f"jacobi[{names}]", False, f"{len(val)} terms", detail=str(val))
    rep.add("jacobi-all-triples", not rep.failures, f"{len(rep.failures)} violations")
    rep.note("triples", count)
    return rep
