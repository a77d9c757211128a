"""Concrete algebras: so(p+1, q), the Poincare algebra and their Casimirs.

Index conventions: indices run over 0..n-1 with metric
g = diag(e_0, ..., e_{n-1}). Rotation generators L_ij are stored for i < j
and L_ji = -L_ij. Generator order is P_0 < ... < P_{n-1} < L_01 < L_02 < ...
(lexicographic in (i, j)), followed by any adjoined central symbols.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    DEFAULT_MAX_TERMS,
    AlgebraPresentation,
    Generator,
    PresentationError,
    commutator,
)

MAX_DIMENSION = 8


class ConfigurationError(ValueError):
    """A requested configuration is outside the supported range."""


@dataclass(frozen=True)
class Signature:
    """Metric signature: p+1 positive and q negative directions."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 1:
            raise ConfigurationError("signature needs p >= 0 and q >= 1")
        if self.n > MAX_DIMENSION:
            raise ConfigurationError(f"dimension p+q+1 = {self.n} exceeds {MAX_DIMENSION}")

    @property
    def n(self):
        return self.p + self.q + 1

    @property
    def metric(self):
        return (1,) * (self.p + 1) + (-1,) * self.q

    def __str__(self):
        return f"({self.p},{self.q})"


def rotation_name(i, j):
    return f"L{i}{j}"


def translation_name(k):
    return f"P{k}"


def _g(metric, i, j):
    return metric[i] if i == j else 0


def _rotation_pairs(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _signed_rotation(i, j):
    """(name, sign) such that L_ij = sign * L_name with name ordered."""
    if i < j:
        return rotation_name(i, j), 1
    return rotation_name(j, i), -1


def rotation_brackets(metric):
    """Brackets [L_ij, L_kl] = g_ik L_jl + g_jl L_ik - g_il L_jk - g_jk L_il."""
    n = len(metric)
    out = {}
    for (i, j), (k, l) in itertools.combinations(_rotation_pairs(n), 2):
        val = {}
        for c, (a, b) in ((_g(metric, i, k), (j, l)), (_g(metric, j, l), (i, k)),
                          (-_g(metric, i, l), (j, k)), (-_g(metric, j, k), (i, l))):
            if c and a != b:
                name, s = _signed_rotation(a, b)
                val[name] = val.get(name, 0) + c * s
        val = {z: c for z, c in val.items() if c}
        if val:
            out[(rotation_name(i, j), rotation_name(k, l))] = val
    return out


def rotation_brackets_short_form(metric):
    """The same table from the rule [L_ij, L_jk] = -e_j L_ik alone.

    Two generators sharing exactly one index are rotated into the pattern
    (i j), (j k) using L_ab = -L_ba; every other bracket vanishes. This is
    an independent construction used to cross-check ``rotation_brackets``.
    """
    n = len(metric)
    out = {}
    for (a, b), (c, d) in itertools.combinations(_rotation_pairs(n), 2):
        shared = {a, b} & {c, d}
        if len(shared) != 1:
            continue
        j = shared.pop()
        i = a if b == j else b
        k = c if d == j else d
        # L_ab = s1 * L_ij and L_cd = s2 * L_jk
        s1 = 1 if (a, b) == (i, j) else -1
        s2 = 1 if (c, d) == (j, k) else -1
        name, s3 = _signed_rotation(i, k)
        out[(rotation_name(a, b), rotation_name(c, d))] = {name: -metric[j] * s1 * s2 * s3}
    return out


class Frame:
    """An algebra together with its metric and index-aware accessors."""

    def __init__(self, algebra, metric, has_translations):
        self.algebra = algebra
        self.metric = tuple(metric)
        self.n = len(metric)
        self.has_translations = has_translations

    def g(self, i, j):
        return _g(self.metric, i, j)

    def L(self, i, j):
        """L_ij with L_ji = -L_ij and L_ii = 0."""
        if i == j:
            return self.algebra.zero()
        name, s = _signed_rotation(i, j)
        x = self.algebra.gen(name)
        return x if s == 1 else -x

    def L_up(self, i, j):
        """L^{ij} = g^{ii} g^{jj} L_ij (diagonal metric)."""
        return self.L(i, j).scale(self.metric[i] * self.metric[j])

    def L_mixed(self, i, j):
        """L_i^j = L_ik g^{kj}."""
        return self.L(i, j).scale(self.metric[j])

    def P(self, k):
        if not self.has_translations:
            raise KeyError("this algebra has no translation generators")
        return self.algebra.gen(translation_name(k))

    def rotations(self):
        return [(i, j, self.L(i, j)) for i, j in _rotation_pairs(self.n)]


def build_so_metric(metric, check=True, short_form=False, max_terms=DEFAULT_MAX_TERMS,
                    kernel_class=None, name=None):
    """so(g) for a diagonal metric with entries +-1."""
    metric = tuple(metric)
    if len(metric) < 2:
        raise ConfigurationError("need at least two dimensions")
    if any(e not in (1, -1) for e in metric):
        raise ConfigurationError("metric entries must be +1 or -1")
    n = len(metric)
    gens = [Generator(rotation_name(i, j), "L", (i, j)) for i, j in _rotation_pairs(n)]
    table = rotation_brackets_short_form(metric) if short_form else rotation_brackets(metric)
    alg = AlgebraPresentation(gens, table, name=name or f"so{metric}", check=check,
                              max_terms=max_terms, kernel_class=kernel_class)
    return Frame(alg, metric, False)


def build_so(p, q, **kw):
    """so(p+1, q) in the metric diag(+1 x (p+1), -1 x q)."""
    sig = Signature(p, q)
    kw.setdefault("name", f"so({p + 1},{q})")
    return build_so_metric(sig.metric, **kw)


def poincare_brackets(metric):
    """Rotation brackets plus [L_ij, P_k] = -g_jk P_i + g_ik P_j."""
    n = len(metric)
    table = rotation_brackets(metric)
    for i, j in _rotation_pairs(n):
        for k in range(n):
            val = {}
            if _g(metric, j, k):
                val[translation_name(i)] = val.get(translation_name(i), 0) - _g(metric, j, k)
            if _g(metric, i, k):
                val[translation_name(j)] = val.get(translation_name(j), 0) + _g(metric, i, k)
            val = {z: c for z, c in val.items() if c}
            if val:
                table[(rotation_name(i, j), translation_name(k))] = val
    return table


def build_poincare(p, q, check=True, max_terms=DEFAULT_MAX_TERMS, kernel_class=None,
                   corrupt=None):
    """Poincare algebra so(p+1, q) + R^n with translations ordered first.

    ``corrupt`` optionally names one bracket (a pair of generator names)
    whose sign is flipped; used only for negative controls.
    """
    sig = Signature(p, q)
    metric = sig.metric
    n = sig.n
    gens = [Generator(translation_name(k), "P", (k,)) for k in range(n)]
    gens += [Generator(rotation_name(i, j), "L", (i, j)) for i, j in _rotation_pairs(n)]
    table = poincare_brackets(metric)
    if corrupt is not None:
        table[corrupt] = {z: -c for z, c in table[corrupt].items()}
    alg = AlgebraPresentation(gens, table, name=f"poincare({p + 1},{q})", check=check,
                              max_terms=max_terms, kernel_class=kernel_class)
    return Frame(alg, metric, True)


def corrupted_so(p, q, pair):
    """so(p+1, q) with the sign of one bracket flipped (Jacobi not enforced).

    ``pair`` names the two generators, e.g. ("L01", "L02").
    """
    metric = Signature(p, q).metric
    gens = [Generator(rotation_name(i, j), "L", (i, j)) for i, j in _rotation_pairs(len(metric))]
    table = rotation_brackets(metric)
    table[pair] = {z: -c for z, c in table[pair].items()}
    alg = AlgebraPresentation(gens, table, name=f"so({p + 1},{q})-corrupted", check=False)
    return Frame(alg, metric, False)


# Casimir elements

def quadratic_casimir(frame, indices=None):
    """(1/2) sum L_ij L^{ji} over the given index set (all indices by default)."""
    idx = list(range(frame.n)) if indices is None else list(indices)
    out = frame.algebra.zero()
    for a, b in itertools.combinations(idx, 2):
        x = frame.L(a, b)
        out = out + (x * x).scale(-frame.metric[a] * frame.metric[b])
    return out


def translation_square(frame):
    """P^2 = sum_k e_k P_k^2."""
    out = frame.algebra.zero()
    for k in range(frame.n):
        x = frame.P(k)
        out = out + (x * x).scale(frame.metric[k])
    return out


def spatial_casimir(frame):
    """Delta = (1/2) sum_{i,j >= 1} L_ij L^{ji}."""
    return quadratic_casimir(frame, range(1, frame.n))


def pauli_lubanski(frame):
    """W = sum P_mu P^nu L_nu rho L^rho mu - (1/2) P_rho P^rho L_mu nu L^nu mu (n = 4)."""
    if frame.n != 4 or not frame.has_translations:
        raise ConfigurationError("W is defined for the four-dimensional Poincare algebra only")
    e = frame.metric
    out = frame.algebra.zero()
    rng = range(4)
    for mu, nu, rho in itertools.product(rng, rng, rng):
        if nu == rho or rho == mu:
            continue
        term = frame.P(mu) * frame.P(nu) * frame.L(nu, rho) * frame.L(rho, mu)
        out = out + term.scale(e[nu] * e[rho] * e[mu])
    psq = translation_square(frame)
    lsq = frame.algebra.zero()
    for mu, nu in itertools.product(rng, rng):
        if mu != nu:
            lsq = lsq + (frame.L(mu, nu) * frame.L(nu, mu)).scale(e[nu] * e[mu])
    return out - (psq * lsq).scale(Fraction(1, 2))


def quartic_root(frame):
    """L_12 L_30 + L_23 L_10 + L_31 L_20 on the Lorentz indices 0..3."""
    if frame.n < 4:
        raise ConfigurationError("the quartic Lorentz invariant needs four dimensions")
    L = frame.L
    return L(1, 2) * L(3, 0) + L(2, 3) * L(1, 0) + L(3, 1) * L(2, 0)


def _levi3(i, j, k):
    if len({i, j, k}) < 3:
        return 0
    perm = [i, j, k]
    sign = 1
    for a in range(3):
        for b in range(2 - a):
            if perm[b] > perm[b + 1]:
                perm[b], perm[b + 1] = perm[b + 1], perm[b]
                sign = -sign
    return sign


def anti_de_sitter_metric():
    """Metric of so(2, 3) with the extra index 4 last: diag(1, -1, -1, -1, 1)."""
    return (1, -1, -1, -1, 1)


def so23_quadratic(frame):
    """C_2 of so(2,3): the quadratic Casimir in the five-index frame."""
    if frame.metric != anti_de_sitter_metric():
        raise ConfigurationError("C_2 of so(2,3) needs the so(2,3) frame")
    return quadratic_casimir(frame)


def so23_quartic(frame):
    """C_4 of so(2,3).

    -(L12 L34 + L23 L14 + L31 L24)^2 - (L12 L30 + L23 L10 + L31 L20)^2
    + sum_i B_i^2 with B_i = sum_jk eps_ijk ((1/2) L04 L_jk - L_0j L_4k).
    """
    if frame.metric != anti_de_sitter_metric():
        raise ConfigurationError("C_4 of so(2,3) needs the so(2,3) frame")
    L = frame.L
    lam = L(1, 2) * L(3, 4) + L(2, 3) * L(1, 4) + L(3, 1) * L(2, 4)
    rho = quartic_root(frame)
    out = -(lam * lam) - (rho * rho)
    for i in range(1, 4):
        b = frame.algebra.zero()
        for j, k in itertools.product(range(1, 4), range(1, 4)):
            s = _levi3(i, j, k)
            if s:
                b = b + (L(0, 4) * L(j, k)).scale(Fraction(s, 2)) - (L(0, j) * L(4, k)).scale(s)
        out = out + b * b
    return out


@dataclass(frozen=True)
class PrimedCasimirs:
    """Coefficients in C'_2 = s2 (C_2 + 5/2), C'_4 = -(C_4 + k (C_2/4 + 9/16)).

    ``standard()`` is the textbook-printed pair, s2 = -1 and k = -1.
    ``sign_corrected()`` is the pair the engine finds to make the
    anti-deformation identity hold, s2 = +1 and k = +1.
    """

    c2_sign: int
    c4_shift_sign: int
    label: str

    @classmethod
    def standard(cls):
        return cls(-1, -1, "standard")

    @classmethod
    def sign_corrected(cls):
        return cls(1, 1, "sign-corrected")

    def c2_prime(self, c2, one):
        return (c2 + one.scale(Fraction(5, 2))).scale(self.c2_sign)

    def c4_prime(self, c4, c2, one):
        shift = c2.scale(Fraction(1, 4)) + one.scale(Fraction(9, 16))
        return -(c4 + shift.scale(self.c4_shift_sign))


CATALOG_NAMES = ("Q2", "Psq", "Delta", "W", "Q4root", "Q4",
                 "C2so23", "C4so23", "C2prime", "C4prime")


class CasimirCatalog:
    """Named distinguished elements with their recorded centrality checks."""

    def __init__(self, elements, centrality):
        self.elements = dict(elements)
        self.centrality = dict(centrality)

    def __getitem__(self, name):
        return self.elements[name]

    def __contains__(self, name):
        return name in self.elements

    def names(self):
        return sorted(self.elements)


def build_casimirs(frame, which=None, primes=None):
    """Build the requested catalog elements for ``frame`` and check centrality.

    Lorentz-type names (Q2, Delta, Q4root, Q4) use the rotation generators on
    indices 0..n-1 (0..3 for Q4root). Psq and W need translations. The
    so(2,3) names need the so(2,3) frame.
    """
    which = tuple(which or ())
    primes = primes or PrimedCasimirs.standard()
    is_so23 = frame.metric == anti_de_sitter_metric() and not frame.has_translations
    elements = {}
    centrality = {}
    lorentz_n = frame.n
    for name in which:
        if name not in CATALOG_NAMES:
            raise KeyError(f"unknown catalog element {name!r}")
        if name == "Q2":
            lorentz = range(4) if is_so23 else range(frame.n)
            elements[name] = quadratic_casimir(frame, lorentz)
        elif name == "Psq":
            if not frame.has_translations:
                raise ConfigurationError("Psq needs a Poincare algebra")
            elements[name] = translation_square(frame)
        elif name == "Delta":
            elements[name] = spatial_casimir(frame)
        elif name == "W":
            elements[name] = pauli_lubanski(frame)
        elif name in ("Q4root", "Q4"):
            if not (lorentz_n == 4 or is_so23):
                raise ConfigurationError(f"{name} is defined in four dimensions only")
            root = quartic_root(frame)
            elements[name] = root if name == "Q4root" else root * root
        elif name in ("C2so23", "C4so23", "C2prime", "C4prime"):
            if not is_so23:
                raise ConfigurationError(f"{name} is defined on so(2,3) only")
            c2 = so23_quadratic(frame)
            one = frame.algebra.one()
            if name == "C2so23":
                elements[name] = c2
            elif name == "C2prime":
                elements[name] = primes.c2_prime(c2, one)
            else:
                c4 = so23_quartic(frame)
                elements[name] = c4 if name == "C4so23" else primes.c4_prime(c4, c2, one)
    for name, x in elements.items():
        if name in ("Psq", "W", "C2so23", "C4so23", "C2prime", "C4prime"):
            gens = range(frame.algebra.ngens)
        elif name in ("Q2",) and not is_so23:
            gens = [frame.algebra.index(rotation_name(i, j)) for i, j in _rotation_pairs(frame.n)]
        elif name == "Delta":
            gens = [frame.algebra.index(rotation_name(i, j)) for i, j in _rotation_pairs(frame.n)
                    if i >= 1]
        else:
            gens = [frame.algebra.index(rotation_name(i, j)) for i, j in _rotation_pairs(4)]
        bad = [frame.algebra.generators[g].name for g in gens
               if commutator(x, frame.algebra.gen(g))]
        centrality[name] = bad
    return CasimirCatalog(elements, centrality)


def maximal_abelian_set(frame):
    """The six mutually commuting so(2,3) elements: L12, L^2, Q2, Q4, C2, C4."""
    if frame.metric != anti_de_sitter_metric():
        raise ConfigurationError("needs the so(2,3) frame")
    L = frame.L
    lsq = L(1, 2) * L(1, 2) + L(2, 3) * L(2, 3) + L(3, 1) * L(3, 1)
    q2 = L(0, 1) * L(0, 1) + L(0, 2) * L(0, 2) + L(0, 3) * L(0, 3) - lsq
    root = quartic_root(frame)
    return {"L12": L(1, 2), "Lsq": lsq, "Q2": q2, "Q4": root * root,
            "C2": so23_quadratic(frame), "C4": so23_quartic(frame)}


__all__ = [
    "CATALOG_NAMES", "CasimirCatalog", "ConfigurationError", "Frame", "MAX_DIMENSION",
    "PresentationError", "PrimedCasimirs", "Signature", "anti_de_sitter_metric",
    "build_casimirs", "build_poincare", "build_so", "build_so_metric", "corrupted_so",
    "maximal_abelian_set", "pauli_lubanski", "poincare_brackets", "quadratic_casimir",
    "quartic_root", "rotation_brackets", "rotation_brackets_short_form", "rotation_name",
    "so23_quadratic", "so23_quartic", "spatial_casimir", "translation_name",
    "translation_square",
]
