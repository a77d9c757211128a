"""Spinless Poincare representation on functions of the spatial momenta.

P_k acts by multiplication with p_k, where p_0 is the root of the shell
relation p^2 = sign * Y^2, and L_ij acts as the orbital first-order
differential operator
    L_ij f = s * sum_{k>=1} (-g_jk p_i + g_ik p_j) d f / d p_k.
The overall sign s is chosen at build time as the one that reproduces
[L_ij, P_k] = -g_jk P_i + g_ik P_j on a test jet.

Everything is evaluated on truncated jets, exactly by default.
"""

import itertools
import random
from fractions import Fraction

from ..embedding import InverseFormulaElements
from ..exact.gaussian import GaussianRational
from ..presets import ConfigurationError, Signature, rotation_name, translation_name
from ..report import VerificationReport
from .jet import EXACT, ComplexJet, FloatField, Jet, JetOrderError

I = GaussianRational(0, 1)
DEFAULT_ORDER = 6
DEFAULT_TESTS = 10
MAX_NUMERATOR = 7
MAX_DENOMINATOR = 4


def _random_fraction(rng, lo=1):
    return Fraction(rng.randint(lo, MAX_NUMERATOR), rng.randint(1, MAX_DENOMINATOR))


class ShellPoint:
    """Coordinate jets p_0..p_{n-1} at one base point of the shell."""

    def __init__(self, realization, base):
        r = realization
        self.base = tuple(Fraction(b) for b in base)
        self.order = r.order
        f = r.field
        self.coords = [None] + [Jet.coordinate(f, self.base, r.order, k)
                                for k in range(len(self.base))]
        e = r.sig.metric
        c = Jet.constant(f, self.base, r.order, r.sign * r.yval ** 2)
        for k in range(1, r.sig.n):
            c = c - (self.coords[k] * self.coords[k]).scale(e[k])
        self.coords[0] = c.sqrt()


class ShellRealization:
    """Orbital realization of the Poincare algebra on a momentum shell.

    ``spin_term`` adds a constant to the action of L_12 (or L_01 in two
    dimensions); any nonzero value is a deliberately corrupted realization
    used for negative controls.
    """

    def __init__(self, p, q, sign, yval=Fraction(3, 2), order=DEFAULT_ORDER, mode="exact",
                 orbital_sign=None, spin_term=0, seed=0):
        if sign not in (1, -1):
            raise ConfigurationError("sign must be +1 or -1")
        self.sig = Signature(p, q)
        self.sign = sign
        self.yval = Fraction(yval)
        if self.yval <= 0:
            raise ConfigurationError("Y must be a positive rational")
        self.order = order
        self.field = EXACT if mode == "exact" else FloatField()
        self.mode = mode
        self.seed = seed
        self.spin_term = Fraction(spin_term)
        self._points = {}
        if orbital_sign is None:
            orbital_sign = self._detect_orbital_sign()
        self.orbital_sign = orbital_sign

    @property
    def n(self):
        return self.sig.n

    def g(self, i, j):
        return self.sig.metric[i] if i == j else 0

    # base points and tests

    def point(self, base):
        base = tuple(Fraction(b) for b in base)
        if base not in self._points:
            self._points[base] = ShellPoint(self, base)
        return self._points[base]

    def base_points(self, count, seed=None):
        """Rational points on the shell, drawn from a seeded generator.

        One negative-metric coordinate a is solved for on a line: with
        c = sign Y^2 - sum_{k != 0, a} e_k p_k^2 we need p_0^2 - p_a^2 = c,
        which p_0 = (u + c/u)/2, p_a = (c/u - u)/2 solves for any u > 0.
        For c < 0 the roles are swapped. On the tachyonic shell the points
        keep |p| >= 2Y so the square root stays away from its branch point.
        """
        rng = random.Random(self.seed if seed is None else seed)
        e = self.sig.metric
        a = next(k for k in range(1, self.n) if e[k] == -1)
        out = []
        while len(out) < count:
            p = [Fraction(0)] * self.n
            for k in range(1, self.n):
                if k != a:
                    p[k] = _random_fraction(rng) * rng.choice((1, -1))
            c = self.sign * self.yval ** 2 - sum(e[k] * p[k] ** 2 for k in range(1, self.n)
                                                 if k != a)
            if c == 0:
                continue
            u = _random_fraction(rng)
            if c > 0:
                p0, pa = (u + c / u) / 2, (c / u - u) / 2
            else:
                if u * u >= -c:
                    continue
                pa, p0 = (u - c / u) / 2, (-c / u - u) / 2
            p[a] = pa
            if p0 <= 0:
                continue
            spatial = sum(x * x for x in p[1:])
            if self.sign < 0 and spatial < 4 * self.yval ** 2:
                continue
            out.append(tuple(p[1:]))
        return out

    def random_test(self, rng, base, degree=4):
        """A random real polynomial of total degree <= degree, as a jet at ``base``."""
        d = self.n - 1
        poly = {}
        for e in itertools.product(range(degree + 1), repeat=d):
            if sum(e) <= degree and rng.random() < 0.35:
                poly[e] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        if not poly:
            poly[(0,) * d] = Fraction(1)
        poly[tuple([degree] + [0] * (d - 1))] = Fraction(1)
        return ComplexJet(Jet.from_polynomial(self.field, base, self.order, poly))

    def tests(self, count=DEFAULT_TESTS, seed=None, degree=4):
        """Seeded (base point, test jet) pairs."""
        seed = self.seed if seed is None else seed
        rng = random.Random(f"tests:{seed}")
        points = self.base_points(count, seed)
        return [self.random_test(rng, b, degree) for b in points]

    # operators

    def coords(self, f):
        return self.point(f.re.base).coords

    def P(self, k, f):
        return f.times_real(self.coords(f)[k])

    def L(self, i, j, f, sign=None):
        if i == j:
            return f.scale_real(0)
        s = self.orbital_sign if sign is None else sign
        p = self.coords(f)
        out = None
        for k in range(1, self.n):
            coef = None
            if self.g(j, k):
                coef = p[i].scale(-self.g(j, k))
            if self.g(i, k):
                term = p[j].scale(self.g(i, k))
                coef = term if coef is None else coef + term
            if coef is None:
                continue
            d = f.map(lambda jet: jet.derivative(k - 1))
            piece = d.times_real(coef)
            out = piece if out is None else out + piece
        out = out.scale_real(s)
        if self.spin_term and self._spin_pair() in ((i, j), (j, i)):
            extra = f.scale_real(self.spin_term if (i, j) == self._spin_pair() else -self.spin_term)
            out = out + extra
        return out

    def _spin_pair(self):
        return (1, 2) if self.n > 2 else (0, 1)

    def Q2(self, f, indices=None):
        idx = range(self.n) if indices is None else indices
        e = self.sig.metric
        out = None
        for a, b in itertools.combinations(idx, 2):
            t = self.L(a, b, self.L(a, b, f)).scale_real(-e[a] * e[b])
            out = t if out is None else out + t
        return out if out is not None else f.scale_real(0)

    def Delta(self, f):
        return self.Q2(f, range(1, self.n))

    def M(self, i, f, yval=None):
        """Cleared deformed generator M_i = i [Q_2, P_i] + 2 Y P_i."""
        y = self.yval if yval is None else yval
        pf = self.P(i, f)
        comm = self.Q2(pf) - self.P(i, self.Q2(f))
        return comm.scale(I) + pf.scale_real(2 * y)

    def M_all(self, f, yval=None):
        """[M_0 f, ..., M_{n-1} f], sharing the Q_2 f evaluation."""
        y = self.yval if yval is None else yval
        q2f = self.Q2(f)
        out = []
        for i in range(self.n):
            pf = self.P(i, f)
            comm = self.Q2(pf) - self.P(i, q2f)
            out.append(comm.scale(I) + pf.scale_real(2 * y))
        return out

    def _detect_orbital_sign(self):
        """Pick the orbital sign for which [L_ij, P_k] matches the Poincare brackets."""
        point = self.base_points(1, seed=f"orbital:{self.seed}")[0]
        rng = random.Random(f"orbital-test:{self.seed}")
        saved = self.spin_term
        self.spin_term = Fraction(0)
        try:
            f = self.random_test(rng, point, degree=3)
            for s in (1, -1):
                self.orbital_sign = s
                if all(self._bracket_lp_residual(i, j, k, f).is_zero()
                       for i, j in itertools.combinations(range(self.n), 2)
                       for k in range(self.n)):
                    return s
        finally:
            self.spin_term = saved
        raise ConfigurationError("neither orbital sign reproduces the Poincare brackets")

    def _bracket_lp_residual(self, i, j, k, f):
        lhs = self.L(i, j, self.P(k, f)) - self.P(k, self.L(i, j, f))
        rhs = self.P(i, f).scale_real(-self.g(j, k)) + self.P(j, f).scale_real(self.g(i, k))
        return lhs - rhs

    # action of engine polynomials

    def _generator_action(self, gen):
        if gen.kind == "P":
            k = gen.indices[0]
            return lambda f: self.P(k, f)
        if gen.kind == "L":
            i, j = gen.indices
            return lambda f: self.L(i, j, f)
        raise ConfigurationError(f"generator {gen.name} has no operator in this realization")

    def apply_polynomial(self, poly, f, y_value=None):
        """Left action of an engine polynomial on a complex jet.

        Generators of kind Y act as the scalar Y (``y_value`` overrides it);
        words are applied right to left with a memo on shared suffixes.
        """
        alg = poly.algebra
        y = self.yval if y_value is None else Fraction(y_value)
        gens = alg.generators
        actions = {}
        memo = {(): f}
        total = None
        for mono, coeff in poly.sorted_items():
            word = []
            scalar = Fraction(1)
            for idx, e in enumerate(mono):
                if not e:
                    continue
                if gens[idx].kind == "Y":
                    scalar *= y ** e
                else:
                    word.extend([idx] * e)
            depth = sum(1 for idx in word if gens[idx].kind == "L")
            if depth > f.order:
                raise JetOrderError(f"insufficient jet order: the word {alg.format_monomial(mono)} "
                                    f"needs order >= {depth}, jets carry {f.order}")
            word = tuple(word)
            for start in range(len(word) - 1, -1, -1):
                suffix = word[start:]
                if suffix not in memo:
                    g = word[start]
                    if g not in actions:
                        actions[g] = self._generator_action(gens[g])
                    memo[suffix] = actions[g](memo[word[start + 1:]])
            term = memo[word].scale_real(scalar).scale(coeff)
            total = term if total is None else total + term
        return total if total is not None else f.scale_real(0)

    def apply_word(self, word, f, y_value=None):
        """Action of a single engine word (an NCPolynomial) on a jet."""
        return self.apply_polynomial(word, f, y_value)

    def label(self):
        return f"sig{self.sig} sign {'+' if self.sign > 0 else '-'} Y={self.yval}"

    def config(self):
        return {"p": self.sig.p, "q": self.sig.q, "sign": self.sign, "Y": str(self.yval),
                "jet_order": self.order, "mode": self.mode, "seed": self.seed,
                "spin_term": str(self.spin_term)}


def _residual_text(res):
    return "0" if res.is_zero() and res.size() == 0 else f"max |coeff| = {float(res.max_abs()):.3e}"


def _scale_of(*jets):
    return max(float(j.max_abs()) for j in jets)


def condition32_residual(r, f):
    """(P_0 Delta - sum_{i,j>=1} P_j L_0i L^ij) f."""
    e = r.sig.metric
    out = r.P(0, r.Delta(f))
    for i, j in itertools.product(range(1, r.n), range(1, r.n)):
        if i == j:
            continue
        out = out - r.P(j, r.L(0, i, r.L(i, j, f).scale_real(e[i] * e[j])))
    return out


def tilde_condition_residual(r, f):
    """Cleared tilde condition: (M_0 Delta - sum_{i,j>=1} M_j L_0i L^ij) f.

    This is the same condition with the deformed generators 2Y L_{n,i}
    in place of the translations.
    """
    e = r.sig.metric
    out = r.M(0, r.Delta(f))
    for i, j in itertools.product(range(1, r.n), range(1, r.n)):
        if i == j:
            continue
        out = out - r.M(j, r.L(0, i, r.L(i, j, f).scale_real(e[i] * e[j])))
    return out


def verify_condition32(r, tests=None):
    """Spinless condition P_0 Delta = sum P_j L_0i L^ij on every test jet."""
    tests = tests if tests is not None else r.tests()
    rep = VerificationReport("condition-spinless", r.config())
    for t, f in enumerate(tests):
        res = condition32_residual(r, f)
        ok = res.is_zero(_scale_of(f.re))
        rep.add(f"spinless-condition[test={t:02d}]", ok, _residual_text(res))
    rep.note("orbital-sign", r.orbital_sign)
    rep.note("base-points", [[str(x) for x in f.re.base] for f in tests])
    return rep


def measure_tilde_condition(r, tests=None):
    """Record whether the tilde condition holds in this realization (a finding, not a check)."""
    tests = tests if tests is not None else r.tests()
    zeros = 0
    for f in tests:
        if tilde_condition_residual(r, f).is_zero(_scale_of(f.re)):
            zeros += 1
    return {"tests": len(tests), "vanishing": zeros,
            "holds": zeros == len(tests)}


def verify_lemma31_numeric(r, elements, tests=None, label=None):
    """Apply 2Y D P_0 - A0L (cleared) to every test jet; all results must vanish."""
    if not isinstance(elements, InverseFormulaElements):
        raise TypeError("expected the elements built by build_lemma31_elements")
    tests = tests if tests is not None else r.tests()
    cfg = r.config()
    cfg["n_used"] = elements.n_used
    rep = VerificationReport("lemma31-numeric", cfg)
    residual = elements.residual()
    rep.note("residual-polynomial-terms", len(residual))
    tag = label or "inverse-formula"
    for t, f in enumerate(tests):
        res = r.apply_polynomial(residual, f)
        ok = res.is_zero(_scale_of(f.re))
        rep.add(f"{tag}[test={t:02d}]", ok, _residual_text(res))
    rep.note("orbital-sign", r.orbital_sign)
    return rep


def closure_residuals(r, ctx, f):
    """Jet residuals of the cleared deformed brackets, composed as operators.

    The context supplies g_nn = sign and its Y^2 rule; on the realization
    its Y^2 evaluates to square_scale * Y^2.
    """
    n = r.n
    gnn = ctx.sign
    ysq_ctx = Fraction(ctx.square_scale) * r.yval ** 2
    out = {}
    pairs = list(itertools.combinations(range(n), 2))
    mf = r.M_all(f)
    mmf = [r.M_all(mf[j]) for j in range(n)]
    lf = {(i, j): r.L(i, j, f) for i, j in pairs}
    for i, j in pairs:
        lhs = mmf[j][i] - mmf[i][j]
        out[f"closure-deformed[{i},{j}]"] = lhs - lf[(i, j)].scale_real(4 * gnn * ysq_ctx)
    for i, j in pairs:
        mlf = r.M_all(lf[(i, j)])
        for k in range(n):
            lhs = r.L(i, j, mf[k]) - mlf[k]
            res = lhs + mf[i].scale_real(r.g(j, k)) - mf[j].scale_real(r.g(i, k))
            out[f"closure-rotation[{rotation_name(i, j)},{k}]"] = res
    return out


def cross_check_closure(r, ctx, tests=None):
    """Numeric replica of the symbolic closure check on the shell."""
    if ctx.sig != r.sig:
        raise ConfigurationError("realization and context have different signatures")
    tests = tests if tests is not None else r.tests()
    rep = VerificationReport("closure-numeric", dict(r.config(), ctx_sign=ctx.sign,
                                                     square_scale=str(ctx.square_scale)))
    worst = {}
    for f in tests:
        scale = _scale_of(f.re)
        for name, res in closure_residuals(r, ctx, f).items():
            ok = res.is_zero(scale)
            prev = worst.get(name)
            if prev is None or (prev[0] and not ok):
                worst[name] = (ok, _residual_text(res))
    for name, (ok, text) in worst.items():
        rep.add(name, ok, text)
    rep.note("tests", len(tests))
    return rep


def product_residual(r, a, b, f):
    """(a o b - NO(a b)) f: operator composition against the engine product.

    The difference is zero in the engine by construction, so a nonzero
    jet means the bracket table and the realization disagree.
    """
    return r.apply_polynomial(a, r.apply_polynomial(b, f)) - r.apply_polynomial(a * b, f)


def cross_check_products(r, pairs, tests=None):
    """product_residual for every named (a, b) pair on every test jet."""
    tests = tests if tests is not None else r.tests()
    rep = VerificationReport("products-numeric", r.config())
    for name, (a, b) in pairs.items():
        worst = None
        for f in tests:
            res = product_residual(r, a, b, f)
            if not res.is_zero(_scale_of(f.re)):
                worst = res
                break
        rep.add(f"product[{name}]", worst is None,
                "0" if worst is None else _residual_text(worst))
    rep.note("tests", len(tests))
    return rep


def symbolic_zero_annihilates(r, poly, tests=None):
    """True when the engine polynomial acts as zero on every test jet."""
    tests = tests if tests is not None else r.tests()
    return all(r.apply_polynomial(poly, f).is_zero(_scale_of(f.re)) for f in tests)


__all__ = ["DEFAULT_ORDER", "DEFAULT_TESTS", "ShellPoint", "ShellRealization",
           "closure_residuals", "condition32_residual", "cross_check_closure",
           "cross_check_products", "product_residual",
           "measure_tilde_condition", "symbolic_zero_annihilates", "tilde_condition_residual",
           "translation_name", "verify_condition32", "verify_lemma31_numeric"]
