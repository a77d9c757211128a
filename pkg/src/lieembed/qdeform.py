"""q-deformation of E(2) on Fourier modes and its exact inverse.

E(2) acts on basis vectors e_m, m in [-M, M]:
    P_1 e_m = (Y/2)(e_{m+1} + e_{m-1}),   P_2 e_m = (Y/2i)(e_{m+1} - e_{m-1}),
and L_12 is diagonal with the sign fixed by [L_12, P_1] = -P_2, [L_12, P_2] = P_1.
The deformed generators
    Lt_3i = [([-i L_21]_sqrt(q))^2, P_i] / ([2]_sqrt(q) Y) + P_i
are banded operators, and the translations are rebuilt from them with
    P_1 = D^-1 ( A(H) Lt_31 + B(H) Lt_32 ),  P_2 = D^-1 ( A(H) Lt_32 - B(H) Lt_31 ),
    A = 1 - [H]_q / (2Y [H]_sqrt(q)),  B = i [2]_sqrt(q) [H/2]_q / (2Y),
    D = -( [H]_sqrt(q)^2 - ([H]_q / [H]_sqrt(q) - 2Y)^2 ) / (4 Y^2),
where H = -2i L_21. All scalars are exact: formal in t = q^(1/4), at a
numeric q with t algebraic, or classical (t = 1).
"""

from fractions import Fraction

from .exact.gaussian import ExactDivisionError, GaussianRational
from .exact.laurent import LaurentPoly, RationalFunction, evaluate_at, q_number
from .exact.quartic import QuarticField, _rational_square_root
from .presets import ConfigurationError
from .report import VerificationReport

I = GaussianRational(0, 1)
MIN_WINDOW = 4
DEGENERATE_POLICIES = ("exclude", "error", "limit")


class DegenerateModeError(ExactDivisionError):
    """A diagonal q-function has a zero denominator at some mode."""


# scalar domains

class ScalarDomain:
    """Where the entries of banded operators live."""

    kind = "abstract"

    def const(self, c):
        raise NotImplementedError

    def qnum(self, x, base):
        raise NotImplementedError

    def zero(self):
        return self.const(0)

    def one(self):
        return self.const(1)

    def is_zero(self, x):
        return x == self.zero()

    def label(self):
        return self.kind


class FormalDomain(ScalarDomain):
    """Rational functions of the formal variable t = q^(1/4)."""

    kind = "formal"

    def const(self, c):
        if isinstance(c, RationalFunction):
            return c
        if isinstance(c, LaurentPoly):
            return RationalFunction(c)
        return RationalFunction(LaurentPoly.constant(GaussianRational.coerce(c)))

    def qnum(self, x, base):
        return RationalFunction(q_number(x, base))

    def is_zero(self, x):
        return x.is_zero()

    def label(self):
        return "formal t"


class ClassicalDomain(ScalarDomain):
    """The limit t = 1, where every q-number [x] becomes x."""

    kind = "classical"

    def const(self, c):
        return GaussianRational.coerce(c)

    def qnum(self, x, base):
        return GaussianRational(Fraction(x))

    def is_zero(self, x):
        return x.is_zero()

    def label(self):
        return "t = 1"


class RationalPointDomain(ScalarDomain):
    """Numeric q whose fourth root t is rational."""

    kind = "numeric"

    def __init__(self, q, t0):
        self.q = Fraction(q)
        self.t0 = GaussianRational(t0)

    def const(self, c):
        return GaussianRational.coerce(c)

    def qnum(self, x, base):
        return q_number(x, base).evaluate(self.t0)

    def is_zero(self, x):
        return x.is_zero()

    def label(self):
        return f"q = {self.q}"


class QuarticDomain(ScalarDomain):
    """Numeric q with t = q^(1/4) kept algebraic: Q(i)[t] / (t^4 - q)."""

    kind = "numeric"

    def __init__(self, q):
        self.q = Fraction(q)
        self.field = QuarticField(q)
        if not self.field.is_field:
            raise ConfigurationError(f"t^4 - {q} is reducible over Q(i); pick another q")

    def const(self, c):
        return self.field.coerce(c)

    def qnum(self, x, base):
        return self.field.from_laurent(q_number(x, base))

    def is_zero(self, x):
        return x == self.field.zero()

    def label(self):
        return f"q = {self.q}"


def numeric_domain(q):
    """Domain for a numeric q > 0: rational t when q is a fourth power, else Q(i)(t)."""
    q = Fraction(q)
    if q <= 0:
        raise ConfigurationError("numeric q must be positive")
    root = _rational_square_root(q)
    if root is not None:
        root4 = _rational_square_root(root)
        if root4 is not None:
            return RationalPointDomain(q, root4)
        raise ConfigurationError(
            f"q = {q} is a square but not a fourth power in Q; t^4 - q then factors over Q(i)")
    return QuarticDomain(q)


def domain_for(q_value):
    """None or 'formal' gives the formal domain, 'classical' or 1 the t = 1 domain."""
    if q_value is None or q_value == "formal":
        return FormalDomain()
    if q_value == "classical":
        return ClassicalDomain()
    return numeric_domain(q_value)


# banded operators

class BandedOperator:
    """Operator on span{e_m : |m| <= M} with finitely many shifts.

    ``entries[m][s]`` is the coefficient of e_{m+s} in the image of e_m.
    ``reach`` is the number of modes at each end of the window where the
    operator may differ from its untruncated version; ``undefined`` lists
    source modes where it is not defined at all.
    """

    def __init__(self, domain, window, entries, reach=0, undefined=frozenset()):
        self.domain = domain
        self.window = window
        clean = {}
        for m, row in entries.items():
            r = {s: v for s, v in row.items()
                 if abs(m + s) <= window and not domain.is_zero(v)}
            if r:
                clean[m] = r
        self.entries = clean
        self.reach = reach
        self.undefined = frozenset(undefined)

    @property
    def modes(self):
        return range(-self.window, self.window + 1)

    @property
    def bandwidth(self):
        return max((abs(s) for row in self.entries.values() for s in row), default=0)

    def shifts(self):
        """All shifts s carried by some entry."""
        return sorted({s for row in self.entries.values() for s in row})

    @classmethod
    def diagonal(cls, domain, window, fn, undefined=frozenset()):
        """Diagonal operator with entry fn(m); fn is not called on undefined modes."""
        entries = {m: {0: fn(m)} for m in range(-window, window + 1) if m not in undefined}
        return cls(domain, window, entries, 0, undefined)

    @classmethod
    def identity(cls, domain, window):
        return cls.diagonal(domain, window, lambda m: domain.one())

    def interior(self):
        """Source modes where the operator is exact and defined."""
        lim = self.window - self.reach
        return [m for m in range(-lim, lim + 1) if m not in self.undefined]

    def image(self, m):
        return dict(self.entries.get(m, {}))

    def _combine(self, other, sign):
        if self.window != other.window:
            raise ValueError("operators on different windows")
        out = {m: dict(r) for m, r in self.entries.items()}
        for m, row in other.entries.items():
            dst = out.setdefault(m, {})
            for s, v in row.items():
                dst[s] = dst[s] + v * sign if s in dst else v * sign
        return BandedOperator(self.domain, self.window, out, max(self.reach, other.reach),
                              self.undefined | other.undefined)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = self.domain.const(c)
        out = {m: {s: v * c for s, v in row.items()} for m, row in self.entries.items()}
        return BandedOperator(self.domain, self.window, out, self.reach, self.undefined)

    def __matmul__(self, other):
        """Composition self after other; reaches add up."""
        out = {}
        undefined = set(other.undefined)
        band = other.shifts()
        for m in other.modes:
            if m in other.undefined:
                continue
            row = other.entries.get(m, {})
            # a zero entry times an undefined value is still undefined
            if any(m + s in self.undefined for s in band):
                undefined.add(m)
                continue
            acc = {}
            for s, v in row.items():
                for r, w in self.entries.get(m + s, {}).items():
                    k = s + r
                    acc[k] = acc[k] + w * v if k in acc else w * v
            if acc:
                out[m] = acc
        reach = self.reach + max(other.reach, other.bandwidth)
        return BandedOperator(self.domain, self.window, out, reach, undefined)

    def commutator(self, other):
        return self @ other - other @ self

    def map_entries(self, fn, domain):
        out = {m: {s: fn(v) for s, v in row.items()} for m, row in self.entries.items()}
        return BandedOperator(domain, self.window, out, self.reach, self.undefined)

    def difference_on(self, other, modes):
        """Source modes among ``modes`` where the two operators differ."""
        bad = []
        zero = self.domain.zero()
        for m in modes:
            a, b = self.entries.get(m, {}), other.entries.get(m, {})
            for s in set(a) | set(b):
                if not self.domain.is_zero(a.get(s, zero) - b.get(s, zero)):
                    bad.append(m)
                    break
        return bad

    def scalar_on(self, modes):
        """The common value c if the operator is c * identity on ``modes``, else None."""
        value = None
        for m in modes:
            row = self.entries.get(m, {})
            if any(s != 0 for s in row):
                return None
            v = row.get(0, self.domain.zero())
            if value is None:
                value = v
            elif not self.domain.is_zero(v - value):
                return None
        return value


def common_interior(*ops):
    lim = min(op.window - op.reach for op in ops)
    undefined = set().union(*(op.undefined for op in ops))
    return [m for m in range(-lim, lim + 1) if m not in undefined]


# the E(2) realization

class E2Realization:
    """P_1, P_2, L_12 and H = -2i L_21 on the mode window, with recorded conventions."""

    def __init__(self, domain, window, yval, P1, P2, L12, l12_sign):
        self.domain = domain
        self.window = window
        self.yval = yval
        self.P1 = P1
        self.P2 = P2
        self.L12 = L12
        self.l12_sign = l12_sign

    def weight(self, m):
        """Eigenvalue h(m) of H = -2i L_21 = 2i L_12 on e_m."""
        return -2 * self.l12_sign * m

    def minus_i_l21(self, m):
        """Eigenvalue of -i L_21 = i L_12 on e_m."""
        return -self.l12_sign * m


def _translations(domain, window, yval):
    half = domain.const(GaussianRational(Fraction(yval) / 2))
    half_i = domain.const(GaussianRational(Fraction(yval) / 2) / I)
    modes = range(-window, window + 1)
    p1 = BandedOperator(domain, window, {m: {1: half, -1: half} for m in modes}, 1)
    p2 = BandedOperator(domain, window, {m: {1: half_i, -1: -half_i} for m in modes}, 1)
    return p1, p2


def _l12(domain, window, sign):
    return BandedOperator.diagonal(domain, window, lambda m: domain.const(I * (sign * m)))


def _e2_bracket_failures(p1, p2, l12):
    bad = []
    c1 = l12.commutator(p1) + p2
    c2 = l12.commutator(p2) - p1
    zero = BandedOperator(p1.domain, p1.window, {})
    for name, c in (("[L12,P1]+P2", c1), ("[L12,P2]-P1", c2)):
        if c.difference_on(zero, c.interior()):
            bad.append(name)
    return bad


def build_e2_realization(yval, window, domain=None):
    """E(2) on modes |m| <= window; the sign of L_12 is detected from the brackets."""
    if window < MIN_WINDOW:
        raise ConfigurationError(f"window must be at least {MIN_WINDOW}")
    yval = Fraction(yval)
    if yval <= 0:
        raise ConfigurationError("Y must be a positive rational")
    domain = domain or FormalDomain()
    p1, p2 = _translations(domain, window, yval)
    for sign in (1, -1):
        l12 = _l12(domain, window, sign)
        if not _e2_bracket_failures(p1, p2, l12):
            return E2Realization(domain, window, yval, p1, p2, l12, sign)
    raise ConfigurationError("no diagonal L_12 reproduces the E(2) brackets")


# deformation and reconstruction

def build_tilde_generators(e2):
    """(Lt_31, Lt_32) of the q-deformation, as bandwidth-1 operators."""
    dom = e2.domain
    two = dom.qnum(2, "sqrt-q")
    if dom.is_zero(two):
        raise DegenerateModeError("build_tilde_generators", "[2]_sqrt(q) vanishes")
    pref = dom.one() / (two * dom.const(e2.yval))
    F = BandedOperator.diagonal(dom, e2.window,
                                lambda m: dom.qnum(e2.minus_i_l21(m), "sqrt-q") ** 2)
    out = []
    for p in (e2.P1, e2.P2):
        out.append(F.commutator(p).scale(pref) + p)
    return tuple(out)


def q_ratio(dom, h, policy="exclude"):
    """[h]_q / [h]_sqrt(q); at h = 0 the value depends on the policy.

    The limit policy uses the closed form (t^h + t^-h) / (t + t^-1).
    """
    den = dom.qnum(h, "sqrt-q")
    if not dom.is_zero(den):
        return dom.qnum(h, "q") / den
    if policy == "limit":
        return dom.const(2) / dom.qnum(2, "sqrt-q") if h == 0 else None
    return None


def degenerate_modes(e2, policy="exclude"):
    """Modes where [H]_sqrt(q) vanishes and the policy leaves the ratio undefined."""
    out = []
    for m in e2.L12.modes:
        h = e2.weight(m)
        if q_ratio(e2.domain, h, policy) is None:
            out.append(m)
    return out


def reconstruct_translations(e2, tilde, policy="exclude", d_sign=1):
    """(P^_1, P^_2) rebuilt from the deformed generators.

    ``policy`` handles modes with [H]_sqrt(q) = 0: "exclude" marks them
    undefined, "error" raises, "limit" uses the continuous extension.
    ``d_sign`` = -1 flips the sign of D (negative control).
    """
    if policy not in DEGENERATE_POLICIES:
        raise ConfigurationError(f"policy must be one of {DEGENERATE_POLICIES}")
    dom = e2.domain
    y = dom.const(e2.yval)
    two = dom.qnum(2, "sqrt-q")
    bad = degenerate_modes(e2, policy)
    if bad and policy == "error":
        raise DegenerateModeError("reconstruct_translations",
                                  f"[H]_sqrt(q) = 0 at modes {bad} (weight 0)")
    d_bad = []

    def ratio(m):
        return q_ratio(dom, e2.weight(m), policy)

    def a_fn(m):
        return dom.one() - ratio(m) / (y * 2)

    def b_fn(m):
        return dom.const(I) * two * dom.qnum(Fraction(e2.weight(m), 2), "q") / (y * 2)

    def d_inv(m):
        h = e2.weight(m)
        hs = dom.qnum(h, "sqrt-q")
        r = ratio(m) - y * 2
        d = -(hs * hs - r * r) / (y * y * 4) * d_sign
        if dom.is_zero(d):
            d_bad.append(m)
            return dom.zero()
        return dom.one() / d

    undefined = frozenset(bad)
    A = BandedOperator.diagonal(dom, e2.window, a_fn, undefined)
    B = BandedOperator.diagonal(dom, e2.window, b_fn)
    Dinv = BandedOperator.diagonal(dom, e2.window, d_inv, undefined)
    if d_bad:
        if policy == "error":
            raise DegenerateModeError("reconstruct_translations", f"D = 0 at modes {d_bad}")
        Dinv = BandedOperator(dom, e2.window, Dinv.entries, 0, undefined | set(d_bad))
    l31, l32 = tilde
    p1 = Dinv @ (A @ l31 + B @ l32)
    p2 = Dinv @ (A @ l32 - B @ l31)
    return p1, p2


# Casimir candidates for the Y^2 relation

def _h_diag(e2, fn):
    return BandedOperator.diagonal(e2.domain, e2.window, lambda m: fn(e2.weight(m)))


def candidate_quantum(e2, tilde):
    """Lt_31^2 + Lt_32^2 + ([2]_q / 2) [H/2]_q^2 + 1/[2]_sqrt(q)^2 - 1/4.

    The q-analog used by default; its t = 1 limit is the classical candidate.
    """
    dom = e2.domain
    l31, l32 = tilde
    two_q = dom.qnum(2, "q")
    two_s = dom.qnum(2, "sqrt-q")
    diag = _h_diag(e2, lambda h: two_q / 2 * dom.qnum(Fraction(h, 2), "q") ** 2
                   + dom.one() / (two_s * two_s) - dom.const(Fraction(1, 4)))
    return l31 @ l31 + l32 @ l32 + diag


def candidate_classical(e2, tilde):
    """Lt_31^2 + Lt_32^2 + (H/2)^2, the classical so(2,1)-type Casimir form."""
    dom = e2.domain
    l31, l32 = tilde
    diag = _h_diag(e2, lambda h: dom.const(Fraction(h, 2) ** 2))
    return l31 @ l31 + l32 @ l32 + diag


def candidate_identity(e2, tilde):
    """The identity operator (negative control)."""
    return BandedOperator.identity(e2.domain, e2.window)


CANDIDATES = {
    "quantum": candidate_quantum,
    "classical": candidate_classical,
    "identity": candidate_identity,
}
DEFAULT_CANDIDATE = "quantum"


def verify_ysq_relation(e2, tilde, candidate=DEFAULT_CANDIDATE):
    """Check that the candidate Casimir equals (Y^2 - 1/4) times the identity on the interior."""
    build = CANDIDATES[candidate] if isinstance(candidate, str) else candidate
    name = candidate if isinstance(candidate, str) else getattr(candidate, "__name__", "custom")
    dom = e2.domain
    rep = VerificationReport("qdeform-ysq", {"Y": str(e2.yval), "window": e2.window,
                                             "q": dom.label(), "candidate": name})
    cas = build(e2, tilde)
    modes = cas.interior()
    target = dom.const(e2.yval ** 2 - Fraction(1, 4))
    value = cas.scalar_on(modes)
    ok = value is not None and dom.is_zero(value - target)
    if value is None:
        detail = "not a multiple of the identity on the interior"
    else:
        detail = f"scalar {value}"
    rep.add(f"ysq-relation[{name}]", ok, "0" if ok else "nonzero", detail=detail)
    rep.note("interior-modes", [modes[0], modes[-1]] if modes else [])
    return rep


# checks

def verify_e2_relations(p1, p2, l12, label="original"):
    rep = VerificationReport("qdeform-e2", {"operators": label})
    zero = BandedOperator(p1.domain, p1.window, {})
    checks = {
        "[P1,P2]": p1.commutator(p2),
        "[L12,P1]+P2": l12.commutator(p1) + p2,
        "[L12,P2]-P1": l12.commutator(p2) - p1,
    }
    for name, op in checks.items():
        modes = op.interior()
        bad = op.difference_on(zero, modes)
        rep.add(f"e2-{label}{name}", not bad, f"{len(bad)} modes",
                detail=f"nonzero at modes {bad}" if bad else "")
    return rep


def ladder_relations_report(e2, tilde):
    """Relations of E+- = Lt_31 +- i Lt_32 and H on the interior window.

    Checks [H, E+-] = -+2 E+- and [E+, E-] = -[H]_q. Which algebra the
    deformed generators realize is measured here, not assumed.
    """
    dom = e2.domain
    l31, l32 = tilde
    ep = l31 + l32.scale(I)
    em = l31 - l32.scale(I)
    h = _h_diag(e2, dom.const)
    hq = _h_diag(e2, lambda w: dom.qnum(w, "q"))
    rep = VerificationReport("qdeform-ladder", {"Y": str(e2.yval), "window": e2.window,
                                                "q": dom.label()})
    zero = BandedOperator(dom, e2.window, {})
    checks = {
        "[H,E+]+2E+": h.commutator(ep) + ep.scale(2),
        "[H,E-]-2E-": h.commutator(em) - em.scale(2),
        "[E+,E-]+[H]_q": ep.commutator(em) + hq,
    }
    for name, op in checks.items():
        bad = op.difference_on(zero, op.interior())
        rep.add(f"ladder{name}", not bad, f"{len(bad)} modes",
                detail=f"nonzero at modes {bad}" if bad else "")
    rep.note("ladder-shifts", {"E+": ep.shifts(), "E-": em.shifts()})
    return rep


def roundtrip_report(yval=Fraction(3, 2), window=8, q_value=None, policy="exclude", d_sign=1):
    """Full round trip for one scalar domain: deform, reconstruct, compare."""
    dom = domain_for(q_value)
    e2 = build_e2_realization(yval, window, dom)
    tilde = build_tilde_generators(e2)
    tag = dom.label()
    rep = VerificationReport("qdeform-roundtrip", {"Y": str(Fraction(yval)), "window": window,
                                                   "q": tag, "policy": policy})
    rep.note(f"{tag}/l12-sign", e2.l12_sign)
    rep.note(f"{tag}/tilde-bandwidth", [t.bandwidth for t in tilde])
    p1h, p2h = reconstruct_translations(e2, tilde, policy, d_sign)
    for name, got, want in (("P1", p1h, e2.P1), ("P2", p2h, e2.P2)):
        modes = common_interior(got, want)
        bad = got.difference_on(want, modes)
        rep.add(f"{tag}/roundtrip[{name}]", not bad and bool(modes), f"{len(bad)} modes",
                detail=f"differs at modes {bad}" if bad else f"modes {modes[0]}..{modes[-1]}")
    rep.note(f"{tag}/excluded-modes", sorted(p1h.undefined | p2h.undefined))
    rep.extend(verify_e2_relations(p1h, p2h, e2.L12, "reconstructed"), prefix=f"{tag}/")
    return rep, e2, tilde, (p1h, p2h)


def classical_limit_report(yval=Fraction(3, 2), window=8, policy="exclude"):
    """Formal operators evaluated at t = 1 must equal the classical ones entry by entry."""
    formal = build_e2_realization(yval, window, FormalDomain())
    classical = build_e2_realization(yval, window, ClassicalDomain())
    rep = VerificationReport("qdeform-classical-limit", {"Y": str(Fraction(yval)),
                                                         "window": window})
    ft = build_tilde_generators(formal)
    ct = build_tilde_generators(classical)
    fp = reconstruct_translations(formal, ft, policy)
    cp = reconstruct_translations(classical, ct, policy)
    cdom = classical.domain

    def at_one(op):
        return op.map_entries(lambda v: evaluate_at(v, 1), cdom)

    pairs = [("Lt31", ft[0], ct[0]), ("Lt32", ft[1], ct[1]),
             ("P^1", fp[0], cp[0]), ("P^2", fp[1], cp[1])]
    for name, f_op, c_op in pairs:
        ev = at_one(f_op)
        modes = common_interior(f_op, c_op)
        bad = ev.difference_on(c_op, modes)
        rep.add(f"classical-limit[{name}]", not bad, f"{len(bad)} modes",
                detail=f"differs at modes {bad}" if bad else "")
    # the classical deformed generators carry the (1/2Y)[(-i L_21)^2, P_i] + P_i form
    y = Fraction(yval)
    sq = BandedOperator.diagonal(cdom, window, lambda m: cdom.const(classical.minus_i_l21(m) ** 2))
    for idx, p in enumerate((classical.P1, classical.P2)):
        direct = sq.commutator(p).scale(GaussianRational(1 / (2 * y))) + p
        bad = direct.difference_on(ct[idx], common_interior(direct, ct[idx]))
        rep.add(f"classical-form[Lt3{idx + 1}]", not bad, f"{len(bad)} modes")
    return rep


__all__ = [
    "CANDIDATES", "DEFAULT_CANDIDATE", "DEGENERATE_POLICIES", "BandedOperator",
    "ClassicalDomain", "DegenerateModeError", "E2Realization", "FormalDomain", "QuarticDomain",
    "RationalPointDomain", "build_e2_realization", "build_tilde_generators",
    "classical_limit_report", "common_interior", "degenerate_modes", "domain_for",
    "ladder_relations_report", "numeric_domain", "q_ratio", "reconstruct_translations", "roundtrip_report",
    "verify_e2_relations", "verify_ysq_relation",
]
