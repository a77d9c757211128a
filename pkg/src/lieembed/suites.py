"""Suite configuration and dispatch.

Every suite is a pure function of its SuiteConfig and returns one
VerificationReport. Only settings that can change results are echoed in
the report, so runs with and without the cache give identical bytes.
"""

from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction

from .algebra import DEFAULT_MAX_TERMS, check_jacobi
from .algebra.kernel import set_default_kernel
from .cache import PolynomialCache
from .embedding import (
    AntiDeSitterImages,
    Convention,
    build_deformed,
    build_lemma31_elements,
    casimir_residual_report,
    verify_closure,
    verify_quartic,
    verify_theorem41,
)
from .fundamental import casimir_matrix, verify_matrix_brackets, verify_membership
from .presets import ConfigurationError, PrimedCasimirs, Signature, build_poincare, build_so
from .qdeform import (
    CANDIDATES,
    DEGENERATE_POLICIES,
    classical_limit_report,
    ladder_relations_report,
    numeric_domain,
    roundtrip_report,
    verify_ysq_relation,
)
from .report import VerificationReport
from .spectra import parse_point, spectra_report, worked_chain_report

SUITES = ("closure", "theorem41", "quartic", "lemma31-numeric", "qdeform-roundtrip",
          "fundamental", "spectra")
PRIMES = {"standard": PrimedCasimirs.standard, "sign-corrected": PrimedCasimirs.sign_corrected}


@dataclass
class SuiteConfig:
    suite: str = "closure"
    p: int = 0
    q: int = 1
    sign: int = 1
    window: int = 8
    jet_order: int = 6
    q_values: list = field(default_factory=list)
    seed: int = 0
    max_terms: int = DEFAULT_MAX_TERMS
    convention: str = "auto"
    primes: str = "standard"
    y_value: str = "3/2"
    tests: int = 10
    mode: str = "exact"
    candidate: str = "quantum"
    policy: str = "exclude"
    points: list = field(default_factory=list)
    numeric: bool = False
    kernel: str = "auto"
    cache_dir: str = None
    timings: bool = False
    out: str = None

    # settings that never change report content
    NON_SEMANTIC = ("cache_dir", "timings", "out", "kernel")

    def validate(self):
        if self.suite not in SUITES:
            raise ConfigurationError(f"unknown suite {self.suite!r}")
        if self.sign not in (1, -1):
            raise ConfigurationError("sign must be +1 or -1")
        for name in ("window", "jet_order", "tests", "max_terms"):
            if getattr(self, name) <= 0:
                raise ConfigurationError(f"{name} must be positive")
        if self.primes not in PRIMES:
            raise ConfigurationError(f"primes must be one of {sorted(PRIMES)}")
        if self.mode not in ("exact", "float"):
            raise ConfigurationError("mode must be exact or float")
        if self.candidate not in CANDIDATES:
            raise ConfigurationError(f"candidate must be one of {sorted(CANDIDATES)}")
        if self.policy not in DEGENERATE_POLICIES:
            raise ConfigurationError(f"policy must be one of {DEGENERATE_POLICIES}")
        if Fraction(self.y_value) <= 0:
            raise ConfigurationError("Y value must be positive")
        if self.convention != "auto":
            try:
                Convention.parse(self.convention)
            except ValueError as exc:
                raise ConfigurationError(str(exc)) from exc
        for qv in self.q_values:
            numeric_domain(Fraction(qv))
        if self.suite != "qdeform-roundtrip" and self.suite != "spectra":
            Signature(self.p, self.q)
        return self

    def echo(self):
        out = {}
        for f in fields(self):
            if f.name in self.NON_SEMANTIC:
                continue
            v = getattr(self, f.name)
            out[f.name] = [str(x) for x in v] if isinstance(v, list) else v
        return out

    def as_dict(self):
        return asdict(self)


def _cache(cfg):
    return PolynomialCache(cfg.cache_dir) if cfg.cache_dir else None


def _primes(cfg):
    return PRIMES[cfg.primes]()


def run_closure(cfg):
    ctx = build_deformed(cfg.p, cfg.q, cfg.sign, max_terms=cfg.max_terms)
    rep = verify_closure(ctx, timings=cfg.timings)
    rep.extend(casimir_residual_report(ctx), prefix="")
    if cfg.numeric:
        from .shell import ShellRealization, cross_check_closure
        r = ShellRealization(cfg.p, cfg.q, cfg.sign, Fraction(cfg.y_value), cfg.jet_order,
                             cfg.mode, seed=cfg.seed)
        rep.extend(cross_check_closure(r, ctx, r.tests(cfg.tests)), prefix="numeric/")
    return rep


def _adS_context(cfg):
    if (cfg.p, cfg.q, cfg.sign) != (0, 3, 1):
        raise ConfigurationError("this suite is defined for p=0, q=3, sign plus only")
    ctx = build_deformed(0, 3, 1, max_terms=cfg.max_terms)
    return ctx, AntiDeSitterImages(ctx, _cache(cfg))


def run_theorem41(cfg):
    ctx, images = _adS_context(cfg)
    conv = None if cfg.convention == "auto" else Convention.parse(cfg.convention)
    rep, passing, _ = verify_theorem41(ctx, _primes(cfg), conv, images=images)
    return rep


def run_quartic(cfg):
    ctx, images = _adS_context(cfg)
    primes = _primes(cfg)
    conv = None if cfg.convention == "auto" else Convention.parse(cfg.convention)
    t41, passing, _ = verify_theorem41(ctx, primes, conv, images=images)
    rep = verify_quartic(ctx, primes, images=images)
    recorded = t41.findings.get(f"{primes.label}/recorded-convention", "none")
    rep.note("convention", recorded)
    return rep


def run_lemma31(cfg):
    from .shell import (ShellRealization, measure_tilde_condition, verify_condition32,
                        verify_lemma31_numeric)
    r = ShellRealization(cfg.p, cfg.q, cfg.sign, Fraction(cfg.y_value), cfg.jet_order, cfg.mode,
                         seed=cfg.seed)
    tests = r.tests(cfg.tests)
    ctx = build_deformed(cfg.p, cfg.q, cfg.sign, max_terms=cfg.max_terms)
    rep = VerificationReport("lemma31-numeric", r.config())
    rep.extend(verify_condition32(r, tests))
    rep.extend(verify_lemma31_numeric(r, build_lemma31_elements(ctx), tests))
    rep.note("tilde-condition", measure_tilde_condition(r, tests))
    return rep


def run_qdeform(cfg):
    y = Fraction(cfg.y_value)
    values = [None] + [Fraction(v) for v in cfg.q_values] if cfg.q_values else [None]
    rep = VerificationReport("qdeform-roundtrip", {"Y": str(y), "window": cfg.window})
    for qv in values:
        rt, e2, tilde, _ = roundtrip_report(y, cfg.window, qv, cfg.policy)
        rep.extend(rt)
        rep.extend(verify_ysq_relation(e2, tilde, cfg.candidate), prefix=f"{e2.domain.label()}/")
        rep.extend(ladder_relations_report(e2, tilde), prefix=f"{e2.domain.label()}/")
    rep.extend(classical_limit_report(y, cfg.window, cfg.policy))
    return rep


def run_fundamental(cfg):
    sig = Signature(cfg.p, cfg.q)
    rep = verify_matrix_brackets(sig)
    rep.extend(verify_membership(sig))
    _, value = casimir_matrix(sig)
    rep.add("casimir-scalar", value is not None, "0", detail=f"Q2 = {value}")
    rep.extend(check_jacobi(build_so(cfg.p, cfg.q).algebra), prefix="so/")
    rep.extend(check_jacobi(build_poincare(cfg.p, cfg.q).algebra), prefix="poincare/")
    return rep


def run_spectra(cfg):
    if not cfg.points:
        return worked_chain_report()
    return spectra_report(cfg.p, cfg.q, cfg.sign, [parse_point(s) for s in cfg.points])


RUNNERS = {
    "closure": run_closure,
    "theorem41": run_theorem41,
    "quartic": run_quartic,
    "lemma31-numeric": run_lemma31,
    "qdeform-roundtrip": run_qdeform,
    "fundamental": run_fundamental,
    "spectra": run_spectra,
}


def run_suite(cfg):
    """Validate, run and return the report with the config echoed and the seed recorded."""
    cfg.validate()
    set_default_kernel(cfg.kernel)
    rep = RUNNERS[cfg.suite](cfg)
    rep.suite = cfg.suite
    rep.config = cfg.echo()
    return rep


__all__ = ["RUNNERS", "SUITES", "SuiteConfig", "run_suite"]
