"""Acceptance criteria 1-11.

Each test prints one line "PASS criterion N: ..." or "FAIL criterion N: ..."
and then asserts. Residual tolerances are exact zero throughout; the time
budgets are the ones pinned for each criterion.
"""

import time
from fractions import Fraction

import pytest

from lieembed.algebra import check_jacobi
from lieembed.cli import main
from lieembed.embedding import (
    build_deformed,
    build_lemma31_elements,
    verify_closure,
    verify_quartic,
    verify_theorem41,
)
from lieembed.exact.gaussian import GaussianRational
from lieembed.fundamental import verify_matrix_brackets
from lieembed.presets import PrimedCasimirs, Signature, build_poincare, build_so, pauli_lubanski
from lieembed.qdeform import (
    DEFAULT_CANDIDATE,
    build_e2_realization,
    build_tilde_generators,
    classical_limit_report,
    domain_for,
    roundtrip_report,
    verify_ysq_relation,
)
from lieembed.shell import (
    ShellRealization,
    cross_check_closure,
    cross_check_products,
    symbolic_zero_annihilates,
    verify_condition32,
    verify_lemma31_numeric,
)
from lieembed.spectra import continuous_point, discrete_point, evaluate_point, SpectrumError

SIGNATURES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]
CLOSURE_CASES = [(0, 1, 1), (0, 1, -1), (0, 2, 1), (0, 2, -1), (0, 3, 1), (0, 3, -1), (1, 2, 1)]
LEMMA_CASES = [(0, 2, -1), (0, 3, 1), (0, 3, -1), (1, 3, 1)]
TERM_GUARD = 50_000_000


def announce(capsys, number, ok, text):
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {text}")


def failed_names(rep):
    return [c.name for c in rep.failures]


def test_criterion_01_structure_constants(capsys):
    t0 = time.perf_counter()
    bad = []
    for p, q in SIGNATURES:
        bad += [f"({p},{q}) {n}" for n in failed_names(verify_matrix_brackets(Signature(p, q)))]
    dt = time.perf_counter() - t0
    ok = not bad and dt < 5
    announce(capsys, 1, ok, f"bracket table equals matrix commutators for {len(SIGNATURES)} "
             f"signatures, {len(bad)} mismatches, {dt:.2f} s (budget 5 s)")
    assert not bad
    assert dt < 5


def test_criterion_02_jacobi(capsys):
    t0 = time.perf_counter()
    algebras = [build_so(p, q).algebra for p, q in SIGNATURES]
    algebras += [build_poincare(p, q).algebra for p, q in ((0, 3), (1, 3))]
    bad = [a.name for a in algebras if not check_jacobi(a).passed]
    dt = time.perf_counter() - t0
    ok = not bad and dt < 10
    announce(capsys, 2, ok, f"Jacobi holds on {len(algebras) - len(bad)}/{len(algebras)} "
             f"presets, {dt:.2f} s (budget 10 s)")
    assert not bad
    assert dt < 10


@pytest.mark.parametrize("p,q,sign", CLOSURE_CASES)
def test_criterion_03_closure(capsys, p, q, sign):
    t0 = time.perf_counter()
    rep = verify_closure(build_deformed(p, q, sign, max_terms=TERM_GUARD))
    dt = time.perf_counter() - t0
    ok = rep.passed and dt < 300
    announce(capsys, 3, ok, f"closure sig({p},{q}) sign {sign:+d}: {len(rep.checks)} brackets, "
             f"{len(rep.failures)} nonzero residuals, {dt:.2f} s (budget 300 s)")
    assert rep.passed, failed_names(rep)
    assert dt < 300


def test_criterion_04_unique_convention(capsys, adS_images):
    ctx, images = adS_images
    t0 = time.perf_counter()
    rep, passing, residuals = verify_theorem41(ctx, PrimedCasimirs.standard(), images=images)
    dt = time.perf_counter() - t0
    ok = len(passing) == 1 and rep.passed and dt < 1800
    sizes = {str(c): [len(r) for r in rs] for c, rs in residuals.items()}
    recorded = str(passing[0]) if len(passing) == 1 else "none"
    announce(capsys, 4, ok, f"{len(passing)} of 8 conventions zero all four residuals "
             f"(recorded: {recorded}), {dt:.2f} s (budget 1800 s); residual sizes {sizes}")
    assert len(passing) == 1
    assert rep.passed


def test_criterion_05_quartic(capsys, adS_images):
    ctx, images = adS_images
    primes = PrimedCasimirs.standard()
    t0 = time.perf_counter()
    _, passing, _ = verify_theorem41(ctx, primes, images=images)
    rep = verify_quartic(ctx, primes, images=images)
    dt = time.perf_counter() - t0
    quartic = rep.check("standard/quartic")
    spin0 = rep.check("standard/spin-zero-factorization")
    ok = len(passing) == 1 and quartic.status == "pass" and spin0.status == "pass" and dt < 600
    announce(capsys, 5, ok, f"quartic residual {quartic.residual}, spin-zero factorization "
             f"{spin0.status}, recorded convention {'present' if len(passing) == 1 else 'absent'}, "
             f"{dt:.2f} s (budget 600 s)")
    assert len(passing) == 1
    assert quartic.status == "pass"
    assert spin0.status == "pass"


@pytest.mark.parametrize("p,q,sign", LEMMA_CASES)
def test_criterion_06_inverse_formula(capsys, p, q, sign):
    t0 = time.perf_counter()
    r = ShellRealization(p, q, sign, mode="exact", seed=0)
    tests = r.tests(10, degree=4)
    spinless = verify_condition32(r, tests)
    inverse = verify_lemma31_numeric(r, build_lemma31_elements(build_deformed(p, q, sign)), tests)
    dt = time.perf_counter() - t0
    ok = spinless.passed and inverse.passed and dt < 300
    announce(capsys, 6, ok, f"sig({p},{q}) sign {sign:+d}: spinless condition "
             f"{len(tests) - len(spinless.failures)}/{len(tests)}, inverse formula "
             f"{len(tests) - len(inverse.failures)}/{len(tests)} exact zeros, {dt:.2f} s "
             f"(budget 300 s)")
    assert spinless.passed, failed_names(spinless)
    assert inverse.passed, failed_names(inverse)
    assert dt < 300


def test_criterion_07_symbolic_numeric_agreement(capsys):
    t0 = time.perf_counter()
    ctx = build_deformed(0, 3, 1)
    r = ShellRealization(0, 3, 1, seed=7)
    tests = r.tests(10)
    fr = ctx.frame
    w = pauli_lubanski(fr)
    pairs = {
        "Q2,P1": (ctx.q2, fr.P(1)), "P1,Q2": (fr.P(1), ctx.q2),
        "L12,P3": (fr.L(1, 2), fr.P(3)), "L01,L13": (fr.L(0, 1), fr.L(1, 3)),
        "Psq,L02": (ctx.psq, fr.L(0, 2)), "L02,Psq": (fr.L(0, 2), ctx.psq),
        "W,L23": (w, fr.L(2, 3)), "L23,W": (fr.L(2, 3), w),
    }
    products = cross_check_products(r, pairs, tests)
    closure = cross_check_closure(r, ctx, tests)
    # controls: a wrong Y^2 rule and a noncommuting pair
    bad_ctx = build_deformed(0, 3, 1, square_scale=2)
    control_engine = not verify_closure(bad_ctx).passed
    control_shell = not cross_check_closure(r, bad_ctx, tests[:1]).passed
    a, b = fr.L(0, 1), fr.P(1)
    swap = a * b - b * a
    control_pair = not swap.is_zero() and not symbolic_zero_annihilates(r, swap, tests[:1])
    dt = time.perf_counter() - t0
    ok = (products.passed and closure.passed and control_engine and control_shell
          and control_pair and dt < 120)
    announce(capsys, 7, ok, f"{len(pairs)} product relations and {len(closure.checks)} closure "
             f"relations annihilate {len(tests)} seeded jets; controls fail in both paths: "
             f"{control_engine and control_shell and control_pair}; {dt:.2f} s (budget 120 s)")
    assert products.passed, failed_names(products)
    assert closure.passed, failed_names(closure)
    assert control_engine and control_shell and control_pair
    assert dt < 120


def test_criterion_08_q_roundtrip(capsys):
    t0 = time.perf_counter()
    bad = []
    for qv in (None, Fraction(2), Fraction(3, 2), Fraction(5)):
        rep, _, _, _ = roundtrip_report(Fraction(3, 2), 8, qv)
        bad += failed_names(rep)
    limit = classical_limit_report(Fraction(3, 2), 8)
    bad += failed_names(limit)
    dt = time.perf_counter() - t0
    ok = not bad and dt < 60
    announce(capsys, 8, ok, f"round trip at formal t and q in {{2, 3/2, 5}} plus t = 1 limit: "
             f"{len(bad)} failing checks, {dt:.2f} s (budget 60 s)")
    assert not bad
    assert dt < 60


def test_criterion_09_ysq_relation(capsys):
    t0 = time.perf_counter()
    y = Fraction(3, 2)
    e2 = build_e2_realization(y, 8, domain_for(None))
    rep = verify_ysq_relation(e2, build_tilde_generators(e2), DEFAULT_CANDIDATE)
    chk = rep.check(f"ysq-relation[{DEFAULT_CANDIDATE}]")
    dt = time.perf_counter() - t0
    ok = rep.passed and dt < 60
    announce(capsys, 9, ok, f"candidate '{DEFAULT_CANDIDATE}' is {chk.detail} on the interior, "
             f"target Y^2 - 1/4 = {y * y - Fraction(1, 4)}, {dt:.2f} s (budget 60 s)")
    assert rep.passed
    assert dt < 60


def test_criterion_10_spectra(capsys):
    t0 = time.perf_counter()
    pt = evaluate_point(continuous_point(GaussianRational(0, 2)), 0, 3, 1)
    chain = (pt.c2, pt.ysq, pt.mass_sq, pt.tachyonic) == (Fraction(-25, 4), 4, -4, True)
    rejected = 0
    for point in (continuous_point(0), discrete_point(0)):
        try:
            evaluate_point(point, 0, 3, 1)
        except SpectrumError:
            rejected += 1
    dt = time.perf_counter() - t0
    ok = chain and rejected == 2 and dt < 1
    announce(capsys, 10, ok, f"s = 2i gives C2 = {pt.c2}, Y^2 = {pt.ysq}, massSq = {pt.mass_sq}"
             f"{' (tachyonic)' if pt.tachyonic else ''}; {rejected}/2 points rejected; "
             f"{dt * 1000:.1f} ms (budget 1 s)")
    assert chain
    assert rejected == 2
    assert dt < 1


SUITE_ARGS = [
    ["verify-closure", "--p", "0", "--q", "2", "--sign", "minus", "--numeric", "--tests", "3"],
    ["verify-theorem41", "--p", "0", "--q", "3", "--primes", "sign-corrected"],
    ["verify-lemma31", "--p", "0", "--q", "3", "--sign", "plus", "--tests", "4", "--seed", "5"],
    ["verify-qdeform", "--q-value", "2"],
    ["spectra"],
]


def test_criterion_11_determinism(capsys, tmp_path):
    t0 = time.perf_counter()
    differing = []
    for i, argv in enumerate(SUITE_ARGS):
        outputs = []
        for run, cache in enumerate((None, "cache", "cache")):
            out = tmp_path / f"{i}-{run}.json"
            extra = ["--cache-dir", str(tmp_path / cache)] if cache else []
            main(argv + extra + ["--out", str(out)])
            outputs.append(out.read_bytes())
        if len(set(outputs)) != 1:
            differing.append(argv[0])
    capsys.readouterr()
    dt = time.perf_counter() - t0
    ok = not differing
    announce(capsys, 11, ok, f"{len(SUITE_ARGS) - len(differing)}/{len(SUITE_ARGS)} suites "
             f"byte-identical across a plain, a cold-cache and a warm-cache run, {dt:.2f} s")
    assert not differing
