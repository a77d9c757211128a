import pytest

from lieembed.algebra import commutator
from lieembed.embedding import (
    ALL_CONVENTIONS,
    Convention,
    build_deformed,
    casimir_residual_report,
    derived_quartic_residual,
    verify_closure,
    verify_quartic,
    verify_theorem41,
)
from lieembed.exact.gaussian import I
from lieembed.presets import ConfigurationError, PrimedCasimirs

CLOSURE_CASES = [(0, 1, 1), (0, 1, -1), (0, 2, 1), (0, 2, -1), (0, 3, 1), (0, 3, -1), (1, 2, 1)]


@pytest.mark.parametrize("p,q,sign", CLOSURE_CASES)
def test_deformed_closure(p, q, sign):
    rep = verify_closure(build_deformed(p, q, sign))
    assert rep.passed, rep.summary_lines()
    assert rep.findings["closure-without-representation-condition"]


@pytest.mark.parametrize("scale", [2, -1])
def test_wrong_square_breaks_closure(scale):
    rep = verify_closure(build_deformed(0, 2, 1, square_scale=scale))
    assert not rep.passed


def test_y_is_central():
    ctx = build_deformed(0, 3, -1)
    for g in ctx.algebra.generators:
        assert commutator(ctx.y, ctx.algebra.gen(g.name)).is_zero()
    assert ctx.y * ctx.y == ctx.psq.scale(-1)


def test_deformed_generator_is_cleared_translation_commutator():
    ctx = build_deformed(0, 2, 1)
    # M_i = i [Q2, P_i] + 2 Y P_i
    for i in range(ctx.n):
        p_i = ctx.frame.P(i)
        expect = commutator(ctx.q2, p_i).scale(I) + ctx.y * p_i * 2
        assert ctx.deformed[i] == expect


@pytest.mark.parametrize("sign", [1, -1])
def test_casimir_residual_is_minus_four_w(sign):
    rep = casimir_residual_report(build_deformed(0, 3, sign))
    assert rep.passed
    chk = rep.check("casimir-residual-in-center-span")
    assert chk.detail == ("(-4)*W" if sign == 1 else "(4)*W")


@pytest.mark.parametrize("sign", [1, -1])
def test_casimir_residual_vanishes_in_two_dimensions(sign):
    rep = casimir_residual_report(build_deformed(0, 1, sign))
    assert rep.check("casimir-residual-vanishes-in-two-dimensions").status == "pass"


def test_convention_parse_roundtrip():
    assert len(ALL_CONVENTIONS) == 8
    for conv in ALL_CONVENTIONS:
        assert Convention.parse(str(conv)) == conv
    with pytest.raises(ValueError):
        Convention.parse("eps=+2,q4=root,branch=+1")


def test_standard_primes_admit_no_convention(adS_images):
    ctx, images = adS_images
    rep, passing, residuals = verify_theorem41(ctx, PrimedCasimirs.standard(), images=images)
    assert passing == []
    assert len(residuals) == 8


def test_sign_corrected_primes_admit_one_convention(adS_images):
    ctx, images = adS_images
    rep, passing, _ = verify_theorem41(ctx, PrimedCasimirs.sign_corrected(), images=images)
    assert [str(c) for c in passing] == ["eps=+1,q4=root,branch=+1"]
    assert rep.passed
    assert rep.findings["sign-corrected/recorded-convention"] == "eps=+1,q4=root,branch=+1"


def test_fixed_convention_is_checked_alone(adS_images):
    ctx, images = adS_images
    wrong = Convention.parse("eps=-1,q4=root,branch=+1")
    rep, _, _ = verify_theorem41(ctx, PrimedCasimirs.sign_corrected(), wrong, images=images)
    assert not rep.passed


def test_derived_quartic_vanishes(adS_images):
    ctx, images = adS_images
    assert derived_quartic_residual(ctx, images).is_zero()


def test_quartic_findings(adS_images):
    ctx, images = adS_images
    rep = verify_quartic(ctx, PrimedCasimirs.sign_corrected(), images=images)
    assert rep.findings["sign-corrected/quartic-with-reversed-C4prime-sign"] == "vanishes"
    assert rep.findings["derived-quartic-at-zero-C4"].startswith("factors")
    assert rep.check("sign-corrected/spin-zero-factorization").status == "pass"


def test_quartic_negative_control(adS_images):
    # Y^2 = -P^2 is the wrong square for sign +
    ctx, images = adS_images
    rep = verify_quartic(ctx, PrimedCasimirs.sign_corrected(), ysq_sign=-1, images=images)
    assert rep.findings["sign-corrected/quartic-with-reversed-C4prime-sign"] != "vanishes"
    assert "leaves" in rep.findings["derived-quartic"]


def test_signature_limits():
    with pytest.raises(ConfigurationError):
        build_deformed(0, 3, 2)
