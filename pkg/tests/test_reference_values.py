"""Hand-derived and displayed reference values for each module.

Expected values are written out independently of the code paths that
produce them.
"""

from fractions import Fraction

import pytest

from lieembed.algebra import adjoin_central_root, check_jacobi, commutator, normal_order, substitute
from lieembed.embedding import (
    build_deformed,
    build_lemma31_elements,
    build_theorem41,
    compute_casimir_c2,
    verify_closure,
)
from lieembed.exact.gaussian import ExactDivisionError, GaussianRational, I
from lieembed.exact.laurent import LaurentPoly, RationalFunction, evaluate_at, q_number
from lieembed.fundamental import ExactMatrix, casimir_matrix, generator_matrix, verify_matrix_brackets
from lieembed.presets import (
    PresentationError,
    PrimedCasimirs,
    Signature,
    build_casimirs,
    build_poincare,
    build_so,
    build_so_metric,
)
from lieembed.qdeform import (
    FormalDomain,
    build_e2_realization,
    build_tilde_generators,
    domain_for,
    verify_ysq_relation,
)
from lieembed.shell import ComplexJet, Jet, ShellRealization, verify_lemma31_numeric

t = LaurentPoly.t()
tinv = LaurentPoly.monomial(-1)


def unit(n, i, j):
    rows = [[0] * n for _ in range(n)]
    rows[i][j] = 1
    return ExactMatrix(rows)


# exact arithmetic

def test_gaussian_norm_product():
    a = GaussianRational(Fraction(1, 2), 1)
    assert a * a.conjugate() == GaussianRational(Fraction(5, 4))


def test_inverse_of_zero_function():
    with pytest.raises(ExactDivisionError, match="division by zero"):
        RationalFunction(t * t - t * t).inverse()


def test_laurent_square():
    assert (t + tinv) ** 2 == t * t + LaurentPoly.constant(2) + tinv * tinv


def test_q_numbers():
    assert q_number(1) == LaurentPoly.constant(1)
    assert q_number(2) == t ** 2 + tinv ** 2
    assert q_number(3) == t ** 4 + LaurentPoly.constant(1) + tinv ** 4


def test_evaluations():
    assert evaluate_at(t + tinv, 1) == GaussianRational(2)
    f = RationalFunction(t ** 2 - tinv ** 2, t - tinv)
    assert evaluate_at(f, 2) == GaussianRational(Fraction(5, 2))
    with pytest.raises(ExactDivisionError):
        evaluate_at(RationalFunction(LaurentPoly.constant(1), t - LaurentPoly.constant(1)), 1)


# enveloping algebra

def test_so23_normal_order():
    alg = build_so(1, 3).algebra
    assert normal_order([(1, ["L12", "L01"])], alg) == alg.word("L01", "L12") + alg.gen("L02")
    assert alg.word("L01", "L12") == alg.word("L01", "L12")


def test_translations_reorder():
    alg = build_poincare(0, 3).algebra
    assert alg.word("P1", "P0") == alg.word("P0", "P1")


def test_brackets():
    so = build_so(1, 3).algebra
    assert so.bracket("L01", "L12") == -so.gen("L02")
    assert so.bracket("L01", "L23").is_zero()
    assert so.bracket("L12", "L23") == so.gen("L13")
    po = build_poincare(0, 3).algebra
    assert po.bracket("L01", "P1") == po.gen("P0")
    assert po.bracket("P1", "P2").is_zero()
    assert build_poincare(1, 3).algebra.bracket("L01", "P0") == build_poincare(1, 3).algebra.gen("P1")
    single = build_so(0, 1).algebra
    assert single.ngens == 1


def test_adjoined_root():
    frame = build_poincare(0, 3)
    alg = frame.algebra
    psq = alg.word("P0", "P0") - alg.word("P1", "P1") - alg.word("P2", "P2") - alg.word("P3", "P3")
    ext = adjoin_central_root(alg, "Y", psq)
    y = ext.gen("Y")
    want = sum((ext.word(p, p, "L01").scale(s) for p, s in
                (("P0", 1), ("P1", -1), ("P2", -1), ("P3", -1))), ext.zero())
    assert y * y * ext.gen("L01") == want
    assert (y * ext.gen("P0") - ext.gen("P0") * y).is_zero()
    so = build_so(1, 3).algebra
    with pytest.raises(PresentationError):
        adjoin_central_root(so, "Y", so.gen("L01"))


def test_substitutions():
    alg = build_poincare(0, 3).algebra
    x = alg.word("L01", "P0")
    ident = {g.name: alg.gen(g.name) for g in alg.generators}
    assert substitute(ident, x, alg) == x
    # L01 -> P0 is not a homomorphism, so the image is taken on the PBW monomial
    swap = dict(ident, L01=alg.gen("P0"))
    assert substitute(swap, alg.word("P0", "L01"), alg) == alg.word("P0", "P0")


def test_deformation_map_reproduces_casimir():
    # so(2,1) Casimir pulled back along L_01 -> 2Y L_01, L_0n -> -M_0, L_1n -> -M_1,
    # all cleared by 2Y, must equal the directly built 4 Y^2 C_2
    ctx = build_deformed(0, 1, 1)
    target = build_so_metric((1, -1, 1))
    images = {"L01": ctx.y * ctx.frame.L(0, 1) * 2, "L02": -ctx.deformed[0],
              "L12": -ctx.deformed[1]}
    q2 = build_casimirs(target, ["Q2"])["Q2"]
    direct, _ = compute_casimir_c2(ctx)
    assert substitute(images, q2, ctx.algebra) == direct


def test_jacobi_triple_counts():
    assert check_jacobi(build_so(1, 3).algebra).findings["triples"] == 120
    assert check_jacobi(build_poincare(0, 3).algebra).passed


# Casimir elements

def test_casimir_catalog_values():
    so01 = build_so(0, 1)
    assert build_casimirs(so01, ["Q2"])["Q2"] == so01.algebra.word("L01", "L01")
    po = build_poincare(0, 3)
    a = po.algebra
    psq = a.word("P0", "P0") - a.word("P1", "P1") - a.word("P2", "P2") - a.word("P3", "P3")
    assert build_casimirs(po, ["Psq"])["Psq"] == psq
    lor = build_so(0, 3)
    L = lor.L
    root = L(1, 2) * L(3, 0) + L(2, 3) * L(1, 0) + L(3, 1) * L(2, 0)
    cat = build_casimirs(lor, ["Q4root", "Q4"])
    assert cat["Q4root"] == root and cat["Q4"] == root * root


# fundamental representation

def test_generator_matrices():
    sig = Signature(1, 3)
    assert generator_matrix(sig, 0, 1) == -(unit(5, 0, 1) - unit(5, 1, 0))
    assert generator_matrix(sig, 3, 4) == unit(5, 3, 4) - unit(5, 4, 3)
    assert generator_matrix(sig, 0, 2) == unit(5, 0, 2) + unit(5, 2, 0)


def test_matrix_bracket_pair_counts():
    assert verify_matrix_brackets(Signature(1, 3)).findings["pairs"] == 45
    assert verify_matrix_brackets(Signature(0, 1)).passed


def test_fundamental_casimirs():
    mat, value = casimir_matrix(Signature(0, 1))
    l01 = generator_matrix(Signature(0, 1), 0, 1)
    assert mat == l01 @ l01 and value == 1
    assert casimir_matrix(Signature(1, 3))[1] == 4


# deformation

def test_deformed_generators_in_two_dimensions():
    ctx = build_deformed(0, 1, 1)
    a, y = ctx.algebra, ctx.y
    # written in PBW order, translations first
    m0 = (a.word("P1", "L01") * 2 + a.gen("P0")).scale(I) + y * a.gen("P0") * 2
    m1 = (a.word("P0", "L01") * 2 + a.gen("P1")).scale(I) + y * a.gen("P1") * 2
    assert ctx.deformed == [m0, m1]


def test_corrupted_closure_exit_code():
    assert verify_closure(build_deformed(0, 1, 1)).exit_code == 0
    assert verify_closure(build_deformed(0, 1, 1, square_scale=2)).exit_code == 1


def test_inverse_formula_d_in_four_dimensions():
    ctx = build_deformed(0, 3, 1)
    y, q2, one = ctx.y, ctx.q2, ctx.algebra.one()
    d = ((q2 + one * Fraction(3, 4)) * Fraction(1, 4) + (y * (q2 + one * Fraction(1, 2))).scale(I)
         - y * y * (q2 - one * Fraction(1, 2)) + (y * y * y).scale(2 * I) - y * y * y * y)
    assert build_lemma31_elements(ctx).D == d


def test_inverse_formula_d_in_five_dimensions():
    ctx = build_deformed(1, 3, 1)
    y, q2, one = ctx.y, ctx.q2, ctx.algebra.one()
    d = (q2 + one * 2) + (y * (q2 + one * Fraction(3, 2))).scale(2 * I) \
        - y * y * (q2 - one) + (y * y * y).scale(3 * I) - y * y * y * y
    assert build_lemma31_elements(ctx).D == d


def test_wrong_n_breaks_inverse_formula():
    r = ShellRealization(0, 3, 1)
    bad = build_lemma31_elements(build_deformed(0, 3, 1), n_override=5)
    assert not verify_lemma31_numeric(r, bad, r.tests(1)).passed


def test_anti_deformation_blocks(adS_images):
    ctx, images = adS_images
    el = build_theorem41(ctx, PrimedCasimirs.standard(), images=images)
    f = ctx.frame
    assert el.d_blocks[3].numerator == ctx.algebra.one().scale(2 * I)
    e = f.metric
    for mu in range(4):
        for nu in range(4):
            want = (ctx.algebra.one() * Fraction(int(mu == nu), 2) - f.L(mu, nu) * e[nu]).scale(I)
            assert el.a_blocks[3][mu][nu].numerator == want
    q2 = ctx.q2
    q4 = images.q4root() * images.q4root()
    d0 = q4 + q2 * Fraction(1, 4) - el.c4_prime + ctx.algebra.one() * Fraction(3, 16)
    assert (el.d_blocks[0] - d0).numerator.is_zero()


# shell realization

def test_orbital_rotation_on_a_coordinate():
    r = ShellRealization(0, 3, 1)
    base = r.base_points(1)[0]
    p1 = ComplexJet(Jet.from_polynomial(r.field, base, r.order, {(1, 0, 0): 1}))
    p2 = ComplexJet(Jet.from_polynomial(r.field, base, r.order, {(0, 1, 0): 1}))
    assert (r.L(1, 2, p1) + p2).is_zero()
    assert (r.P(1, p1) - p1.times_real(p1.re)).is_zero()
    assert (r.P(1, r.P(2, p1)) - r.P(2, r.P(1, p1))).is_zero()


# q-deformation

def test_e2_translation_square():
    e2 = build_e2_realization(Fraction(3, 2), 8, domain_for("classical"))
    sq = e2.P1 @ e2.P1 + e2.P2 @ e2.P2
    assert sq.scalar_on(sq.interior()) == GaussianRational(Fraction(9, 4))


def test_tilde_entries_carry_q_number_differences():
    dom = FormalDomain()
    y = Fraction(3, 2)
    e2 = build_e2_realization(y, 8, dom)
    l31, _ = build_tilde_generators(e2)
    two = dom.qnum(2, "sqrt-q")

    def sq(m):
        return dom.qnum(m, "sqrt-q") ** 2

    half = dom.const(y / 2)
    for m in range(-5, 6):
        # -i L_21 has eigenvalue -m on e_m
        up = half + half * (sq(-(m + 1)) - sq(-m)) / (two * dom.const(y))
        assert l31.entries[m][1] == up
        assert l31.bandwidth == 1


def test_identity_candidate_fails():
    e2 = build_e2_realization(Fraction(3, 2), 8, domain_for(None))
    assert not verify_ysq_relation(e2, build_tilde_generators(e2), "identity").passed
