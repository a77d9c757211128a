from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lieembed.embedding import build_deformed, build_lemma31_elements
from lieembed.shell import (
    ExactField,
    FloatField,
    Jet,
    JetOrderError,
    ShellRealization,
    cross_check_closure,
    cross_check_products,
    measure_tilde_condition,
    symbolic_zero_annihilates,
    verify_condition32,
    verify_lemma31_numeric,
)

F = ExactField()
BASE = (Fraction(1, 2), Fraction(-2, 3))
polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.fractions(min_value=-4, max_value=4, max_denominator=5), max_size=5)


def jet(poly, order=5):
    return Jet.from_polynomial(F, BASE, order, poly)


@given(polys, polys, st.integers(0, 1))
def test_product_rule(a, b, k):
    f, g = jet(a), jet(b)
    lhs = (f * g).derivative(k)
    rhs = f.derivative(k) * g.truncate(4) + f.truncate(4) * g.derivative(k)
    assert (lhs - rhs).is_zero()


@given(polys)
def test_derivatives_commute(a):
    f = jet(a)
    assert (f.derivative(0).derivative(1) - f.derivative(1).derivative(0)).is_zero()


@given(polys)
def test_sqrt_squares_back(a):
    f = jet(a)
    # shift the constant term to a positive integer square
    c0 = f.constant_term()
    target = (abs(c0.numerator) + 1) ** 2
    g = f + Jet.constant(F, BASE, 5, target - c0)
    r = g.sqrt()
    assert (r * r - g).is_zero()


def test_exact_sqrt_needs_rational_square():
    g = Jet.constant(F, BASE, 3, 2)
    with pytest.raises(ValueError):
        g.sqrt()
    fl = FloatField()
    h = Jet.constant(fl, BASE, 3, 2)
    assert (h.sqrt() * h.sqrt() - h).is_zero()


def test_derivative_of_order_zero_jet():
    with pytest.raises(JetOrderError):
        Jet.coordinate(F, BASE, 0, 0).derivative(0)


def test_coordinate_derivative():
    x = Jet.coordinate(F, BASE, 3, 1)
    assert x.constant_term() == BASE[1]
    assert x.derivative(1).constant_term() == 1
    assert x.derivative(0).is_zero()


@pytest.mark.parametrize("p,q,sign", [(0, 2, 1), (0, 2, -1), (1, 2, 1)])
def test_base_points_on_shell(p, q, sign):
    r = ShellRealization(p, q, sign)
    e = r.sig.metric
    for b in r.base_points(5):
        pt = r.point(b)
        full = (pt.coords[0].constant_term(),) + tuple(b)
        assert sum(e[k] * full[k] ** 2 for k in range(r.n)) == sign * r.yval ** 2


def test_seeded_tests_are_reproducible():
    a = ShellRealization(0, 2, 1, seed=3)
    b = ShellRealization(0, 2, 1, seed=3)
    assert [t.re.coeffs for t in a.tests(3)] == [t.re.coeffs for t in b.tests(3)]


def test_orbital_sign_detected():
    assert ShellRealization(0, 2, 1).orbital_sign == 1


@pytest.mark.parametrize("p,q,sign", [(0, 2, -1), (0, 3, 1), (0, 3, -1)])
def test_spinless_condition(p, q, sign):
    r = ShellRealization(p, q, sign)
    assert verify_condition32(r, r.tests(3)).passed


def test_spin_term_breaks_spinless_condition():
    r = ShellRealization(0, 3, 1, spin_term=1)
    assert not verify_condition32(r, r.tests(2)).passed


@pytest.mark.parametrize("p,q,sign", [(0, 2, -1), (0, 3, 1)])
def test_inverse_formula_numeric(p, q, sign):
    r = ShellRealization(p, q, sign)
    elems = build_lemma31_elements(build_deformed(p, q, sign))
    assert verify_lemma31_numeric(r, elems, r.tests(3)).passed


def test_tilde_condition_measured():
    r = ShellRealization(0, 2, 1)
    out = measure_tilde_condition(r, r.tests(3))
    assert out["holds"] and out["vanishing"] == out["tests"] == 3


@pytest.mark.parametrize("mode", ["exact", "float"])
def test_closure_cross_check(mode):
    r = ShellRealization(0, 2, 1, mode=mode)
    assert cross_check_closure(r, build_deformed(0, 2, 1), r.tests(2)).passed
    assert not cross_check_closure(r, build_deformed(0, 2, 1, square_scale=2), r.tests(1)).passed


def test_products_agree_with_engine():
    ctx = build_deformed(0, 2, -1)
    r = ShellRealization(0, 2, -1)
    fr = ctx.frame
    pairs = {"L12,P1": (fr.L(1, 2), fr.P(1)), "Q2,P0": (ctx.q2, fr.P(0)),
             "L01,L02": (fr.L(0, 1), fr.L(0, 2))}
    assert cross_check_products(r, pairs, r.tests(2)).passed


def test_nonzero_polynomial_is_detected():
    ctx = build_deformed(0, 2, 1)
    r = ShellRealization(0, 2, 1)
    assert not symbolic_zero_annihilates(r, ctx.frame.P(1), r.tests(1))


def test_word_needs_jet_order():
    ctx = build_deformed(0, 2, 1)
    r = ShellRealization(0, 2, 1, order=1)
    with pytest.raises(JetOrderError):
        r.apply_polynomial(ctx.q2, r.tests(1)[0])
