from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lieembed.exact.gaussian import ExactDivisionError, GaussianRational, I
from lieembed.exact.laurent import LaurentPoly, RationalFunction, evaluate_at, q_number
from lieembed.exact.quartic import QuarticField, quartic_is_irreducible

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, fractions, fractions)
laurents = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentPoly)


@given(gaussians, gaussians, gaussians)
def test_gaussian_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == GaussianRational(0)


@given(gaussians)
def test_gaussian_inverse(a):
    if a.is_zero():
        with pytest.raises(ExactDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == GaussianRational(1)
        assert a.norm() == (a * a.conjugate()).re


def test_i_squared():
    assert I * I == GaussianRational(-1)
    assert I ** -1 == -I


@pytest.mark.parametrize("text,value", [
    ("3", GaussianRational(3)), ("-1/2", GaussianRational(Fraction(-1, 2))),
    ("2i", GaussianRational(0, 2)), ("1/2-3/4i", GaussianRational(Fraction(1, 2), Fraction(-3, 4))),
    ("-i", GaussianRational(0, -1)),
])
def test_gaussian_parse(text, value):
    assert GaussianRational.parse(text) == value


@given(gaussians)
def test_gaussian_str_roundtrip(a):
    assert GaussianRational.parse(str(a)) == a


@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


@given(laurents, st.integers(-3, 3))
def test_laurent_evaluation_is_a_homomorphism(a, k):
    t0 = GaussianRational(Fraction(3, 2))
    b = LaurentPoly.monomial(k, 2) + a
    assert (a * b).evaluate(t0) == a.evaluate(t0) * b.evaluate(t0)


@given(laurents, laurents)
def test_rational_function_division(a, b):
    if b.is_zero():
        return
    f = RationalFunction(a, b)
    assert f * RationalFunction(b) == RationalFunction(a)


def test_rational_function_cancels_common_factor():
    t = LaurentPoly.t()
    f = RationalFunction(t * t - 1, t - 1)
    assert f.is_laurent()
    assert f == RationalFunction(t + 1)


def test_evaluate_at_pole():
    t = LaurentPoly.t()
    with pytest.raises(ExactDivisionError):
        evaluate_at(RationalFunction(LaurentPoly.constant(1), t - 1), 1)


@pytest.mark.parametrize("x", [0, 1, 2, 3, -2, 5])
def test_q_number_classical_limit(x):
    assert q_number(x).evaluate(1) == GaussianRational(x)


@given(st.integers(-6, 6), st.fractions(min_value=Fraction(1, 3), max_value=4, max_denominator=6))
def test_q_number_matches_definition(x, t0):
    # [x]_q with q = t^4: (t^{2x} - t^{-2x}) / (t^2 - t^{-2})
    if t0 == 1:
        return
    t0 = GaussianRational(t0)
    lhs = q_number(x).evaluate(t0)
    rhs = (t0 ** (2 * x) - t0 ** (-2 * x)) / (t0 ** 2 - t0 ** -2)
    assert lhs == rhs


def test_q_number_rejects_non_laurent_weights():
    # [1/2]_q = 1 / (t + 1/t) is not a Laurent polynomial in t = q^(1/4)
    with pytest.raises(ValueError):
        q_number(Fraction(1, 2))
    with pytest.raises(ValueError):
        q_number(Fraction(1, 3))
    assert q_number(2, base="sqrt-q") == LaurentPoly({1: 1, -1: 1})


@pytest.mark.parametrize("q,irreducible", [(2, True), (Fraction(3, 2), True), (5, True),
                                           (4, False), (16, False), (Fraction(1, 4), False)])
def test_quartic_irreducibility(q, irreducible):
    assert quartic_is_irreducible(q) == irreducible


@given(st.lists(fractions, min_size=4, max_size=4))
def test_quartic_field_inverse(coords):
    field = QuarticField(2)
    x = field.element([GaussianRational(c) for c in coords])
    if x.is_zero():
        return
    assert x * x.inverse() == field.one()


def test_quartic_t_satisfies_relation():
    field = QuarticField(Fraction(3, 2))
    t = field.t_power(1)
    assert t ** 4 == field.scalar(Fraction(3, 2))
    assert field.t_power(-1) * t == field.one()
