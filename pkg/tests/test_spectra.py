from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lieembed.exact.gaussian import GaussianRational
from lieembed.spectra import (
    SpectrumError,
    continuous_point,
    discrete_point,
    evaluate_point,
    hyperboloid_parameters,
    inequality_readings,
    parse_point,
    spectra_report,
    spectrum_eigenvalue,
    tachyon_mass,
    worked_chain_report,
)


def test_worked_chain():
    pt = evaluate_point(continuous_point(GaussianRational(0, 2)), 0, 3, 1)
    assert (pt.c2, pt.ysq, pt.psq, pt.mass_sq) == (Fraction(-25, 4), 4, 4, -4)
    assert pt.tachyonic
    assert worked_chain_report().passed


@pytest.mark.parametrize("point", [continuous_point(0), discrete_point(0)])
def test_rejected_points(point):
    with pytest.raises(SpectrumError):
        evaluate_point(point, 0, 3, 1)


def test_hyperboloid_parameters():
    assert hyperboloid_parameters(0, 3, 1) == (1, 3)
    assert hyperboloid_parameters(0, 3, -1) == (0, 4)


def test_discrete_series_range():
    pt = spectrum_eigenvalue(1, 3, discrete_point(1))
    assert pt.shifted == Fraction(25, 4)
    with pytest.raises(SpectrumError):
        spectrum_eigenvalue(1, 1, discrete_point(1))
    with pytest.raises(SpectrumError):
        spectrum_eigenvalue(1, 3, discrete_point(-2))
    with pytest.raises(SpectrumError):
        discrete_point(Fraction(1, 2))
    with pytest.raises(SpectrumError):
        continuous_point(GaussianRational(1, 1))


@given(st.fractions(min_value=Fraction(1, 10), max_value=20, max_denominator=10),
       st.integers(0, 2), st.integers(1, 3), st.sampled_from([1, -1]))
def test_continuous_series_closed_form(k, p, q, sign):
    # shifted eigenvalue -k^2, so Y^2 = k^2 + h^2 - ((p+q)/2)^2 on the hyperboloid
    hp, hq = hyperboloid_parameters(p, q, sign)
    h = Fraction(hp + hq - 1, 2)
    ysq = k * k + h * h - Fraction(p + q, 2) ** 2
    pt = continuous_point(GaussianRational(0, k))
    if ysq <= 0:
        with pytest.raises(SpectrumError):
            evaluate_point(pt, p, q, sign)
    else:
        out = evaluate_point(pt, p, q, sign)
        assert out.ysq == ysq
        assert out.mass_sq == -sign * ysq


def test_tachyon_mass_needs_eigenvalue():
    with pytest.raises(SpectrumError):
        tachyon_mass(continuous_point(GaussianRational(0, 2)), 0, 3, 1)


@pytest.mark.parametrize("text,series", [("2i", "continuous"), ("discrete:1", "discrete"),
                                         ("continuous:0", "continuous"), ("3", "discrete")])
def test_parse_point(text, series):
    assert parse_point(text).series == series


def test_inequality_readings_disagree_on_worked_point():
    pt = spectrum_eigenvalue(1, 3, continuous_point(GaussianRational(0, 2)))
    r = inequality_readings(pt, 0, 3, 1)
    assert r == {"value": "-4", "printed-reading": False, "positive-Y-reading": True}


def test_spectra_report_records_rejections():
    rep = spectra_report(0, 3, 1, [parse_point("2i"), parse_point("discrete:1")])
    assert rep.passed
    assert "point[discrete:1]/rejected" in rep.findings
