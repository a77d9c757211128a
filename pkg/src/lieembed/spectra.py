"""Spectral arithmetic for the hyperbolic-space representations and tachyon masses.

The shifted Casimir C_2 + ((p+q-1)/2)^2 of so(p+1, q) on the hyperboloid
has eigenvalues (s + (p+q-1)/2)^2 for integers s > -(p+q-1)/2 (discrete
series, q > 1 only) and s^2 for imaginary s (continuous series).

Feeding such a point into the deformation of sig(p, q) uses the
hyperboloid parameters (p+1, q) for sign + and (p, q+1) for sign -.
Then Y^2 = -(C_2 + ((p+q)/2)^2), P^2 = sign * Y^2 and the mass squared
is -P^2. All arithmetic is exact.
"""

from dataclasses import dataclass, replace
from fractions import Fraction

from .exact.gaussian import GaussianRational
from .presets import ConfigurationError
from .report import VerificationReport

SERIES = ("discrete", "continuous")


class SpectrumError(ValueError):
    """A spectral point is outside the allowed range."""


@dataclass(frozen=True)
class SpectralPoint:
    series: str
    s: GaussianRational
    shifted: Fraction = None
    c2: Fraction = None
    ysq: Fraction = None
    psq: Fraction = None
    mass_sq: Fraction = None

    @property
    def tachyonic(self):
        return self.mass_sq is not None and self.mass_sq < 0

    def to_dict(self):
        out = {"series": self.series, "s": str(self.s)}
        for key in ("shifted", "c2", "ysq", "psq", "mass_sq"):
            v = getattr(self, key)
            if v is not None:
                out[key] = str(v)
        if self.mass_sq is not None:
            out["tachyonic"] = self.tachyonic
        return out


def discrete_point(s):
    s = Fraction(s)
    if s.denominator != 1:
        raise SpectrumError(f"discrete series needs an integer s, got {s}")
    return SpectralPoint("discrete", GaussianRational(s))


def continuous_point(s):
    """A continuous-series point; s must be purely imaginary (s = 0 allowed)."""
    s = GaussianRational.coerce(s)
    if s.re != 0:
        raise SpectrumError(f"continuous series needs imaginary s, got {s}")
    return SpectralPoint("continuous", s)


def parse_point(text):
    """'discrete:1', 'continuous:2i' or a bare value (imaginary means continuous)."""
    if ":" in text:
        series, value = text.split(":", 1)
        if series == "discrete":
            return discrete_point(Fraction(value))
        if series == "continuous":
            return continuous_point(GaussianRational.parse(value))
        raise SpectrumError(f"unknown series {series!r}")
    z = GaussianRational.parse(text)
    if z.im != 0 or z.is_zero():
        return continuous_point(z)
    return discrete_point(z.re)


def half_shift(p, q):
    return Fraction(p + q - 1, 2)


def spectrum_eigenvalue(p, q, point):
    """Fill the shifted eigenvalue and C_2 for hyperboloid parameters (p, q)."""
    if p < 0 or q < 1:
        raise ConfigurationError("hyperboloid parameters need p >= 0 and q >= 1")
    h = half_shift(p, q)
    if point.series == "discrete":
        if q == 1:
            raise SpectrumError("q = 1: there is no discrete series")
        s = point.s.re
        if not s > -h:
            raise SpectrumError(f"discrete series needs s > {-h}, got {s}")
        shifted = (s + h) ** 2
    elif point.series == "continuous":
        if point.s.re != 0:
            raise SpectrumError(f"continuous series needs imaginary s, got {point.s}")
        shifted = -point.s.im ** 2
    else:
        raise SpectrumError(f"unknown series {point.series!r}")
    return replace(point, shifted=shifted, c2=shifted - h * h)


def hyperboloid_parameters(p, q, sign):
    """Proposition parameters for deforming sig(p, q) with the given sign."""
    if sign == 1:
        return p + 1, q
    if sign == -1:
        return p, q + 1
    raise ConfigurationError("sign must be +1 or -1")


def tachyon_mass(point, p, q, sign):
    """Y^2, P^2 and the mass squared for target Poincare signature (p, q).

    ``point`` must already carry its C_2 eigenvalue (see spectrum_eigenvalue).
    """
    if point.c2 is None:
        raise SpectrumError("the point has no C_2 eigenvalue; call spectrum_eigenvalue first")
    ysq = -(point.c2 + Fraction(p + q, 2) ** 2)
    if ysq <= 0:
        raise SpectrumError(f"Y not strictly positive: Y^2 = {ysq}")
    psq = sign * ysq
    return replace(point, ysq=ysq, psq=psq, mass_sq=-psq)


def evaluate_point(point, p, q, sign):
    """spectrum_eigenvalue on the matching hyperboloid followed by tachyon_mass."""
    hp, hq = hyperboloid_parameters(p, q, sign)
    return tachyon_mass(spectrum_eigenvalue(hp, hq, point), p, q, sign)


def inequality_readings(point, p, q, sign):
    """Both readings of the positivity condition on C_2 + ((p+q)/2)^2.

    As printed, sign + asks for C_2 + ((p+q)/2)^2 > 0 and sign - for < 0.
    Strict positivity of Y^2 = -(C_2 + ((p+q)/2)^2) asks for < 0 in both
    cases. Returns which reading accepts the point.
    """
    value = point.c2 + Fraction(p + q, 2) ** 2
    printed = value > 0 if sign == 1 else value < 0
    positive_y = value < 0
    return {"value": str(value), "printed-reading": printed, "positive-Y-reading": positive_y}


def spectra_report(p, q, sign, points):
    """Report for a list of points on the deformation of sig(p, q)."""
    rep = VerificationReport("spectra", {"p": p, "q": q, "sign": sign})
    hp, hq = hyperboloid_parameters(p, q, sign)
    rep.note("hyperboloid-parameters", [hp, hq])
    for pt in points:
        name = f"point[{pt.series}:{pt.s}]"
        try:
            filled = spectrum_eigenvalue(hp, hq, pt)
        except SpectrumError as exc:
            rep.add_error(name, str(exc))
            continue
        rep.note(f"{name}/readings", inequality_readings(filled, p, q, sign))
        try:
            out = tachyon_mass(filled, p, q, sign)
        except SpectrumError as exc:
            rep.note(f"{name}/rejected", str(exc))
            rep.add(name, True, "rejected", detail=str(exc))
            continue
        rep.note(f"{name}/values", out.to_dict())
        rep.add(name, True, "0", detail=f"massSq = {out.mass_sq}"
                + (" (tachyonic)" if out.tachyonic else ""))
    return rep


def worked_chain_report():
    """The reference chain s = 2i on sig(0,3), sign +, and the two rejected points."""
    rep = VerificationReport("spectra-worked-chain", {"p": 0, "q": 3, "sign": 1})
    pt = evaluate_point(continuous_point(GaussianRational(0, 2)), 0, 3, 1)
    want = {"c2": Fraction(-25, 4), "ysq": Fraction(4), "psq": Fraction(4),
            "mass_sq": Fraction(-4)}
    for key, value in want.items():
        got = getattr(pt, key)
        rep.add(f"chain[{key}]", got == value, "0" if got == value else f"{got} != {value}")
    rep.add("chain[tachyonic]", pt.tachyonic, "0")
    for label, point in (("continuous s=0", continuous_point(0)), ("discrete s=0", discrete_point(0))):
        try:
            evaluate_point(point, 0, 3, 1)
            rep.add(f"rejects[{label}]", False, "accepted")
        except SpectrumError as exc:
            rep.add(f"rejects[{label}]", True, "0", detail=str(exc))
    return rep


__all__ = ["SERIES", "SpectralPoint", "SpectrumError", "continuous_point", "discrete_point",
           "evaluate_point", "hyperboloid_parameters", "inequality_readings", "parse_point",
           "spectra_report", "spectrum_eigenvalue", "tachyon_mass", "worked_chain_report"]
