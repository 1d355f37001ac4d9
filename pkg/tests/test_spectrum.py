import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singular_spectra.errors import DomainError
from singular_spectra.sae import BoundaryCondition, SpectralProblem
from singular_spectra.spectrum import (
    Spectrum,
    cached_spectrum,
    clear_cache,
    eigenfunction,
    has_zero_mode,
    negative_eigenvalue,
    negative_eigenvalue_secular,
    positive_eigenvalues,
    spectrum,
)

mp.mp.dps = 30


def F_h_mp(mu, R, c, s):
    z = mu * R
    j0 = mp.besselj(0, z)
    return c * (mp.pi / 2 * mp.bessely(0, z) - (mp.log(mu) - mp.log(2) + mp.euler) * j0) - s * j0


@pytest.mark.parametrize("R,tv", [(1.0, 1.0), (2.0, -0.7), (0.5, 3.0), (1.0, 0.0)])
def test_positive_roots_against_mpmath(R, tv):
    p = SpectralProblem.from_tan(R, tv)
    lams = positive_eigenvalues(p, 6)
    for lam in lams:
        mu = math.sqrt(lam)
        ref = float(mp.findroot(lambda m: F_h_mp(m, R, p.bc0.c, p.bc0.s), mp.mpf(mu)))
        assert mu == pytest.approx(ref, rel=1e-13)


def test_friedrichs_roots_are_bessel_zeros():
    R = 1.7
    lams = positive_eigenvalues(SpectralProblem(R, BoundaryCondition.friedrichs()), 5)
    for k, lam in enumerate(lams, 1):
        assert math.sqrt(lam) == pytest.approx(float(mp.besseljzero(0, k)) / R, rel=1e-14)


@settings(max_examples=25, deadline=None)
@given(st.floats(0.3, 3.0), st.floats(-4.0, 4.0))
def test_interlacing_with_friedrichs(R, tv):
    p = SpectralProblem.from_tan(R, tv)
    mu = np.sqrt(positive_eigenvalues(p, 10))
    j = np.array([float(mp.besseljzero(0, k)) for k in range(1, 12)]) / R
    assert np.all(np.diff(mu) > 0)
    low_nonpositive = has_zero_mode(p) or math.log(R) > tv
    if low_nonpositive:
        assert np.all((mu > j[:10]) & (mu < j[1:11]))
    else:
        assert mu[0] < j[0] and np.all((mu[1:] > j[:9]) & (mu[1:] < j[1:10]))


def test_negative_eigenvalue_against_mpmath():
    for R, tv in [(1.0, -2.0), (2.0, 0.3), (0.5, -1.0)]:
        p = SpectralProblem.from_tan(R, tv)
        lam = negative_eigenvalue(p)
        x = math.sqrt(-lam)
        ref = float(mp.findroot(lambda t: mp.re(F_h_mp(1j * t, R, p.bc0.c, p.bc0.s)), mp.mpf(x)))
        assert x == pytest.approx(ref, rel=1e-13)
        assert lam == pytest.approx(negative_eigenvalue_secular(p), rel=1e-12)


def test_no_negative_eigenvalue_cases():
    assert negative_eigenvalue(SpectralProblem.from_tan(1.0, 0.5)) is None
    assert negative_eigenvalue(SpectralProblem.from_tan(1.0, 0.0)) is None  # zero mode
    assert negative_eigenvalue(SpectralProblem(1.0, BoundaryCondition.friedrichs())) is None


def test_deep_negative_eigenvalue():
    # alpha = 6: y* is large and the series terms span hundreds of decades
    p = SpectralProblem.from_tan(1.0, -6.0)
    lam = negative_eigenvalue(p)
    assert lam == pytest.approx(negative_eigenvalue_secular(p), rel=1e-12)


def test_zero_mode_flag():
    R = 2.5
    assert has_zero_mode(SpectralProblem.from_tan(R, math.log(R)))
    assert not has_zero_mode(SpectralProblem.from_tan(R, math.log(R) + 1e-9))
    sp = spectrum(SpectralProblem.from_tan(R, math.log(R)), 3)
    assert sp.zero_mode and sp.negative is None
    assert sp.all_eigenvalues()[0] == 0.0 and len(sp.all_eigenvalues()) == 4


def test_robin_spectrum_against_mpmath():
    p = SpectralProblem(1.0, BoundaryCondition.from_tan(0.5), BoundaryCondition.from_angle(0.6))
    c, s = p.bc0.c, p.bc0.s

    def G(mu):
        def P(r):
            return mp.sqrt(r) * F_h_mp(mu, r, c, s)

        return p.bcR.c * mp.diff(P, 1) + p.bcR.s * P(1)

    sp = spectrum(p, 4)
    for lam in sp.positive:
        ref = float(mp.findroot(G, mp.mpf(math.sqrt(lam))))
        assert math.sqrt(lam) == pytest.approx(ref, rel=1e-12)


def test_robin_zero_mode():
    # theta_1 = 0 and phi'(R) = 0: p(r) = sqrt(r) log r has p'(R) = 0 at R = e^-2
    R = math.exp(-2.0)
    p = SpectralProblem(R, BoundaryCondition.from_tan(0.0), BoundaryCondition.neumann())
    assert has_zero_mode(p)


def test_parallel_matches_serial():
    p = SpectralProblem.from_tan(1.0, 0.8)
    a = positive_eigenvalues(p, 220, jobs=1)
    b = positive_eigenvalues(p, 220, jobs=2)
    assert a == b


def test_cache_grows_and_clears():
    clear_cache()
    p = SpectralProblem.from_tan(1.1, 0.4)
    s1 = cached_spectrum(p, 10)
    assert len(s1.positive) >= 10
    s2 = cached_spectrum(p, 5)
    assert s2 is s1
    s3 = cached_spectrum(p, len(s1.positive) + 1)
    assert len(s3.positive) > len(s1.positive)
    assert s3.positive[: len(s1.positive)] == s1.positive
    clear_cache()


def test_spectrum_validation():
    with pytest.raises(ValueError):
        Spectrum(None, False, (2.0, 1.0), 2)
    with pytest.raises(ValueError):
        Spectrum(1.0, False, (1.0,), 1)
    with pytest.raises(DomainError):
        positive_eigenvalues(SpectralProblem.from_tan(1.0, 1.0), 0)
    with pytest.raises(DomainError):
        negative_eigenvalue(SpectralProblem(1.0, BoundaryCondition.from_tan(0.0), BoundaryCondition.neumann()))


def test_eigenfunction_solves_the_equation():
    p = SpectralProblem.from_tan(1.0, 1.0)
    mu = math.sqrt(positive_eigenvalues(p, 2)[1])
    assert abs(eigenfunction(1.0, mu, p)) < 1e-12
    r, h = 0.4, 1e-3
    f = [eigenfunction(r + k * h, mu, p) for k in (-1, 0, 1)]
    d2 = (f[0] - 2 * f[1] + f[2]) / h**2
    assert -d2 - f[1] / (4 * r * r) == pytest.approx(mu * mu * f[1], rel=1e-5)
    vals = eigenfunction(np.array([[0.1, 0.2], [0.3, 0.4]]), mu, p)
    assert vals.shape == (2, 2)
    with pytest.raises(DomainError):
        eigenfunction(0.0, mu, p)
