import math

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singular_spectra.errors import DomainError, FriedrichsUndefined, PoleAt
from singular_spectra.sae import BoundaryCondition, SpectralProblem
from singular_spectra.secular import (
    AsymptoticSeries,
    kappa,
    log_deriv_imag,
    secular_asymptotic,
    secular_f,
    secular_f_imag,
    secular_f_paper,
    secular_f_real,
    secular_general,
    secular_general_imag_scaled,
    secular_general_real,
    small_mu_expansion,
    zero_limit_general,
)
from singular_spectra.specfun import EULER_GAMMA

mp.mp.dps = 40


def F_h_mp(mu, R, c, s):
    """Independent reference: c((pi/2) Y0(mu R) - (log mu - log 2 + gamma) J0(mu R)) - s J0(mu R)."""
    mu = mp.mpc(mu)
    z = mu * R
    j0 = mp.besselj(0, z)
    return c * (mp.pi / 2 * mp.bessely(0, z) - (mp.log(mu) - mp.log(2) + mp.euler) * j0) - s * j0


def P_gen_mp(mu, p):
    """Robin-at-R reference: cos t2 P'(R) + sin t2 P(R) for P = sqrt(r) u(r)."""
    c, s = p.bc0.c, p.bc0.s

    def P(r):
        z = mp.mpc(mu) * r
        j0 = mp.besselj(0, z)
        u = c * (mp.pi / 2 * mp.bessely(0, z) - (mp.log(mu) - mp.log(2) + mp.euler) * j0) - s * j0
        return mp.sqrt(r) * u

    R = mp.mpf(p.R)
    return p.bcR.c * mp.diff(P, R) + p.bcR.s * P(R)


CASES = [(1.0, 0.0), (2.0, 1.3), (0.4, -2.0), (3.0, 10.0), (1.0, -0.3)]
MUS = [0.01, 0.9, 3.7, 8.0, 1.0 + 0.5j, 2.0 - 1.0j, 0.3j, 5.0j]


@pytest.mark.parametrize("R,tv", CASES)
@pytest.mark.parametrize("mu", MUS)
def test_secular_f_matches_mpmath(R, tv, mu):
    p = SpectralProblem.from_tan(R, tv)
    if abs(mu * R) > 30:
        pytest.skip("outside the complex range")
    v = secular_f(mu, p)
    ref = complex(F_h_mp(mu, R, p.bc0.c, p.bc0.s))
    dref = complex(mp.diff(lambda m: F_h_mp(m, R, p.bc0.c, p.bc0.s), mp.mpc(mu)))
    assert abs(v.f - ref) <= 1e-12 * max(1.0, abs(ref))
    assert abs(v.df - dref) <= 1e-11 * max(1.0, abs(dref))


def test_friedrichs_is_minus_j0():
    p = SpectralProblem(1.7, BoundaryCondition.friedrichs())
    for mu in (0.5, 2.0 + 1.0j):
        assert abs(secular_f(mu, p).f + complex(mp.besselj(0, mu * 1.7))) < 1e-14
    with pytest.raises(FriedrichsUndefined):
        secular_f_paper(1.0, p)
    with pytest.raises(FriedrichsUndefined):
        kappa(p.bc0)


def test_paper_normalization():
    p = SpectralProblem.from_tan(1.2, 0.7)
    assert secular_f_paper(2.0, p).f == pytest.approx(secular_f(2.0, p).f / p.bc0.c, rel=1e-15)


def test_kappa():
    assert kappa(BoundaryCondition.from_tan(0.4)) == pytest.approx(math.log(2) - EULER_GAMMA - 0.4, abs=1e-15)


def test_real_path_agrees_with_complex_path():
    p = SpectralProblem.from_tan(1.0, 0.5)
    for mu in (0.3, 7.0, 25.0):
        f, df = secular_f_real(mu, p)
        v = secular_f(mu, p)
        assert f == pytest.approx(v.f.real, abs=1e-14) and df == pytest.approx(v.df.real, abs=1e-13)


@pytest.mark.parametrize("x", [0.05, 1.0, 6.0, 20.0])
def test_imaginary_axis(x):
    p = SpectralProblem.from_tan(1.3, 0.2)
    f, df = secular_f_imag(x, p)
    ref = complex(F_h_mp(1j * x, 1.3, p.bc0.c, p.bc0.s))
    assert abs(ref.imag) < 1e-20 * max(1.0, abs(ref)) + 1e-25
    assert f == pytest.approx(ref.real, rel=1e-12)
    dref = complex(mp.diff(lambda t: F_h_mp(1j * t, 1.3, p.bc0.c, p.bc0.s), x)).real
    assert df == pytest.approx(dref, rel=1e-11)
    assert log_deriv_imag(x, p) == pytest.approx(dref / ref.real, rel=1e-11)


def test_log_derivative_far_out():
    # x R = 2000 would overflow I0; the scaled route stays finite
    p = SpectralProblem.from_tan(1.0, 1.0)
    series = secular_asymptotic(p)
    # the series stops at x^-2; the next term is -1/(8 x^3 R^2) = -1.6e-11 here
    assert log_deriv_imag(2000.0, p) - series(2000.0) == pytest.approx(-1.0 / (8.0 * 2000.0**3), rel=1e-2)


def test_asymptotic_series_shape():
    s = AsymptoticSeries(leading_log=(1.0, 0.0), power_coeffs=((0.0, 2.0), (-1.0, 1.0)), valid_from=2.0)
    x = 10.0
    assert s(x) == pytest.approx(1.0 / (x * math.log(x)) + 2.0 + 1.0 / x)
    with pytest.raises(ValueError):
        AsymptoticSeries(leading_log=None, power_coeffs=((-1.0, 1.0), (0.0, 1.0)), valid_from=1.0)


def test_pole_on_axis():
    p = SpectralProblem.from_tan(1.0, -2.0)  # negative eigenvalue
    from singular_spectra.spectrum import negative_eigenvalue

    x = math.sqrt(-negative_eigenvalue(p))
    with pytest.raises(PoleAt):
        log_deriv_imag(x, p)


def test_small_mu_expansion():
    p = SpectralProblem.from_tan(1.4, 0.1)
    mu = 1e-3
    assert abs(secular_f_paper(mu, p).f - small_mu_expansion(mu, p)) < 1e-11


@pytest.mark.parametrize("mu", [0.0, -1.0, 40.0 + 1.0j])
def test_mu_domain(mu):
    with pytest.raises(DomainError):
        secular_f(mu, SpectralProblem.from_tan(1.0, 0.0))


def test_robin_requires_general_function():
    p = SpectralProblem(1.0, BoundaryCondition.from_tan(0.0), BoundaryCondition.neumann())
    with pytest.raises(DomainError):
        secular_f(1.0, p)


@pytest.mark.parametrize("theta2", [0.0, 0.6, 2.2])
@pytest.mark.parametrize("mu", [0.7, 3.0 + 0.4j])
def test_general_matches_mpmath(theta2, mu):
    p = SpectralProblem(1.3, BoundaryCondition.from_tan(0.4), BoundaryCondition.from_angle(theta2))
    v = secular_general(mu, p)
    ref = complex(P_gen_mp(mu, p))
    dref = complex(mp.diff(lambda m: P_gen_mp(m, p), mp.mpc(mu)))
    assert abs(v.f - ref) <= 1e-11 * max(1.0, abs(ref))
    assert abs(v.df - dref) <= 1e-10 * max(1.0, abs(dref))
    if isinstance(mu, float):
        f, df = secular_general_real(mu, p)
        assert f == pytest.approx(v.f.real, abs=1e-13)


def test_general_reduces_to_dirichlet():
    p = SpectralProblem.from_tan(0.8, -0.6)
    assert secular_general(2.3, p).f == pytest.approx(math.sqrt(0.8) * secular_f(2.3, p).f, rel=1e-13)


def test_general_imag_sign_and_zero_limit():
    p = SpectralProblem(1.0, BoundaryCondition.from_tan(0.5), BoundaryCondition.from_angle(0.6))
    for x in (0.2, 3.0):
        ref = complex(P_gen_mp(1j * x, p)).real
        assert math.copysign(1.0, secular_general_imag_scaled(x, p)) == math.copysign(1.0, ref)
    P, dP = zero_limit_general(p)
    ref = complex(P_gen_mp(1e-9, p)).real
    assert p.bcR.c * dP + p.bcR.s * P == pytest.approx(ref, rel=1e-6)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.2, 4.0), st.floats(-5.0, 5.0), st.floats(0.05, 10.0))
def test_conjugation_symmetry(R, tv, x):
    p = SpectralProblem.from_tan(R, tv)
    mu = complex(x / R, 0.3)
    a, b = secular_f(mu, p).f, secular_f(mu.conjugate(), p).f
    assert abs(a - b.conjugate()) <= 1e-13 * max(1.0, abs(a))
