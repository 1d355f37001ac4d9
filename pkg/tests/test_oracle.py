import math

import mpmath as mp
import pytest

from singular_spectra.errors import DomainError, StepFailure
from singular_spectra.oracle import ShootState, initial_data, oracle_eigenvalues, shoot
from singular_spectra.sae import BoundaryCondition, SpectralProblem
from singular_spectra.spectrum import negative_eigenvalue, positive_eigenvalues

mp.mp.dps = 30


def test_initial_data_against_bessel_solution():
    # the admissible solution is sqrt(r) [c ((pi/2) Y0 - (log mu - log2 + gamma) J0) - s J0]
    bc = BoundaryCondition.from_tan(0.7)
    mu, r0 = 1.3, 1e-4
    st = initial_data(r0, bc, mu)

    def u(r):
        z = mu * r
        j0 = mp.besselj(0, z)
        return mp.sqrt(r) * (bc.c * (mp.pi / 2 * mp.bessely(0, z) - (mp.log(mu) - mp.log(2) + mp.euler) * j0) - bc.s * j0)

    assert st.phi == pytest.approx(float(u(r0)), rel=1e-12)
    assert st.dphi == pytest.approx(float(mp.diff(u, r0)), rel=1e-12)


def test_initial_data_negative_branch():
    bc = BoundaryCondition.from_tan(-1.0)
    x, r0 = 2.0, 1e-4
    st = initial_data(r0, bc, x, negative=True)

    def u(r):
        y = x * r
        i0 = mp.besseli(0, y)
        # J0(ixr) = I0, (pi/2) Y0(ixr) - (log(ix) - log2 + gamma) J0(ixr) = -K0 - (log x - log2 + gamma) I0
        return mp.sqrt(r) * (bc.c * (-mp.besselk(0, y) - (mp.log(x) - mp.log(2) + mp.euler) * i0) - bc.s * i0)

    assert st.phi == pytest.approx(float(u(r0)), rel=1e-12)


def test_rk4_converges_at_fourth_order():
    p = SpectralProblem.from_tan(1.0, 1.0)
    mu = math.sqrt(positive_eigenvalues(p, 3)[2])
    errs = [abs(shoot(mu, p, steps=n)) for n in (400, 800, 1600)]
    assert errs[0] / errs[1] == pytest.approx(16.0, rel=0.2)
    assert errs[1] / errs[2] == pytest.approx(16.0, rel=0.2)


def test_adaptive_residual_vanishes_at_eigenvalue():
    p = SpectralProblem.from_tan(2.0, 0.3)
    for lam in positive_eigenvalues(p, 3):
        assert abs(shoot(math.sqrt(lam), p)) < 1e-10
    lam = negative_eigenvalue(p)
    assert abs(shoot(math.sqrt(-lam), p, negative=True)) < 1e-10


def test_oracle_robin_and_friedrichs():
    for p in (
        SpectralProblem(1.0, BoundaryCondition.friedrichs()),
        SpectralProblem(1.5, BoundaryCondition.from_tan(-1.0), BoundaryCondition.from_angle(0.6)),
    ):
        from singular_spectra.spectrum import spectrum

        ref = [v for v in spectrum(p, 6).all_eigenvalues() if v != 0.0][:5]
        got = oracle_eigenvalues(p, 5)
        assert got == pytest.approx(ref, rel=1e-9)


def test_start_radius_insensitivity():
    p = SpectralProblem.from_tan(1.0, 1.0)
    a = oracle_eigenvalues(p, 2)
    b = oracle_eigenvalues(p, 2, r0=1e-8)
    assert a == pytest.approx(b, rel=1e-10)


def test_oracle_domain_checks():
    p = SpectralProblem.from_tan(1.0, 1.0)
    with pytest.raises(DomainError):
        shoot(1.0, p, r0=0.1)
    with pytest.raises(DomainError):
        initial_data(0.0, p.bc0, 1.0)
    with pytest.raises(StepFailure):
        ShootState(1.0, math.nan, 0.0)
