import math

import mpmath as mp
import numpy as np
import pytest

from singular_spectra.errors import DomainError, EigenvalueHit
from singular_spectra.resolvent import (
    evaluate,
    kernel_norm,
    kernel_p,
    kernel_q,
    log_coefficients,
    resolvent_kernel,
    resolvent_trace_expansion,
    trace_by_quadrature,
    trace_resolvent,
    trace_spectral_sum,
    wronskian,
)
from singular_spectra.sae import BoundaryCondition, SpectralProblem
from singular_spectra.secular import kappa, secular_f
from singular_spectra.spectrum import negative_eigenvalue, positive_eigenvalues

mp.mp.dps = 30

PROBLEMS = [SpectralProblem.from_tan(1.0, 1.0), SpectralProblem.from_tan(2.0, 0.3), SpectralProblem(0.8, BoundaryCondition.friedrichs())]


@pytest.mark.parametrize("p", PROBLEMS)
@pytest.mark.parametrize("mu", [0.7, 2.0 + 1.0j, 3.0j])
def test_wronskian_identity(p, mu):
    for r in (0.1 * p.R, 0.5 * p.R, 0.93 * p.R):
        w = wronskian(mu, p, r)
        assert abs(w + 2.0 / math.pi * secular_f(mu, p).f) < 1e-10 * max(1.0, abs(w))


def test_q_vanishes_at_R_and_matches_bessel_form():
    p = SpectralProblem.from_tan(1.3, 0.4)
    mu = 1.7 + 0.2j
    assert abs(kernel_q(p.R, mu, p)) < 1e-15
    r = 0.6
    ref = mp.sqrt(r) * (mp.bessely(0, mu * 1.3) * mp.besselj(0, mu * r) - mp.besselj(0, mu * 1.3) * mp.bessely(0, mu * r))
    assert abs(kernel_q(r, mu, p) - complex(ref)) < 1e-13


def test_p_satisfies_the_boundary_condition_at_zero():
    # p ~ sqrt(r) (c log r - s): the ratio of the two Frobenius coefficients is fixed by theta_1
    p = SpectralProblem.from_tan(1.0, 0.9)
    r = 1e-9
    val = kernel_p(r, 1.0, p) / math.sqrt(r)
    assert val.real == pytest.approx(p.bc0.c * math.log(r) - p.bc0.s, rel=1e-9)


def test_kernel_is_symmetric_and_solves_equation():
    p = SpectralProblem.from_tan(1.0, 1.0)
    mu = 1.2 + 0.5j
    assert resolvent_kernel(0.3, 0.7, mu, p) == pytest.approx(resolvent_kernel(0.7, 0.3, mu, p), rel=1e-14)
    # derivative jump across the diagonal equals -1
    s, h = 0.5, 1e-6
    left = (resolvent_kernel(s, s, mu, p) - resolvent_kernel(s - h, s, mu, p)) / h
    right = (resolvent_kernel(s + h, s, mu, p) - resolvent_kernel(s, s, mu, p)) / h
    assert abs((right - left) + 1.0) < 1e-4


def test_three_trace_routes_agree():
    p = SpectralProblem.from_tan(1.0, 1.0)
    mu = 2.0j
    lam = np.array(positive_eigenvalues(p, 4000))
    tr = trace_resolvent(mu, p)
    assert tr == pytest.approx(trace_spectral_sum(mu, p, eigenvalues=lam), rel=1e-8)
    assert tr == pytest.approx(trace_by_quadrature(mu, p), rel=1e-8)


def test_trace_by_quadrature_complex_point():
    p = SpectralProblem.from_tan(2.0, 0.3)
    mu = 1.1 + 0.4j
    assert abs(trace_by_quadrature(mu, p) / trace_resolvent(mu, p) - 1.0) < 1e-8


def test_friedrichs_trace_value():
    # sum 1/(j_k^2 + 1) for R = 1 at mu = i
    p = SpectralProblem(1.0, BoundaryCondition.friedrichs())
    ref = mp.nsum(lambda k: 1 / (mp.besseljzero(0, int(k)) ** 2 + 1), [1, mp.inf])
    assert trace_resolvent(1j, p).real == pytest.approx(float(ref), rel=1e-10)


def test_large_imaginary_argument_uses_scaled_route():
    p = SpectralProblem.from_tan(1.0, 1.0)
    x = 500.0
    series = resolvent_trace_expansion(p)
    assert trace_resolvent(1j * x, p).real == pytest.approx(series(x * x), rel=1e-8)


def test_expansion_coefficients():
    p = SpectralProblem.from_tan(1.5, 0.2)
    s = resolvent_trace_expansion(p)
    assert s.leading_log == (1.0, 2.0 * kappa(p.bc0))
    assert dict(s.power_coeffs) == {-0.5: 0.75, -1.0: -0.25, -1.5: -1.0 / 24.0}
    k2 = 2.0 * kappa(p.bc0)
    assert log_coefficients(p, 4) == pytest.approx([1.0, k2, k2**2, k2**3])


def test_eigenvalue_hit():
    p = SpectralProblem.from_tan(1.0, 1.0)
    mu = math.sqrt(positive_eigenvalues(p, 1)[0])
    with pytest.raises(EigenvalueHit):
        trace_resolvent(mu, p)
    q = SpectralProblem.from_tan(1.0, -2.0)
    x = math.sqrt(-negative_eigenvalue(q))
    with pytest.raises(EigenvalueHit):
        trace_resolvent(1j * x, q)


def test_domain_errors():
    p = SpectralProblem.from_tan(1.0, 1.0)
    with pytest.raises(DomainError):
        kernel_p(1.5, 1.0, p)
    with pytest.raises(DomainError):
        kernel_q(0.0, 1.0, p)
    with pytest.raises(DomainError):
        trace_resolvent(1.0, SpectralProblem(1.0, BoundaryCondition.neumann(), BoundaryCondition.neumann()))


def test_evaluate_bundle():
    p = SpectralProblem.from_tan(1.0, 1.0)
    ev = evaluate(1.5j, p)
    assert ev.trace == trace_resolvent(1.5j, p)
    assert 0.0 < ev.kernel_norm == pytest.approx(kernel_norm(1.5j, p))
    lam = np.array(positive_eigenvalues(p, 3000))
    hs = math.sqrt(float(np.sum(1.0 / np.abs(lam + 2.25) ** 2)))
    # a 24-point product rule does not resolve the kink on the diagonal
    assert ev.kernel_norm == pytest.approx(hs, rel=5e-3)
