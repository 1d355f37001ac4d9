"""Resolvent kernel of the Dirichlet problem and its trace.

``p(r, mu)`` is the solution admissible at ``r = 0`` and ``q(r, mu)`` the one
vanishing at ``r = R``.  Their Wronskian ``p q' - p' q`` equals
``-(2/pi) F_h(mu)``, so

    G(r, s) = pi p(min) q(max) / (2 F_h(mu)),
    Tr (Delta - mu^2)^-1 = -F_h'(mu) / (2 mu F_h(mu)).

The log-derivative does not depend on how ``F`` is normalized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .errors import DomainError, EigenvalueHit, PoleAt
from .tails import spectral_tail_resolvent
from .sae import SpectralProblem
from .secular import AsymptoticSeries, _check_mu, _require_dirichlet, kappa, log_deriv_imag, secular_f
from .specfun import bessel_block
from .spectrum import spectrum

HIT_TOL = 1e-13


@dataclass(frozen=True)
class ResolventEval:
    """Trace of the resolvent at ``lambda = mu^2`` with a kernel-size diagnostic.

    ``kernel_norm`` is a Gauss-Legendre estimate of the Hilbert-Schmidt norm.
    """

    mu: complex
    kernel_norm: float
    trace: complex


def _check_r(r: float, R: float) -> float:
    r = float(r)
    if not (0.0 < r <= R * (1.0 + 1e-15)):
        raise DomainError(f"r = {r!r} outside (0, R]")
    return min(r, R)


def kernel_p(r: float, mu: complex, p: SpectralProblem) -> complex:
    """``sqrt(r) [cos(theta_1) ((pi/2) Y0(mu r) - (log mu - log2 + gamma) J0(mu r)) - sin(theta_1) J0(mu r)]``."""
    r = _check_r(r, p.R)
    mu = _check_mu(mu, p.R)
    j0, _, sv, _ = bessel_block(mu * r)
    return math.sqrt(r) * (p.bc0.c * (math.log(r) * j0 - sv) - p.bc0.s * j0)


def kernel_q(r: float, mu: complex, p: SpectralProblem) -> complex:
    """``sqrt(r) (Y0(mu R) J0(mu r) - J0(mu R) Y0(mu r))``, written without ``log mu``."""
    r = _check_r(r, p.R)
    mu = _check_mu(mu, p.R)
    j0R, _, sR, _ = bessel_block(mu * p.R)
    j0r, _, sr, _ = bessel_block(mu * r)
    inner = math.log(p.R / r) * j0R * j0r - sR * j0r + j0R * sr
    return math.sqrt(r) * (2.0 / math.pi) * inner


def _pq_derivs(r: float, mu: complex, p: SpectralProblem):
    """``(p, p', q, q')`` at ``r`` (derivatives in r)."""
    c, s = p.bc0.c, p.bc0.s
    R = p.R
    j0R, _, sR, _ = bessel_block(mu * R)
    j0, j1, sv, dsv = bessel_block(mu * r)
    sq = math.sqrt(r)
    lr = math.log(r)
    u = c * (lr * j0 - sv) - s * j0
    u_r = c * j0 / r - mu * (c * (lr * j1 + dsv) - s * j1)
    pv = sq * u
    dp = u / (2.0 * sq) + sq * u_r
    k = 2.0 / math.pi
    w = math.log(R / r) * j0R * j0 - sR * j0 + j0R * sv
    w_r = -j0R * j0 / r - mu * (math.log(R / r) * j0R * j1 - sR * j1 - j0R * dsv)
    qv = sq * k * w
    dq = k * (w / (2.0 * sq) + sq * w_r)
    return pv, dp, qv, dq


def wronskian(mu: complex, p: SpectralProblem, r: float | None = None) -> complex:
    """``p q' - p' q``, evaluated at ``r`` (default ``R/2``); equals ``-(2/pi) F_h``."""
    mu = _check_mu(mu, p.R)
    r = 0.5 * p.R if r is None else _check_r(r, p.R)
    pv, dp, qv, dq = _pq_derivs(r, mu, p)
    return pv * dq - dp * qv


def _denominator(mu: complex, p: SpectralProblem):
    _require_dirichlet(p)
    v = secular_f(mu, p)
    scale = max(1.0, abs(v.df))
    if abs(v.f) < HIT_TOL * scale:
        raise EigenvalueHit(f"mu^2 = {mu * mu!r} is an eigenvalue to within {abs(v.f):.3g}")
    return v


def resolvent_kernel(r: float, s: float, mu: complex, p: SpectralProblem) -> complex:
    """``G(r, s)`` with ``(Delta - mu^2) G(., s) = delta_s``."""
    mu = _check_mu(mu, p.R)
    v = _denominator(mu, p)
    lo, hi = (r, s) if r <= s else (s, r)
    return math.pi * kernel_p(lo, mu, p) * kernel_q(hi, mu, p) / (2.0 * v.f)


def trace_resolvent(mu: complex, p: SpectralProblem) -> complex:
    """``Tr (Delta - mu^2)^-1 = -F_h'(mu) / (2 mu F_h(mu))``.

    On the positive imaginary axis ``mu = ix`` this is ``L(x) / (2x)`` with
    ``L`` from :func:`log_deriv_imag`, which has no upper limit on ``x``.
    """
    mu = complex(mu)
    if mu.real == 0.0 and mu.imag > 0.0:
        _require_dirichlet(p)
        try:
            return complex(log_deriv_imag(mu.imag, p) / (2.0 * mu.imag))
        except PoleAt as exc:
            raise EigenvalueHit(str(exc)) from exc
    mu = _check_mu(mu, p.R)
    v = _denominator(mu, p)
    return -v.df / (2.0 * mu * v.f)


def _cquad(fn, a: float, b: float, points=None, tol: float = 1e-11) -> complex:
    opts = dict(limit=400, epsabs=tol, epsrel=tol, points=points)
    re = integrate.quad(lambda x: fn(x).real, a, b, **opts)[0]
    im = integrate.quad(lambda x: fn(x).imag, a, b, **opts)[0]
    return complex(re, im)


def trace_by_quadrature(mu: complex, p: SpectralProblem) -> complex:
    """``int_0^R G(r, r) dr`` by adaptive quadrature, refined near ``r = 0``."""
    mu = _check_mu(mu, p.R)
    v = _denominator(mu, p)
    R = p.R
    diag = lambda r: kernel_p(r, mu, p) * kernel_q(r, mu, p)  # noqa: E731
    # the integrand is bounded but behaves like r log^2 r at the origin
    edges = [0.0] + [R * 10.0**-k for k in range(8, 0, -1)] + [R]
    total = sum(_cquad(diag, a, b) for a, b in zip(edges, edges[1:]))
    return math.pi * total / (2.0 * v.f)


def kernel_norm(mu: complex, p: SpectralProblem, nodes: int = 24) -> float:
    """Hilbert-Schmidt norm of the kernel on a Gauss-Legendre product grid."""
    mu = _check_mu(mu, p.R)
    v = _denominator(mu, p)
    x, w = np.polynomial.legendre.leggauss(nodes)
    r = 0.5 * p.R * (x + 1.0)
    w = 0.5 * p.R * w
    pv = np.array([kernel_p(ri, mu, p) for ri in r])
    qv = np.array([kernel_q(ri, mu, p) for ri in r])
    lo = np.minimum.outer(np.arange(nodes), np.arange(nodes))
    hi = np.maximum.outer(np.arange(nodes), np.arange(nodes))
    G = math.pi * pv[lo] * qv[hi] / (2.0 * v.f)
    return float(math.sqrt(np.sum(np.abs(G) ** 2 * np.outer(w, w))))


def evaluate(mu: complex, p: SpectralProblem) -> ResolventEval:
    return ResolventEval(complex(mu), kernel_norm(mu, p), trace_resolvent(mu, p))


def resolvent_trace_expansion(p: SpectralProblem) -> AsymptoticSeries:
    """Series for ``Tr (Delta - lambda)^-1`` in the variable ``y = -lambda``.

    ``1/(y (log y - 2 kappa)) + b1 y^{-1/2} + b2 y^{-1} + b3 y^{-3/2}`` with
    ``b1 = R/2``, ``b2 = -1/4``, ``b3 = -1/(16 R)``.  Expanding the first term
    in ``1/log y`` gives the coefficients ``a_k = (2 kappa)^k``.
    """
    k = kappa(p.bc0)
    R = p.R
    return AsymptoticSeries(
        leading_log=(1.0, 2.0 * k),
        power_coeffs=((-0.5, R / 2.0), (-1.0, -0.25), (-1.5, -1.0 / (16.0 * R))),
        valid_from=max(1.0, math.exp(2.0 * k) * 1.0001),
    )


def log_coefficients(p: SpectralProblem, n: int) -> list[float]:
    """``a_k = (2 kappa)^k`` for ``k = 0..n-1``."""
    k2 = 2.0 * kappa(p.bc0)
    return [k2**k for k in range(n)]


def trace_spectral_sum(mu: complex, p: SpectralProblem, n: int = 2000, eigenvalues=None) -> complex:
    """``sum_j 1/(lambda_j - mu^2)`` over ``n`` positive eigenvalues plus a tail estimate.

    The tail beyond ``lambda_n`` uses the spacing ``mu_{j+1} - mu_j -> pi/R``
    anchored at the last computed root.
    """
    mu = complex(mu)
    m2 = mu * mu
    if eigenvalues is None:
        sp = spectrum(p, n)
        lam = np.asarray(sp.all_eigenvalues())
        pos = np.asarray(sp.positive)
    else:
        lam = np.asarray(eigenvalues, dtype=float)
        pos = lam[lam > 0.0]
    head = complex(np.sum(1.0 / (lam.astype(complex) - m2)))
    return head + spectral_tail_resolvent(math.sqrt(pos[-1]), len(pos), p.R, mu)


__all__ = [
    "ResolventEval",
    "evaluate",
    "kernel_norm",
    "kernel_p",
    "kernel_q",
    "log_coefficients",
    "resolvent_kernel",
    "resolvent_trace_expansion",
    "trace_by_quadrature",
    "trace_resolvent",
    "trace_spectral_sum",
    "wronskian",
]
