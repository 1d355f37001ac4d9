r"""Secular functions whose zeros are the eigenvalues.

With Dirichlet data at ``r = R`` the eigenvalues ``lambda = mu^2`` are the
zeros of the homogenized secular function

.. math::

    F_h(\mu) = \cos\theta_1\Big[\tfrac{\pi}{2}Y_0(\mu R)
        - (\log\mu - \log 2 + \gamma)J_0(\mu R)\Big] - \sin\theta_1 J_0(\mu R)
      = \cos\theta_1\big[\log R\,J_0(\mu R) - S(\mu R)\big] - \sin\theta_1 J_0(\mu R),

which equals ``cos(theta_1) * F`` for the usual
``F = (pi/2) Y0(mu R) - (log mu - kappa) J0(mu R)`` and reduces to
``-J0(mu R)`` for the Friedrichs realization.  The second form is entire
and even in ``mu``; it is the one evaluated here.

For a Robin condition at ``r = R`` the secular function is the boundary
form applied to the solution ``p(r, mu)`` that is admissible at ``r = 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError, FriedrichsUndefined, PoleAt
from .sae import BoundaryCondition, SpectralProblem
from .specfun import (
    LOG2_MINUS_GAMMA,
    Z_MAX,
    bessel_block,
    bessel_block_real,
    modified_bessel_scaled,
)

POLE_TOL = 1e-14
SMALL_Y = 1.0  # below this x R the imaginary-axis log-derivative uses the power series


@dataclass(frozen=True)
class SecularValue:
    """Value ``f`` of a secular function and its derivative ``df`` in ``mu``."""

    f: complex
    df: complex

    @property
    def log_derivative(self) -> complex:
        return self.df / self.f


@dataclass(frozen=True)
class AsymptoticSeries:
    """``amp / (x (log x - kappa)) + sum coeff * x**exponent`` for ``x >= valid_from``.

    ``leading_log`` is ``(amp, kappa)`` or None; ``power_coeffs`` is a list of
    ``(exponent, coefficient)`` with strictly decreasing exponents.
    """

    leading_log: tuple[float, float] | None
    power_coeffs: tuple[tuple[float, float], ...] = field(default_factory=tuple)
    valid_from: float = 0.0

    def __post_init__(self):
        exps = [e for e, _ in self.power_coeffs]
        if any(b >= a for a, b in zip(exps, exps[1:])):
            raise ValueError("exponents must be strictly decreasing")

    def __call__(self, x: float) -> float:
        if x < self.valid_from:
            raise DomainError(f"series evaluated at x = {x} below valid_from = {self.valid_from}")
        total = 0.0
        if self.leading_log is not None:
            amp, kap = self.leading_log
            total += amp / (x * (math.log(x) - kap))
        for e, coef in self.power_coeffs:
            total += coef * x**e
        return total


def kappa(bc0: BoundaryCondition) -> float:
    """``log 2 - gamma - tan(theta_1)``."""
    if bc0.c == 0.0:
        raise FriedrichsUndefined("kappa is undefined for the Friedrichs realization")
    return LOG2_MINUS_GAMMA - bc0.s / bc0.c


def _check_mu(mu: complex, R: float) -> complex:
    mu = complex(mu)
    if mu == 0:
        raise DomainError("mu = 0 is excluded")
    if mu.imag == 0.0 and mu.real < 0.0:
        raise DomainError("mu on the branch cut (negative real axis)")
    if abs(mu) * R > Z_MAX:
        raise DomainError(f"|mu R| = {abs(mu) * R:.6g} exceeds Z_MAX = {Z_MAX}")
    return mu


def _require_dirichlet(p: SpectralProblem) -> None:
    if not p.is_dirichlet:
        raise DomainError("this operation needs the Dirichlet condition at r = R")


def _dirichlet_from_block(mu, R, c, s, blk):
    j0, j1, sv, dsv = blk
    logR = math.log(R)
    f = c * (logR * j0 - sv) - s * j0
    df = -R * (c * (logR * j1 + dsv) - s * j1)
    return f, df


def secular_f(mu: complex, p: SpectralProblem) -> SecularValue:
    """Homogenized Dirichlet secular function and its mu-derivative."""
    _require_dirichlet(p)
    mu = _check_mu(mu, p.R)
    f, df = _dirichlet_from_block(mu, p.R, p.bc0.c, p.bc0.s, bessel_block(mu * p.R))
    return SecularValue(f, df)


def secular_f_real(mu: float, p: SpectralProblem) -> tuple[float, float]:
    """Real-axis Dirichlet secular function without the ``Z_MAX`` restriction."""
    return _dirichlet_from_block(mu, p.R, p.bc0.c, p.bc0.s, bessel_block_real(mu * p.R))


def secular_f_paper(mu: complex, p: SpectralProblem) -> SecularValue:
    """``F = (pi/2) Y0(mu R) - (log mu - kappa) J0(mu R)``, i.e. ``F_h / cos(theta_1)``."""
    c = p.bc0.c
    if c == 0.0:
        raise FriedrichsUndefined("F is undefined for the Friedrichs realization")
    v = secular_f(mu, p)
    return SecularValue(v.f / c, v.df / c)


# ---------------------------------------------------------------------------
# imaginary axis


def _imag_scaled(x: float, p: SpectralProblem):
    """Ratios of ``F_h(ix)`` and ``d/dx F_h(ix)`` to ``I0(xR)``, plus ``log I0(xR)``."""
    if not x > 0.0:
        raise DomainError(f"x must be positive, got {x!r}")
    R, c, s = p.R, p.bc0.c, p.bc0.s
    y = x * R
    i0e, i1e, k0e, k1e = modified_bessel_scaled(y)
    damp = math.exp(-2.0 * y)
    rho0 = k0e / i0e * damp
    rho1 = k1e / i0e * damp
    q = i1e / i0e
    A = c * (math.log(x) - LOG2_MINUS_GAMMA) + s
    f = -(A + c * rho0)
    df = c * R * rho1 - c / x - A * R * q
    return f, df, math.log(i0e) + y


def secular_f_imag(x: float, p: SpectralProblem) -> tuple[float, float]:
    """``(F_h(ix), d/dx F_h(ix))``; both real."""
    _require_dirichlet(p)
    f, df, log_i0 = _imag_scaled(x, p)
    try:
        scale = math.exp(log_i0)
    except OverflowError:
        scale = math.inf
    return f * scale, df * scale


def log_deriv_imag(x: float, p: SpectralProblem) -> float:
    """``d/dx log F_h(ix)``, equal to ``2x Tr(Delta + x^2)^-1``."""
    _require_dirichlet(p)
    if 0.0 < x * p.R <= SMALL_Y:
        # the K1 and 1/x terms of the scaled form cancel to O(x) here; the power series does not
        v = secular_f(1j * x, p)
        f, df = v.f.real, (1j * v.df).real
    else:
        f, df, _ = _imag_scaled(x, p)
    if abs(f) < POLE_TOL:
        raise PoleAt(f"F(ix) vanishes to {abs(f):.3g} at x = {x!r} (negative eigenvalue)")
    return df / f


def secular_asymptotic(p: SpectralProblem) -> AsymptoticSeries:
    """Large-x expansion of :func:`log_deriv_imag` to order ``x^-2``; remainder ``O(x^-3)``."""
    k = kappa(p.bc0)
    R = p.R
    return AsymptoticSeries(
        leading_log=(1.0, k),
        power_coeffs=((0.0, R), (-1.0, -0.5), (-2.0, -1.0 / (8.0 * R))),
        valid_from=max(1.0, math.exp(k) * 1.0001),
    )


def small_mu_expansion(mu: complex, p: SpectralProblem) -> complex:
    """Two-term expansion of ``F`` near ``mu = 0``: ``a + (mu R)^2/4 (1 - a)`` with ``a = log R - tan theta``."""
    a = math.log(p.R) - p.bc0.tan
    return a + 0.25 * (mu * p.R) ** 2 * (1.0 - a)


# ---------------------------------------------------------------------------
# Robin condition at r = R


def _general_from_block(mu, p: SpectralProblem, blk):
    """Secular function ``cos t2 p'(R) + sin t2 p(R)`` and its mu-derivative."""
    j0, j1, sv, dsv = blk
    R = p.R
    c, s = p.bc0.c, p.bc0.s
    c2, s2 = p.bcR.c, p.bcR.s
    z = mu * R
    logR = math.log(R)
    sq = math.sqrt(R)
    u = c * (logR * j0 - sv) - s * j0
    W = c * (logR * j1 + dsv) - s * j1
    u_r = c * j0 / R - mu * W
    u_mu = -R * W
    dj1 = j0 - j1 / z
    ddsv = -2.0 * j1 / z - dsv / z - sv
    W_z = c * (logR * dj1 + ddsv) - s * dj1
    u_rmu = -c * j1 - W - mu * R * W_z
    P = sq * u
    dP = u / (2.0 * sq) + sq * u_r
    P_mu = sq * u_mu
    dP_mu = u_mu / (2.0 * sq) + sq * u_rmu
    return c2 * dP + s2 * P, c2 * dP_mu + s2 * P_mu


def secular_general(mu: complex, p: SpectralProblem) -> SecularValue:
    """Secular function for an arbitrary condition at ``r = R``.

    With Dirichlet data this is ``sqrt(R) * F_h``.
    """
    mu = _check_mu(mu, p.R)
    f, df = _general_from_block(mu, p, bessel_block(mu * p.R))
    return SecularValue(complex(f), complex(df))


def secular_general_real(mu: float, p: SpectralProblem) -> tuple[float, float]:
    if mu == 0.0:
        raise DomainError("mu = 0 is excluded")
    return _general_from_block(mu, p, bessel_block_real(mu * p.R))


def secular_general_imag_scaled(x: float, p: SpectralProblem) -> float:
    """``F_gen(ix) / I0(xR)``; same sign as ``F_gen(ix)``."""
    if not x > 0.0:
        raise DomainError(f"x must be positive, got {x!r}")
    R, c, s = p.R, p.bc0.c, p.bc0.s
    y = x * R
    i0e, i1e, k0e, k1e = modified_bessel_scaled(y)
    damp = math.exp(-2.0 * y)
    rho0 = k0e / i0e * damp
    rho1 = k1e / i0e * damp
    q = i1e / i0e
    A = c * (math.log(x) - LOG2_MINUS_GAMMA) + s
    u = -c * rho0 - A
    u_r = x * (c * rho1 - A * q)
    sq = math.sqrt(R)
    return p.bcR.c * (u / (2.0 * sq) + sq * u_r) + p.bcR.s * sq * u


def zero_limit_general(p: SpectralProblem) -> tuple[float, float]:
    """Leading behaviour of ``(p(R), p'(R))`` as ``mu -> 0``.

    ``p -> sqrt(r) (c log r - s)``; used to detect a zero mode for Robin data.
    """
    R, c, s = p.R, p.bc0.c, p.bc0.s
    sq = math.sqrt(R)
    u = c * math.log(R) - s
    return sq * u, u / (2.0 * sq) + sq * c / R


__all__ = [
    "AsymptoticSeries",
    "SecularValue",
    "kappa",
    "log_deriv_imag",
    "secular_asymptotic",
    "secular_f",
    "secular_f_imag",
    "secular_f_paper",
    "secular_f_real",
    "secular_general",
    "secular_general_imag_scaled",
    "secular_general_real",
    "small_mu_expansion",
]
