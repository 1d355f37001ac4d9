"""Heat trace from the spectrum and its small-t expansion.

For ``theta_1 != pi/2`` the trace carries an inverse-log ladder on top of
the usual half-integer power ladder::

    Tr exp(-t Delta) ~ sum_k alpha_k (log t)^-k + sum_k beta_k t^{(k-1)/2},
    alpha_k = -(1/(k pi)) Im int_0^inf e^{-x} (log x + i pi - 2 kappa)^k dx.

The power coefficients follow from the large-x expansion of the resolvent
trace, ``beta_{k-1} = b_k / Gamma(k/2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate

from .sae import SpectralProblem
from .secular import kappa
from .specfun import EULER_GAMMA
from .spectrum import cached_spectrum, clear_cache
from .tails import spectral_tail_heat

T_MIN = 1e-6
SUM_CUTOFF = 1e-16  # relative size of the first omitted term
ZETA3 = 1.2020569031595942
ZETA5 = 1.0369277551433699
_ZETA_INT = {2: math.pi**2 / 6.0, 3: ZETA3, 4: math.pi**4 / 90.0, 5: ZETA5, 6: math.pi**6 / 945.0}
K_MAX = 6


@dataclass(frozen=True)
class HeatTraceSample:
    """One heat-trace value with the estimated size of the neglected tail."""

    t: float
    value: float
    tail_bound: float

    @property
    def accepted(self) -> bool:
        return self.tail_bound <= 1e-10 * max(1.0, abs(self.value))


# ---------------------------------------------------------------------------
# spectral sum


def _count_needed(t: float, R: float, log_sum: float) -> int:
    lam_cut = (-math.log(SUM_CUTOFF) + max(log_sum, 0.0) + 2.0) / t
    return int(R * math.sqrt(lam_cut) / math.pi) + 8


def heat_trace(t: float, p: SpectralProblem, eigenvalues=None, jobs: int = 1) -> HeatTraceSample:
    """``sum_j exp(-t lambda_j)`` over every eigenvalue, negative and zero included.

    Enough eigenvalues are computed that the first omitted term is below
    ``1e-16`` of the sum; the omitted part is estimated from the asymptotic
    root spacing ``pi/R`` and added, and its size is returned as
    ``tail_bound``.
    """
    t = float(t)
    if not t > 0.0:
        raise ValueError(f"t must be positive, got {t!r}")
    if eigenvalues is not None:
        lam = np.sort(np.asarray(eigenvalues, dtype=float))
    else:
        sp = cached_spectrum(p, 16, jobs)
        low = sp.all_eigenvalues()[0]
        need = _count_needed(t, p.R, -t * low)
        sp = cached_spectrum(p, need, jobs)
        lam = sp.all_eigenvalues()
    value = math.fsum(np.exp(-t * lam))
    tail = spectral_tail_heat(math.sqrt(lam[-1]), p.R, t) if lam[-1] > 0 else math.inf
    return HeatTraceSample(t, value + tail, abs(tail))


# ---------------------------------------------------------------------------
# alpha_k


@lru_cache(maxsize=None)
def _polygamma_at_one(j: int) -> float:
    """``psi^{(j)}(1)``."""
    if j == 0:
        return -EULER_GAMMA
    return (-1) ** (j + 1) * math.factorial(j) * _ZETA_INT[j + 1]


@lru_cache(maxsize=None)
def gamma_derivative_at_one(m: int) -> float:
    """``Gamma^{(m)}(1) = int_0^inf e^{-x} (log x)^m dx``.

    From ``Gamma' = Gamma psi``:
    ``Gamma^{(n+1)}(1) = sum_j C(n, j) Gamma^{(n-j)}(1) psi^{(j)}(1)``.
    """
    if m == 0:
        return 1.0
    n = m - 1
    return math.fsum(math.comb(n, j) * gamma_derivative_at_one(n - j) * _polygamma_at_one(j) for j in range(n + 1))


def _alpha_moments(k: int, kap: float) -> float:
    shift = complex(-2.0 * kap, math.pi)
    total = sum(math.comb(k, m) * gamma_derivative_at_one(m) * shift ** (k - m) for m in range(k + 1))
    return -total.imag / (k * math.pi)


def _alpha_quadrature(k: int, kap: float) -> float:
    shift = complex(-2.0 * kap, math.pi)

    def integrand(u):
        return math.exp(u - math.exp(u)) * ((u + shift) ** k).imag

    # e^{u - e^u} is negligible outside [-40, 4]
    pieces = [(-60.0, -20.0), (-20.0, -5.0), (-5.0, 0.0), (0.0, 2.0), (2.0, 5.0)]
    val = math.fsum(integrate.quad(integrand, a, b, epsabs=1e-14, epsrel=1e-12, limit=200)[0] for a, b in pieces)
    return -val / (k * math.pi)


def alpha_k(k: int, kappa_value: float, method: str = "moments") -> float:
    """Inverse-log heat coefficient ``alpha_k``.

    Parameters
    ----------
    k : int
        Order, ``1 <= k <= 6`` for ``method="moments"``.
    kappa_value : float
    method : {"moments", "quadrature"}
        Binomial expansion over ``Gamma^{(m)}(1)``, or direct quadrature.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if method == "moments":
        if k > K_MAX:
            raise ValueError(f"moment route is limited to k <= {K_MAX}")
        return _alpha_moments(k, kappa_value)
    if method == "quadrature":
        return _alpha_quadrature(k, kappa_value)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# ell(t)


def ell(t: float, kappa_value: float) -> complex:
    """``int_1^inf e^{-t x} / (x (log x + i pi - 2 kappa)) dx`` via ``u = log x``."""
    if not t > 0.0:
        raise ValueError("t must be positive")
    shift = complex(-2.0 * kappa_value, math.pi)
    u_end = math.log(50.0 / t)  # e^{-t e^u} < e^{-50} beyond
    u_knee = max(math.log(1.0 / t), 0.0)
    edges = sorted({0.0, u_knee * 0.5, u_knee, min(u_knee + 2.0, u_end), u_end})
    edges = [e for e in edges if e <= u_end]

    def part(fn):
        return math.fsum(
            integrate.quad(fn, a, b, epsabs=1e-13, epsrel=1e-13, limit=400)[0] for a, b in zip(edges, edges[1:])
        )

    re = part(lambda u: math.exp(-t * math.exp(u)) * (1.0 / (u + shift)).real)
    im = part(lambda u: math.exp(-t * math.exp(u)) * (1.0 / (u + shift)).imag)
    return complex(re, im)


def ell_imag_limit(kappa_value: float) -> float:
    """``lim_{t -> 0+} Im ell(t) = -(pi/2 + arctan(2 kappa / pi))``."""
    return -(0.5 * math.pi + math.atan(2.0 * kappa_value / math.pi))


# ---------------------------------------------------------------------------
# asymptotics


def beta_coefficients(R: float) -> tuple[float, float, float]:
    """``(beta_0, beta_1, beta_2) = (R/(2 sqrt(pi)), -1/4, -1/(8 R sqrt(pi)))``."""
    sp = math.sqrt(math.pi)
    return R / (2.0 * sp), -0.25, -1.0 / (8.0 * R * sp)


def power_part(t: float, R: float) -> float:
    b0, b1, b2 = beta_coefficients(R)
    return b0 / math.sqrt(t) + b1 + b2 * math.sqrt(t)


def inverse_log_part(t: float, N: int, kappa_value: float) -> float:
    lt = math.log(t)
    return math.fsum(alpha_k(k, kappa_value) * lt ** (-k) for k in range(1, N + 1))


def heat_asymptotic(t: float, N: int, p: SpectralProblem) -> float:
    """``sum_{k<=N} alpha_k (log t)^-k + beta_0 t^-1/2 + beta_1 + beta_2 t^1/2``."""
    if not 0.0 < t < 0.5:
        raise ValueError("heat_asymptotic needs 0 < t < 0.5")
    if not 0 <= N <= K_MAX:
        raise ValueError(f"N must lie in [0, {K_MAX}]")
    return inverse_log_part(t, N, kappa(p.bc0)) + power_part(t, p.R)


def fit_heat_coefficients(ts, values, R: float, with_log: bool = True):
    """Least-squares fit of ``b0 t^-1/2 + b1 + b2 t^1/2 + b3 t (+ a1 / log t)``.

    Returns the coefficient vector ``[b0, b1, b2, b3(, a1)]``.  Used only to
    check the derived coefficients, never to set them.
    """
    ts = np.asarray(ts, dtype=float)
    y = np.asarray(values, dtype=float)
    cols = [ts**-0.5, np.ones_like(ts), ts**0.5, ts]
    if with_log:
        cols.append(1.0 / np.log(ts))
    A = np.column_stack(cols)
    w = ts**0.5  # balance the t^-1/2 growth
    coef, *_ = np.linalg.lstsq(A * w[:, None], y * w, rcond=None)
    return coef


def fit_alpha1(ts, values, R: float) -> float:
    """``alpha_1`` from a fit of ``values - power_part`` to ``a1/log t + c t``."""
    ts = np.asarray(ts, dtype=float)
    resid = np.asarray(values, dtype=float) - np.array([power_part(t, R) for t in ts])
    A = np.column_stack([1.0 / np.log(ts), ts])
    coef, *_ = np.linalg.lstsq(A, resid, rcond=None)
    return float(coef[0])


__all__ = [
    "HeatTraceSample",
    "alpha_k",
    "beta_coefficients",
    "clear_cache",
    "ell",
    "ell_imag_limit",
    "fit_alpha1",
    "fit_heat_coefficients",
    "gamma_derivative_at_one",
    "heat_asymptotic",
    "heat_trace",
    "inverse_log_part",
    "power_part",
]
