"""Shooting-method eigenvalue oracle, independent of the Bessel machinery.

With ``x = log r`` and ``phi = sqrt(r) psi`` the equation
``-phi'' - phi/(4 r^2) = lambda phi`` becomes ``psi_xx = -lambda e^{2x} psi``,
whose solutions near ``x = -inf`` are ``c1 + c2 x`` plus ``O(r^2)``.  The
singular layer disappears and a uniform step in ``x`` is a graded mesh in
``r``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, optimize

from .errors import BracketFailure, DomainError, StepFailure
from .sae import BoundaryCondition, SpectralProblem

R0_FACTOR = 1e-6
RENORM_EVERY = 64
_CHUNKS = 16


@dataclass(frozen=True)
class ShootState:
    """``phi`` and ``phi'`` at radius ``r``."""

    r: float
    phi: float
    dphi: float

    def __post_init__(self):
        if not (self.r > 0.0 and math.isfinite(self.phi) and math.isfinite(self.dphi)):
            raise StepFailure(f"invalid state {self}")


def _psi_initial(x: float, c1: float, c2: float, lam: float) -> tuple[float, float]:
    """Two-term data plus the first ``lambda r^2`` correction."""
    e = lam * math.exp(2.0 * x)
    psi = c1 + c2 * x - 0.25 * e * (c1 + c2 * (x - 1.0))
    dpsi = c2 - 0.5 * e * (c1 + c2 * x - 0.5 * c2)
    return psi, dpsi


def initial_data(r0: float, bc0: BoundaryCondition, mu: float, negative: bool = False) -> ShootState:
    """State at ``r0`` for the solution with ``(c1, c2) = (-sin theta_1, cos theta_1)``.

    ``lambda = mu^2``, or ``-mu^2`` when ``negative`` is set.  The error is
    ``O(r0^{9/2} log r0)``.
    """
    if not r0 > 0.0:
        raise DomainError("r0 must be positive")
    lam = -mu * mu if negative else mu * mu
    x = math.log(r0)
    psi, dpsi = _psi_initial(x, -bc0.s, bc0.c, lam)
    sq = math.sqrt(r0)
    return ShootState(r0, sq * psi, (0.5 * psi + dpsi) / sq)


def _rhs(lam):
    def f(x, y):
        return [y[1], -lam * math.exp(2.0 * x) * y[0]]

    return f


def _integrate_adaptive(lam: float, x0: float, x1: float, y0, rtol: float):
    y = np.array(y0, dtype=float)
    edges = np.linspace(x0, x1, _CHUNKS + 1)
    for a, b in zip(edges, edges[1:]):
        sol = integrate.solve_ivp(_rhs(lam), (a, b), y, method="DOP853", rtol=rtol, atol=1e-300)
        if not sol.success:
            raise StepFailure(sol.message)
        y = sol.y[:, -1]
        scale = np.max(np.abs(y))
        if not math.isfinite(scale) or scale == 0.0:
            raise StepFailure("solution overflowed or vanished")
        y = y / scale
    return y


def _integrate_rk4(lam: float, x0: float, x1: float, y0, steps: int):
    h = (x1 - x0) / steps
    psi, dpsi = float(y0[0]), float(y0[1])
    x = x0
    for k in range(steps):
        e0 = -lam * math.exp(2.0 * x)
        eh = -lam * math.exp(2.0 * (x + 0.5 * h))
        e1 = -lam * math.exp(2.0 * (x + h))
        k1p, k1d = dpsi, e0 * psi
        k2p, k2d = dpsi + 0.5 * h * k1d, eh * (psi + 0.5 * h * k1p)
        k3p, k3d = dpsi + 0.5 * h * k2d, eh * (psi + 0.5 * h * k2p)
        k4p, k4d = dpsi + h * k3d, e1 * (psi + h * k3p)
        psi += h * (k1p + 2 * k2p + 2 * k3p + k4p) / 6.0
        dpsi += h * (k1d + 2 * k2d + 2 * k3d + k4d) / 6.0
        x += h
        if (k + 1) % RENORM_EVERY == 0:
            scale = max(abs(psi), abs(dpsi))
            if not math.isfinite(scale) or scale == 0.0:
                raise StepFailure("solution overflowed or vanished")
            psi, dpsi = psi / scale, dpsi / scale
    return np.array([psi, dpsi])


def shoot(
    mu: float,
    p: SpectralProblem,
    r0: float | None = None,
    steps: int | None = None,
    negative: bool = False,
    rtol: float = 1e-12,
) -> float:
    """Normalized boundary residual ``(cos t2 phi'(R) + sin t2 phi(R)) / |(phi(R), R phi'(R))|``.

    Parameters
    ----------
    mu : float
        ``lambda = mu^2`` (or ``-mu^2`` with ``negative=True``).
    r0 : float, optional
        Start radius, default ``1e-6 R``.
    steps : int, optional
        Fixed RK4 steps on the graded mesh; adaptive DOP853 when omitted.
    """
    R = p.R
    r0 = R0_FACTOR * R if r0 is None else r0
    if not 0.0 < r0 <= 1e-4 * R:
        raise DomainError("need 0 < r0 <= 1e-4 R")
    lam = -mu * mu if negative else mu * mu
    x0, x1 = math.log(r0), math.log(R)
    y0 = _psi_initial(x0, -p.bc0.s, p.bc0.c, lam)
    if steps is None:
        psi, dpsi = _integrate_adaptive(lam, x0, x1, y0, rtol)
    else:
        psi, dpsi = _integrate_rk4(lam, x0, x1, y0, steps)
    sq = math.sqrt(R)
    phi = sq * psi
    dphi = (0.5 * psi + dpsi) / sq
    res = p.bcR.c * dphi + p.bcR.s * phi
    return res / math.hypot(phi, R * dphi)


def _bracket_roots(fn, grid) -> list[tuple[float, float]]:
    vals = [fn(g) for g in grid]
    return [(a, b) for a, b, fa, fb in zip(grid, grid[1:], vals, vals[1:]) if fa * fb < 0.0]


def oracle_eigenvalues(p: SpectralProblem, n: int, r0: float | None = None) -> list[float]:
    """Lowest ``n`` nonzero eigenvalues found by shooting, negative ones first.

    A zero mode is not reported; it has no sign change to bracket.
    """
    R = p.R
    neg_fn = lambda x: shoot(x, p, r0, negative=True)  # noqa: E731
    xs = np.geomspace(1e-4 / R, 200.0 / R, 120)
    out = []
    for a, b in _bracket_roots(neg_fn, xs):
        x = optimize.brentq(neg_fn, a, b, xtol=1e-300, rtol=1e-13, maxiter=200)
        out.append(-x * x)
    out.sort()
    if len(out) >= n:
        return out[:n]
    pos_fn = lambda m: shoot(m, p, r0)  # noqa: E731
    step = math.pi / (8.0 * R)
    lo = 1e-4 / R
    found: list[float] = []
    while len(found) < n - len(out):
        grid = lo + step * np.arange(65)
        for a, b in _bracket_roots(pos_fn, grid):
            m = optimize.brentq(pos_fn, a, b, xtol=1e-300, rtol=1e-13, maxiter=200)
            found.append(m * m)
        lo = grid[-1]
        if lo > 1e4 / R:
            raise BracketFailure(f"shooting found {len(found)} positive roots below mu = {lo:.3g}")
    return out + sorted(found)[: n - len(out)]


__all__ = ["ShootState", "initial_data", "oracle_eigenvalues", "shoot"]
