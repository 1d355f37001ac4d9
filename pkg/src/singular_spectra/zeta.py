r"""Spectral zeta function, its branch point at ``s = 0`` and the determinant.

The contour representation used throughout is

.. math::

    \zeta(s) = \frac{\sin\pi s}{\pi}\int_T^\infty x^{-2s}\,\partial_x\log F(ix)\,dx
             + \frac{1}{2\pi i}\int_{\gamma_t}\mu^{-2s}\,\frac{F'(\mu)}{F(\mu)}\,d\mu,

with ``t = iT`` and ``gamma_t`` running from ``t`` to ``-t`` through the
right half-plane, west of every positive root.  On the axis the
log-derivative is split as

    1/(x (log x - kappa)) + R - (1/2 + m)/x + rem(x),       rem = O(x^-2),

where ``m = 2`` when a zero mode is removed (``F`` replaced by ``F/mu^2``)
and ``m = 0`` otherwise.  The first three pieces integrate in closed form
(the first one to ``e^{-2 s kappa} E1(2 s (log T - kappa))``), which
continues ``zeta`` to ``Re s > -1/2`` and exposes the ``log s`` branch point.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate

from .errors import (
    ContourTooClose,
    DomainError,
    FriedrichsUndefined,
    NegativeEigenvalueContour,
    SlowConvergence,
)
from .sae import SpectralProblem
from .secular import _imag_scaled, _require_dirichlet, kappa, secular_f
from .specfun import EULER_GAMMA, Z_MAX, expint_e1
from .spectrum import cached_spectrum, has_zero_mode, negative_eigenvalue

X_MAX = 1e3
MARGIN = 1e-3
DET_ANCHOR = 1e-4


def quad_tol() -> float:
    """Quadrature tolerance, overridable through ``SINGULAR_SPECTRA_QUAD_TOL``."""
    return float(os.environ.get("SINGULAR_SPECTRA_QUAD_TOL", "1e-10"))


# ---------------------------------------------------------------------------
# contours


@dataclass(frozen=True)
class ContourSpec:
    """Path ``gamma_t`` from ``t = iT`` to ``-t``.

    Parameters
    ----------
    t_anchor : complex
        Anchor on the positive imaginary axis.
    mu0 : float
        Where the path crosses the real axis; must lie below the first
        positive root.
    kind : {"rectangle", "ellipse"}
        ``iT -> mu0 + iT -> mu0 - iT -> -iT``, or the half-ellipse
        ``mu0 cos(phi) + i T sin(phi)``.
    nodes : int
        Gauss-Legendre nodes per panel.
    panels : int
        Panels per straight segment (the ellipse gets four times as many).
    detour : tuple of float, optional
        ``(y_low, delta)``: the upper half of the path first runs west to
        ``-delta + iT``, down to ``-delta + i y_low`` and back east, so that an
        imaginary-axis zero between ``y_low`` and ``T`` is enclosed while its
        mirror image is not.
    """

    t_anchor: complex
    mu0: float
    kind: str = "rectangle"
    nodes: int = 32
    panels: int = 8
    detour: tuple[float, float] | None = None

    def __post_init__(self):
        t = complex(self.t_anchor)
        if not (t.real == 0.0 and t.imag > 0.0):
            raise DomainError("t_anchor must lie on the positive imaginary axis")
        if self.kind not in ("rectangle", "ellipse"):
            raise DomainError(f"unknown contour kind {self.kind!r}")
        if self.detour is not None and self.kind != "rectangle":
            raise DomainError("detours are only available for rectangles")
        if not self.mu0 > 0.0:
            raise DomainError("mu0 must be positive")
        object.__setattr__(self, "t_anchor", t)

    @property
    def T(self) -> float:
        return self.t_anchor.imag

    def vertices(self) -> list[complex]:
        T, m0 = self.T, self.mu0
        if self.kind != "rectangle":
            raise DomainError("an ellipse has no vertices")
        if self.detour is None:
            return [1j * T, m0 + 1j * T, m0 - 1j * T, -1j * T]
        y_low, delta = self.detour
        return [1j * T, -delta + 1j * T, -delta + 1j * y_low, m0 + 1j * y_low, m0 - 1j * T, -1j * T]

    def quadrature(self) -> tuple[np.ndarray, np.ndarray]:
        """Nodes ``mu_k`` and complex weights ``w_k`` with ``sum w_k f(mu_k) ~ int f dmu``."""
        x, w = np.polynomial.legendre.leggauss(self.nodes)
        mus, ws = [], []
        if self.kind == "ellipse":
            n = 4 * self.panels
            edges = np.linspace(0.5 * math.pi, -0.5 * math.pi, n + 1)
            for a, b in zip(edges, edges[1:]):
                phi = 0.5 * (b + a) + 0.5 * (b - a) * x
                mus.append(self.mu0 * np.cos(phi) + 1j * self.T * np.sin(phi))
                dmu = -self.mu0 * np.sin(phi) + 1j * self.T * np.cos(phi)
                ws.append(0.5 * (b - a) * w * dmu)
        else:
            verts = self.vertices()
            for a, b in zip(verts, verts[1:]):
                edges = [a + (b - a) * k / self.panels for k in range(self.panels + 1)]
                for pa, pb in zip(edges, edges[1:]):
                    mus.append(0.5 * (pb + pa) + 0.5 * (pb - pa) * x)
                    ws.append(0.5 * (pb - pa) * w)
        return np.concatenate(mus), np.concatenate(ws)


def _zeros_near(p: SpectralProblem) -> list[complex]:
    """Zeros of the (zero-mode reduced) secular function that a path could approach."""
    zeros: list[complex] = []
    sp = cached_spectrum(p, 4)
    zeros.extend(complex(math.sqrt(lam)) for lam in sp.positive[:4])
    if sp.negative is not None:
        x = math.sqrt(-sp.negative)
        zeros.extend([1j * x, -1j * x])
    return zeros


def check_contour(p: SpectralProblem, c: ContourSpec) -> None:
    """Raise ContourTooClose if ``c`` leaves ``|mu R| <= Z_MAX`` or nears a zero."""
    mus, _ = c.quadrature()
    pts = np.concatenate([mus, np.array(c.vertices() if c.kind == "rectangle" else [c.t_anchor])])
    if np.max(np.abs(pts)) * p.R > Z_MAX:
        raise ContourTooClose(f"path leaves |mu R| <= {Z_MAX}")
    if np.any(np.abs(pts) == 0.0):
        raise ContourTooClose("path passes through mu = 0")
    for z in _zeros_near(p):
        d = float(np.min(np.abs(pts - z)))
        if d < MARGIN:
            raise ContourTooClose(f"path passes within {d:.3g} of the zero mu = {z:.12g}")
    sp = cached_spectrum(p, 1)
    if not c.mu0 < math.sqrt(sp.positive[0]):
        raise ContourTooClose("path must cross the real axis below the first positive root")
    if sp.negative is not None:
        x = math.sqrt(-sp.negative)
        if c.T > x and c.detour is None:
            raise NegativeEigenvalueContour(
                f"anchor |t| = {c.T:.6g} exceeds sqrt|lambda_-| = {x:.6g}; the path must detour west of it"
            )
        if c.detour is not None and not c.detour[0] < x < c.T:
            raise NegativeEigenvalueContour("detour does not enclose the negative eigenvalue")


def _order(p: SpectralProblem) -> int:
    return 2 if has_zero_mode(p) else 0


def auto_contour(p: SpectralProblem, purpose: str = "zeta", kind: str = "rectangle") -> ContourSpec:
    """Default ``gamma_t`` for ``zeta_contour`` (``purpose="zeta"``) or ``det_reg`` (``"det"``).

    For the zeta function the anchor needs ``log T > kappa`` with room to
    spare and ``T`` beyond any negative eigenvalue; for the determinant the
    anchor shrinks to ``1e-4`` (or a quarter of the first root with a zero
    mode).  With a negative eigenvalue both purposes put the anchor above
    ``sqrt|lambda_-|`` and detour west around it, which needs
    ``sqrt|lambda_-| R`` somewhat below ``Z_MAX``.
    """
    _require_dirichlet(p)
    R = p.R
    sp = cached_spectrum(p, 1)
    mu1 = math.sqrt(sp.positive[0])
    x_neg = math.sqrt(-sp.negative) if sp.negative is not None else None
    mu0 = 0.5 * mu1
    t_cap = 0.6 * Z_MAX / R
    if purpose == "det" and x_neg is None:
        T = DET_ANCHOR if not sp.zero_mode else 0.25 * mu1
        mu0 = min(mu0, T) if not sp.zero_mode else mu0
        return ContourSpec(1j * T, mu0, kind)
    if purpose == "det":
        # the determinant has no axis piece, so only the negative eigenvalue bounds T from below
        T = min(max(1.5 * x_neg, 1.0 / R), 0.9 * Z_MAX / R)
        if T < x_neg * (1.0 + 1e-2):
            raise ContourTooClose(
                f"sqrt|lambda_-| R = {x_neg * R:.4g} leaves no room for the anchor inside |mu R| <= {Z_MAX}"
            )
        return ContourSpec(1j * T, mu0, "rectangle", detour=(0.5 * x_neg, 0.5 * min(x_neg, mu0)))
    floor = 0.0
    if not p.is_friedrichs:
        floor = math.exp(kappa(p.bc0))
    if x_neg is not None:
        floor = max(floor, x_neg)
    T = max(2.0 * floor, math.exp(1.0) * floor, 1.0 / R) if floor > 0.0 else max(1.0 / R, mu1)
    T = min(T, t_cap)
    if floor > 0.0 and T < 1.2 * floor:
        raise ContourTooClose(
            f"no anchor with T > 1.2 max(e^kappa, sqrt|lambda_-|) = {1.2 * floor:.4g} fits in |mu R| <= {Z_MAX}"
        )
    detour = None
    if x_neg is not None:
        if kind != "rectangle":
            kind = "rectangle"
        detour = (0.5 * x_neg, 0.5 * min(x_neg, mu0))
    return ContourSpec(1j * T, mu0, kind, detour=detour)


@lru_cache(maxsize=64)
def _contour_data(p: SpectralProblem, c: ContourSpec):
    """Nodes, weights and ``d/dmu log F`` along the path (reduced by ``mu^-m``)."""
    check_contour(p, c)
    mus, ws = c.quadrature()
    m = _order(p)
    ld = np.empty(mus.shape, dtype=complex)
    for i, mu in enumerate(mus):
        v = secular_f(complex(mu), p)
        ld[i] = v.df / v.f - m / mu
    return mus, ws, ld


# ---------------------------------------------------------------------------
# imaginary axis


def _asym_parts(p: SpectralProblem):
    """``(has_log, kappa, R, c1)`` for the split of ``d/dx log F(ix)``."""
    m = _order(p)
    if p.is_friedrichs:
        return False, 0.0, p.R, -0.5 - m
    return True, kappa(p.bc0), p.R, -0.5 - m


def remainder(x: float, p: SpectralProblem) -> float:
    """``rem(x)``: the log-derivative on the axis minus its three leading terms."""
    f, df, _ = _imag_scaled(x, p)
    has_log, kap, R, _ = _asym_parts(p)
    val = df / f - R + 0.5 / x
    if has_log:
        val -= 1.0 / (x * (math.log(x) - kap))
    return val


def _remainder_tail(s: complex, X: float, R: float) -> complex:
    """``int_X^inf x^-2s rem(x) dx`` from ``rem ~ -1/(8R x^2) - 1/(8R^2 x^3) - 25/(128 R^3 x^4)``."""
    return (
        -(X ** (-2 * s - 1)) / (8 * R * (2 * s + 1))
        - (X ** (-2 * s - 2)) / (8 * R**2 * (2 * s + 2))
        - 25 * X ** (-2 * s - 3) / (128 * R**3 * (2 * s + 3))
    )


@lru_cache(maxsize=64)
def _axis_nodes(p: SpectralProblem, T: float):
    """Composite Gauss-Legendre nodes in ``u = log x`` on ``[log T, log X_MAX]`` with ``rem`` values."""
    a, b = math.log(T), math.log(X_MAX)
    x, w = np.polynomial.legendre.leggauss(24)
    # panels are finer at the lower end, where rem varies fastest
    width = b - a
    edges = a + width * (np.linspace(0.0, 1.0, 41) ** 2)
    us, ws = [], []
    for lo, hi in zip(edges, edges[1:]):
        us.append(0.5 * (hi + lo) + 0.5 * (hi - lo) * x)
        ws.append(0.5 * (hi - lo) * w)
    u = np.concatenate(us)
    wt = np.concatenate(ws)
    rem = np.array([remainder(math.exp(ui), p) for ui in u])
    return u, wt, rem


def axis_remainder_integral(s: complex, p: SpectralProblem, T: float) -> complex:
    """``int_T^inf x^-2s rem(x) dx``."""
    u, w, rem = _axis_nodes(p, T)
    s = complex(s)
    head = complex(np.sum(w * np.exp((1.0 - 2.0 * s) * u) * rem))
    return head + _remainder_tail(s, X_MAX, p.R)


def axis_remainder_integral_adaptive(s: float, p: SpectralProblem, T: float) -> float:
    """Same integral for real ``s`` by adaptive quadrature (a cross-check)."""
    tol = quad_tol()
    f = lambda u: math.exp((1.0 - 2.0 * s) * u) * remainder(math.exp(u), p)  # noqa: E731
    val, _ = integrate.quad(f, math.log(T), math.log(X_MAX), epsabs=tol, epsrel=tol, limit=400)
    return val + _remainder_tail(complex(s), X_MAX, p.R).real


# ---------------------------------------------------------------------------
# the log integral identity


def _e1_branch(s: complex, a: float) -> complex:
    """``E1(2 s a)`` for ``a > 0`` with ``log(2 s a) = log s + log(2a)``."""
    return expint_e1(2.0 * s * a)


def log_int_identity(s: complex, t_abs: float, kappa_value: float) -> tuple[complex, complex]:
    """Both sides of ``int_T^inf x^-2s dx / (x (log x - kappa)) = -e^{-2 s kappa} Ei(-2 s (log T - kappa))``.

    Returns
    -------
    (lhs, rhs)
        ``lhs`` by quadrature in ``u = log x - kappa``; ``rhs`` through
        ``-Ei(-z) = E1(z)``, the principal continuation to complex ``s``.
    """
    s = complex(s)
    a = math.log(t_abs) - kappa_value
    if not a > 0.0:
        raise DomainError("need log t_abs > kappa")
    if not s.real > 0.0:
        raise DomainError("need Re s > 0")
    pref = cmath.exp(-2.0 * s * kappa_value)
    rhs = pref * _e1_branch(s, a)
    tol = quad_tol()
    u_end = a + 40.0 / s.real
    edges = np.concatenate([[a], a + np.geomspace(1e-3, u_end - a, 30)])

    def part(fn):
        return math.fsum(
            integrate.quad(fn, lo, hi, epsabs=tol * 1e-2, epsrel=tol * 1e-2, limit=200)[0]
            for lo, hi in zip(edges, edges[1:])
        )

    re = part(lambda u: (cmath.exp(-2.0 * s * u) / u).real)
    im = part(lambda u: (cmath.exp(-2.0 * s * u) / u).imag)
    return pref * complex(re, im), rhs


def log_int_small_s(s: complex, t_abs: float, kappa_value: float) -> complex:
    """Leading behaviour ``-e^{-2 s kappa} (log s + gamma + log(2 (log T - kappa)))`` of the right side."""
    a = math.log(t_abs) - kappa_value
    return -cmath.exp(-2.0 * s * kappa_value) * (cmath.log(s) + EULER_GAMMA + math.log(2.0 * a))


# ---------------------------------------------------------------------------
# zeta


@dataclass(frozen=True)
class ZetaDecomposition:
    """``total = singular_part + regular_part`` near ``s = 0``."""

    s: complex
    singular_part: complex
    regular_part: complex
    total: complex


def _closed_axis(s: complex, p: SpectralProblem, T: float) -> complex:
    has_log, kap, R, c1 = _asym_parts(p)
    val = c1 * T ** (-2 * s) / (2 * s) + R * T ** (1 - 2 * s) / (2 * s - 1)
    if has_log:
        val += cmath.exp(-2 * s * kap) * _e1_branch(s, math.log(T) - kap)
    return val


def zeta_contour(s: complex, p: SpectralProblem, c: ContourSpec | None = None) -> complex:
    """Zeta function from the contour representation, valid for ``Re s > -1/2``.

    ``s = 0`` and ``s = 1/2`` are excluded (branch point and pole).  A zero
    mode is left out of the spectrum.
    """
    _require_dirichlet(p)
    s = complex(s)
    if s == 0 or s == 0.5:
        raise DomainError(f"s = {s} is singular")
    if not s.real > -0.5:
        raise DomainError("the continuation used here needs Re s > -1/2")
    c = auto_contour(p, "zeta") if c is None else c
    T = c.T
    if not p.is_friedrichs and not math.log(T) > kappa(p.bc0):
        raise ContourTooClose("anchor must satisfy log|t| > kappa")
    mus, ws, ld = _contour_data(p, c)
    path = complex(np.sum(ws * np.exp(-2.0 * s * np.log(mus)) * ld)) / (2j * math.pi)
    axis = axis_remainder_integral(s, p, T) + _closed_axis(s, p, T)
    return cmath.sin(math.pi * s) / math.pi * axis + path


def singular_part(s: complex, p: SpectralProblem) -> complex:
    """``-(e^{-2 s kappa} sin(pi s)/pi) log s``."""
    if p.is_friedrichs:
        raise FriedrichsUndefined("the Friedrichs zeta function has no branch point")
    s = complex(s)
    return -cmath.exp(-2 * s * kappa(p.bc0)) * cmath.sin(math.pi * s) / math.pi * cmath.log(s)


def zeta_decompose(s: complex, p: SpectralProblem, c: ContourSpec | None = None) -> ZetaDecomposition:
    """Split ``zeta(s)`` near ``s = 0`` into the ``log s`` part and a holomorphic part."""
    if p.is_friedrichs:
        raise FriedrichsUndefined("the Friedrichs zeta function has no branch point")
    s = complex(s)
    if not 0.0 < abs(s) <= 0.25:
        raise DomainError("zeta_decompose needs 0 < |s| <= 0.25")
    total = zeta_contour(s, p, c)
    sing = singular_part(s, p)
    return ZetaDecomposition(s, sing, total - sing, total)


def regular_derivative_at_zero(p: SpectralProblem, c: ContourSpec | None = None, radius: float = 0.05, n: int = 16):
    """``d/ds zeta_reg(s)`` at 0 from Cauchy's formula on ``|s| = radius``."""
    phis = 2.0 * math.pi * (np.arange(n) + 0.5) / n
    vals = []
    for phi in phis:
        s = radius * cmath.exp(1j * phi)
        z = zeta_contour(s, p, c)
        vals.append(z - singular_part(s, p) if not p.is_friedrichs else z)
    return complex(np.mean(np.array(vals) * np.exp(-1j * phis)) / radius)


# ---------------------------------------------------------------------------
# zeta from the eigenvalues


def _phase_prime(z):
    """Derivative of the Bessel phase ``atan2(Y0, J0)`` for large ``z``."""
    z2 = z * z
    return 1.0 + 1.0 / (8 * z2) - 25.0 / (128 * z2 * z2) + 1073.0 / (1024 * z2**3)


_PHASE_COEFFS = (1.0, 1.0 / 8, -25.0 / 128, 1073.0 / 1024)


def _tail_integral(s: complex, p: SpectralProblem, mu_n: float) -> complex:
    """``int_{mu_n}^inf mu^-2s dj/dmu dmu`` with the root-counting density ``dj/dmu``."""
    R = p.R
    total = 0j
    for k, ck in enumerate(_PHASE_COEFFS):
        total += ck * R ** (-2 * k) * mu_n ** (1 - 2 * s - 2 * k) / (2 * s + 2 * k - 1)
    total *= R / math.pi
    if not p.is_friedrichs:
        kap = kappa(p.bc0)
        tol = quad_tol() * 1e-2

        def g(u, part):
            v = cmath.exp(-2 * s * u) / ((u - kap) ** 2 + 0.25 * math.pi**2)
            return v.real if part == 0 else v.imag

        a = math.log(mu_n)
        b = a + 60.0 / max(s.real, 1e-3)
        re = integrate.quad(g, a, b, args=(0,), epsabs=tol, epsrel=tol, limit=400)[0]
        im = integrate.quad(g, a, b, args=(1,), epsabs=tol, epsrel=tol, limit=400)[0]
        total -= 0.5 * complex(re, im)
    return total


def _density(mu: float, p: SpectralProblem) -> float:
    dj = p.R * _phase_prime(mu * p.R) / math.pi
    if not p.is_friedrichs:
        A = math.log(mu) - kappa(p.bc0)
        dj -= 0.5 / (mu * (A * A + 0.25 * math.pi**2))
    return dj


def zeta_spectral(s: complex, p: SpectralProblem, n_terms: int = 2000, tol: float = 1e-8) -> complex:
    """``sum_j lambda_j^-s`` over the positive eigenvalues with an Euler-Maclaurin tail.

    Raises
    ------
    SlowConvergence
        If the first neglected Euler-Maclaurin term exceeds ``tol``.
    DomainError
        With a negative eigenvalue present (branch of ``lambda_-^-s`` is left open).
    """
    _require_dirichlet(p)
    s = complex(s)
    if not s.real > 0.6:
        raise DomainError("zeta_spectral needs Re s > 1/2 + 0.1")
    if negative_eigenvalue(p) is not None:
        raise DomainError("zeta_spectral is restricted to spectra without a negative eigenvalue")
    lam = np.asarray(cached_spectrum(p, n_terms).positive[:n_terms])
    head = complex(np.sum(np.exp(-s * np.log(lam))))
    mu_n = math.sqrt(lam[-1])
    f_n = mu_n ** (-2 * s)
    dj = _density(mu_n, p)
    df_n = -2 * s * mu_n ** (-2 * s - 1) / dj
    tail = _tail_integral(s, p, mu_n) - 0.5 * f_n - df_n / 12.0
    d3 = abs(2 * s * (2 * s + 1) * (2 * s + 2)) * mu_n ** (-2 * s.real - 3) / dj**3
    if d3 / 720.0 > tol:
        raise SlowConvergence(f"Euler-Maclaurin remainder {d3 / 720.0:.3g} exceeds {tol:g} at n = {n_terms}")
    return head + tail


# ---------------------------------------------------------------------------
# determinants


def _c0(R: float) -> float:
    """``lim F(ix) / ((log x - kappa) x^-1/2 e^{xR}) = -1/sqrt(2 pi R)``."""
    return -1.0 / math.sqrt(2.0 * math.pi * R)


def _det_formula(p: SpectralProblem, c: ContourSpec) -> complex:
    mus, ws, ld = _contour_data(p, c)
    m = _order(p)
    t = c.t_anchor
    v = secular_f(t, p)
    log_int = complex(np.sum(ws * np.log(mus) * ld))
    if p.is_friedrichs:
        # F_h = -J0(mu R) and the reference constant has no log factor
        return v.f / _c0(p.R) * cmath.exp(log_int / (1j * math.pi))
    F_t = v.f / p.bc0.c / t**m
    C = _c0(p.R) if m == 0 else -_c0(p.R)
    return 2.0 * math.exp(EULER_GAMMA) * F_t / C * cmath.exp(log_int / (1j * math.pi))


def det_reg(p: SpectralProblem, c: ContourSpec | None = None, return_complex: bool = False):
    """Regularized determinant ``exp(-d/ds [zeta(s) + s log s]|_{s=0})``.

    Evaluated as ``2 e^gamma (F(t)/C0) exp((1/(pi i)) int_gamma log(mu) F'/F dmu)``
    with ``C0 = -1/sqrt(2 pi R)``.  With a zero mode ``F`` is replaced by
    ``F/mu^2`` and ``C0`` by ``-C0``.
    """
    _require_dirichlet(p)
    if p.is_friedrichs:
        raise FriedrichsUndefined("use det_friedrichs for theta_1 = pi/2")
    c = auto_contour(p, "det") if c is None else c
    val = _det_formula(p, c)
    if return_complex:
        return val
    if abs(val.imag) > 1e-8 * max(1.0, abs(val)):
        raise ContourTooClose(f"determinant came out complex ({val}); the path encloses the wrong zeros")
    return val.real


def det_closed_form(p: SpectralProblem) -> float:
    """``2 sqrt(2 pi R) e^gamma (tan theta - log R)``, or ``sqrt(pi R / 2) e^gamma R^2`` with a zero mode."""
    R = p.R
    if p.is_friedrichs:
        return det_friedrichs(R)
    if has_zero_mode(p):
        return math.sqrt(math.pi * R / 2.0) * math.exp(EULER_GAMMA) * R * R
    return 2.0 * math.sqrt(2.0 * math.pi * R) * math.exp(EULER_GAMMA) * (p.bc0.tan - math.log(R))


def det_friedrichs(R: float) -> float:
    """``sqrt(2 pi R)``."""
    if not R > 0.0:
        raise DomainError("R must be positive")
    return math.sqrt(2.0 * math.pi * R)


def det_friedrichs_contour(R: float, c: ContourSpec | None = None) -> float:
    """``exp(-zeta'(0))`` for the Friedrichs realization from the contour machinery."""
    from .sae import BoundaryCondition

    p = SpectralProblem(R, BoundaryCondition.friedrichs())
    c = auto_contour(p, "zeta") if c is None else c
    val = _det_formula(p, c)
    return val.real


def det_from_zeta(p: SpectralProblem, c: ContourSpec | None = None) -> complex:
    """``exp(-zeta_reg'(0))`` using a numerical derivative of the regular part."""
    return cmath.exp(-regular_derivative_at_zero(p, c))


__all__ = [
    "ContourSpec",
    "ZetaDecomposition",
    "auto_contour",
    "axis_remainder_integral",
    "check_contour",
    "det_closed_form",
    "det_friedrichs",
    "det_friedrichs_contour",
    "det_from_zeta",
    "det_reg",
    "log_int_identity",
    "log_int_small_s",
    "regular_derivative_at_zero",
    "remainder",
    "singular_part",
    "zeta_contour",
    "zeta_decompose",
    "zeta_spectral",
]
