"""Eigenvalues: zero-mode test, the negative eigenvalue and positive roots.

With Dirichlet data at ``r = R`` the eigenvalues for any ``theta_1``
interlace with the Friedrichs ones ``(j_{0,k}/R)^2``: each interval
``(j_{0,k}, j_{0,k+1})/R`` holds exactly one root of the secular function,
and ``(0, j_{0,1}/R)`` holds one unless the lowest eigenvalue is
non-positive.  These intervals are the primary brackets.  Robin data at
``r = R`` fall back to a uniform grid of step ``pi/(8R)``.
"""

from __future__ import annotations

import math
import threading
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize, special

from .errors import BracketFailure, DomainError
from .sae import SpectralProblem
from .secular import (
    _imag_scaled,
    secular_f_real,
    secular_general_imag_scaled,
    secular_general_real,
    zero_limit_general,
)
from .specfun import bessel_block_real

ZERO_MODE_TOL = 1e-12
NEG_X_MAX = 1e3  # in units of 1/R
ROOT_RTOL = 1e-14
GRID_STEP = math.pi / 8.0  # in units of 1/R


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of one realization, lowest first.

    ``negative`` holds the negative eigenvalue when there is one.  Robin data
    at ``r = R`` can produce a second one; it goes in ``extra_negative``.
    """

    negative: float | None
    zero_mode: bool
    positive: tuple[float, ...]
    count_requested: int
    extra_negative: tuple[float, ...] = field(default_factory=tuple)

    def __post_init__(self):
        pos = np.asarray(self.positive, dtype=float)
        if pos.size and (np.any(pos <= 0.0) or np.any(np.diff(pos) <= 0.0)):
            raise ValueError("positive eigenvalues must be positive and strictly increasing")
        if self.negative is not None and not self.negative < 0.0:
            raise ValueError("negative eigenvalue must be < 0")

    def all_eigenvalues(self) -> np.ndarray:
        """Every computed eigenvalue in increasing order, zero included."""
        vals = sorted(self.extra_negative)
        if self.negative is not None:
            vals.append(self.negative)
        vals.sort()
        if self.zero_mode:
            vals.append(0.0)
        return np.concatenate([np.asarray(vals, dtype=float), np.asarray(self.positive)])


# ---------------------------------------------------------------------------
# zero mode and the negative eigenvalue


def has_zero_mode(p: SpectralProblem) -> bool:
    """True iff ``lambda = 0`` is an eigenvalue.

    With Dirichlet data this is ``|cos(theta_1) log R - sin(theta_1)| <= 1e-12``.
    """
    if p.is_dirichlet:
        return abs(p.bc0.c * math.log(p.R) - p.bc0.s) <= ZERO_MODE_TOL
    P, dP = zero_limit_general(p)
    return abs(p.bcR.c * dP + p.bcR.s * P) <= ZERO_MODE_TOL


def _alpha(p: SpectralProblem) -> float:
    return math.log(p.R) - p.bc0.tan


def _series_terms_scaled(y: float, kmax: int) -> np.ndarray:
    """``e^{-y} (y/2)^{2k} / (k!)^2`` for ``k = 0..kmax``."""
    k = np.arange(kmax + 1)
    if y == 0.0:
        out = np.zeros(kmax + 1)
        out[0] = 1.0
        return out
    logt = 2.0 * k * math.log(0.5 * y) - 2.0 * special.gammaln(k + 1.0) - y
    return np.exp(logt)


def _harmonic(kmax: int) -> np.ndarray:
    h = np.zeros(kmax + 1)
    h[1:] = np.cumsum(1.0 / np.arange(1, kmax + 1))
    return h


def monotone_g(y: float, alpha: float, N: int | None = None) -> float:
    """``e^{-y} y^{-2N} f(y)`` with ``f(y) = sum (H_k - alpha) (y/2)^{2k}/(k!)^2``.

    Here ``y = x R``.  For ``H_{N-1} < alpha <= H_N`` the function
    ``y^{-2N} f(y)`` is strictly increasing on ``y > 0``; the extra positive
    factor ``e^{-y}`` keeps it finite and does not move the zero.
    """
    if N is None:
        N = _index_N(alpha)
    kmax = int(y + 12.0 * math.sqrt(y + 1.0) + 40)
    t = _series_terms_scaled(y, kmax)
    h = _harmonic(kmax)
    f = math.fsum((h - alpha) * t)
    return f * y ** (-2.0 * N)


def _index_N(alpha: float) -> int:
    """Smallest ``N`` with ``H_N >= alpha``."""
    n, h = 0, 0.0
    while h < alpha:
        n += 1
        h += 1.0 / n
    return n


def negative_eigenvalue(p: SpectralProblem) -> float | None:
    """The unique negative eigenvalue for Dirichlet data, or None.

    It exists iff ``alpha = log R - tan(theta_1) > 0``.  The root of the
    monotone function ``g`` is located by expanding a bracket and then
    bisecting.

    Raises
    ------
    BracketFailure
        If no sign change is found below ``x = 1e3 / R``.
    """
    if not p.is_dirichlet:
        raise DomainError("negative_eigenvalue needs Dirichlet data at r = R; use spectrum()")
    if p.is_friedrichs or has_zero_mode(p):
        return None
    alpha = _alpha(p)
    if alpha <= 0.0:
        return None
    # sign(g) = sign(e^{-y} f); y^{-2N} underflows for large alpha, so bisect on the unscaled sum
    g = lambda y: monotone_g(y, alpha, 0)  # noqa: E731
    ymax = NEG_X_MAX
    hi = min(2.0 * math.exp(alpha - 0.5772156649015329) + 1.0, ymax)
    lo = 0.0
    while g(hi) <= 0.0:
        lo = hi
        if hi >= ymax:
            raise BracketFailure(f"no sign change of g below x = {NEG_X_MAX}/R (alpha = {alpha:.6g})")
        hi = min(2.0 * hi, ymax)
    if lo == 0.0:
        lo = hi
        while lo > 1e-300 and g(lo) > 0.0:
            hi = lo
            lo *= 0.5
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        # g spans hundreds of decades, so stop on the bracket width
        if gm == 0.0 or hi - lo <= 4e-16 * hi:
            break
        if gm > 0.0:
            hi = mid
        else:
            lo = mid
    y = 0.5 * (lo + hi)
    return -((y / p.R) ** 2)


def negative_eigenvalue_secular(p: SpectralProblem) -> float | None:
    """Same eigenvalue located as a root of ``F_h(ix)``; an independent route."""
    if p.is_friedrichs or has_zero_mode(p) or _alpha(p) <= 0.0:
        return None
    fs = lambda x: _imag_scaled(x, p)[0]  # noqa: E731
    xs = np.geomspace(1e-8 / p.R, NEG_X_MAX / p.R, 400)
    vals = [fs(x) for x in xs]
    for a, b, fa, fb in zip(xs, xs[1:], vals, vals[1:]):
        if fa == 0.0:
            return -(a**2)
        if fa * fb < 0.0:
            x = optimize.brentq(fs, a, b, xtol=1e-300, rtol=1e-15, maxiter=200)
            return -(x**2)
    raise BracketFailure("no sign change of F(ix) on the imaginary axis")


def _robin_negative(p: SpectralProblem) -> list[float]:
    """Sign changes of the Robin secular function along ``mu = ix``."""
    fs = lambda x: secular_general_imag_scaled(x, p)  # noqa: E731
    xs = np.geomspace(1e-8 / p.R, NEG_X_MAX / p.R, 2000)
    vals = np.array([fs(x) for x in xs])
    out = []
    for i in np.nonzero(vals[:-1] * vals[1:] < 0.0)[0]:
        x = optimize.brentq(fs, xs[i], xs[i + 1], xtol=1e-300, rtol=1e-15, maxiter=200)
        out.append(-(x**2))
    return sorted(out)


# ---------------------------------------------------------------------------
# positive eigenvalues


def _root_fn(p: SpectralProblem):
    if p.is_dirichlet:
        return lambda mu: secular_f_real(mu, p)[0]
    return lambda mu: secular_general_real(mu, p)[0]


def _grid_roots(fn, a: float, b: float, step: float, limit: int | None = None) -> list[float]:
    n = max(2, int(math.ceil((b - a) / step)) + 1)
    xs = np.linspace(a, b, n)
    vals = [fn(x) for x in xs]
    roots = []
    for x0, x1, f0, f1 in zip(xs, xs[1:], vals, vals[1:]):
        if f0 * f1 < 0.0:
            roots.append(optimize.brentq(fn, x0, x1, xtol=1e-300, rtol=ROOT_RTOL, maxiter=200))
            if limit is not None and len(roots) >= limit:
                break
    return roots


def _solve_brackets(args):
    p, brackets = args
    fn = _root_fn(p)
    step = GRID_STEP / p.R
    out = []
    for a, b in brackets:
        fa, fb = fn(a), fn(b)
        if fa * fb < 0.0:
            out.append(optimize.brentq(fn, a, b, xtol=1e-300, rtol=ROOT_RTOL, maxiter=200))
            continue
        roots = _grid_roots(fn, a, b, step / 8.0)
        if len(roots) != 1:
            raise BracketFailure(
                f"interlacing bracket ({a:.12g}, {b:.12g}) holds {len(roots)} sign changes; "
                f"F = ({fa:.3g}, {fb:.3g})"
            )
        out.append(roots[0])
    return out


def _dirichlet_mu(p: SpectralProblem, n: int, jobs: int = 1) -> list[float]:
    R = p.R
    if p.is_friedrichs:
        return list(special.jn_zeros(0, n) / R)
    lowest_nonpositive = has_zero_mode(p) or _alpha(p) > 0.0
    zeros = special.jn_zeros(0, n + 1) / R
    if lowest_nonpositive:
        brackets = list(zip(zeros[:n], zeros[1 : n + 1]))
    else:
        lo = (1e-3 if has_zero_mode(p) else 1e-9) / R
        edges = np.concatenate([[lo], zeros[:n]])
        brackets = list(zip(edges[:n], edges[1 : n + 1]))
    if jobs <= 1 or n < 200:
        return _solve_brackets((p, brackets))
    chunks = [(p, brackets[i::jobs]) for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        parts = list(ex.map(_solve_brackets, chunks))
    return sorted(mu for part in parts for mu in part)


def _robin_mu(p: SpectralProblem, n: int) -> list[float]:
    fn = _root_fn(p)
    step = GRID_STEP / p.R
    lo = (1e-3 if has_zero_mode(p) else 1e-9) / p.R
    roots: list[float] = []
    a = lo
    span = (n + 2) * math.pi / p.R
    while len(roots) < n:
        b = a + span
        roots.extend(_grid_roots(fn, a, b, step, limit=n - len(roots)))
        a = b
        if a > 1e7 / p.R:
            raise BracketFailure(f"grid scan found only {len(roots)} of {n} roots")
    return roots[:n]


def positive_eigenvalues(p: SpectralProblem, n: int, jobs: int = 1) -> list[float]:
    """First ``n`` positive eigenvalues ``lambda_j = mu_j^2``.

    Parameters
    ----------
    p : SpectralProblem
    n : int
        Number of eigenvalues, ``n >= 1``.
    jobs : int
        Worker processes for independent brackets (Dirichlet only).
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    mus = _dirichlet_mu(p, n, jobs) if p.is_dirichlet else _robin_mu(p, n)
    return [mu * mu for mu in mus]


def spectrum(p: SpectralProblem, n: int, jobs: int = 1) -> Spectrum:
    """Negative, zero and first ``n`` positive eigenvalues."""
    zero = has_zero_mode(p)
    if p.is_dirichlet:
        neg, extra = negative_eigenvalue(p), ()
    else:
        negs = _robin_negative(p)
        neg = negs[-1] if negs else None
        extra = tuple(negs[:-1])
    return Spectrum(neg, zero, tuple(positive_eigenvalues(p, n, jobs)), n, extra)


_CACHE: dict = {}
_LOCK = threading.Lock()


def cached_spectrum(p: SpectralProblem, n: int, jobs: int = 1) -> Spectrum:
    """Spectrum with at least ``n`` positive eigenvalues, reusing earlier work per problem."""
    with _LOCK:
        sp = _CACHE.get(p)
    if sp is None or len(sp.positive) < n:
        size = max(n, 64 if sp is None else 2 * len(sp.positive))
        sp = spectrum(p, size, jobs)
        with _LOCK:
            _CACHE[p] = sp
    return sp


def clear_cache() -> None:
    with _LOCK:
        _CACHE.clear()


def eigenfunction(r, mu: float, p: SpectralProblem):
    """``sqrt(r) [c1 J0(mu r) + c2 ((pi/2) Y0(mu r) - (log mu - log 2 + gamma) J0(mu r))]``.

    ``(c1, c2) = (-sin theta_1, cos theta_1)``; not normalized.
    """
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0.0):
        raise DomainError("eigenfunction needs r > 0")
    if not mu > 0.0:
        raise DomainError("eigenfunction needs mu > 0")
    c, s = p.bc0.c, p.bc0.s

    def one(rv):
        j0, _, sv, _ = bessel_block_real(mu * rv)
        # (pi/2) Y0(mu r) - (log mu - log2 + gamma) J0(mu r) = log r J0 - S
        return math.sqrt(rv) * (-s * j0 + c * (math.log(rv) * j0 - sv))

    if r_arr.ndim == 0:
        return one(float(r_arr))
    return np.array([one(float(v)) for v in r_arr.ravel()]).reshape(r_arr.shape)


__all__ = [
    "Spectrum",
    "cached_spectrum",
    "clear_cache",
    "eigenfunction",
    "has_zero_mode",
    "monotone_g",
    "negative_eigenvalue",
    "negative_eigenvalue_secular",
    "positive_eigenvalues",
    "spectrum",
]
