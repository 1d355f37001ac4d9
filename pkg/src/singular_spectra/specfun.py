r"""Bessel functions of order 0 and 1 and the exponential integral.

Everything downstream is expressed through four entire functions of a
complex argument,

.. math::

    J_0(z),\quad J_1(z),\quad S(z) = \sum_{k\ge1} H_k \frac{(-z^2/4)^k}{(k!)^2},
    \quad S'(z),

with :math:`H_k` the harmonic numbers, since

.. math::

    \tfrac{\pi}{2} Y_0(z) = (\log z - \log 2 + \gamma) J_0(z) - S(z).

Keeping :math:`S` separate removes the logarithmic branch from every
expression that is itself even in its argument.

Inside the disc ``|z| <= SERIES_RADIUS`` the power series are summed
directly with compensated summation.  Between that radius and ``Z_MAX``
the series loses too many digits to cancellation, and the values come
from the AMOS routines in :mod:`scipy.special`.  On the positive real
axis the modified functions use their own series, the Laplace-type
integral :math:`K_\nu(x) = \int_0^\infty e^{-x\cosh t}\cosh\nu t\,dt`
and the large-argument expansions.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np
from scipy import special as _sp

from .errors import DomainError

EULER_GAMMA = 0.57721566490153286061
LOG2 = math.log(2.0)
#: log 2 - gamma, the value of kappa for theta_1 = 0.
LOG2_MINUS_GAMMA = LOG2 - EULER_GAMMA

Z_MAX = 30.0
SERIES_RADIUS = 6.0
_MAX_TERMS = 400


def _csum(values):
    """Compensated sum of a list of complex numbers."""
    return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))


def _check_disc(z: complex) -> None:
    if not cmath.isfinite(z):
        raise DomainError(f"non-finite argument {z!r}")
    if abs(z) > Z_MAX:
        raise DomainError(f"|z| = {abs(z):.6g} exceeds Z_MAX = {Z_MAX}")


def _on_cut(z: complex) -> bool:
    return z.imag == 0.0 and z.real < 0.0


def _series_block(z: complex) -> tuple[complex, complex, complex, complex]:
    """(J0, J1, S, S') from the power series; valid for any z, accurate for small |z|."""
    w = -0.25 * z * z
    j0_terms = [1.0 + 0j]
    j1_terms = [1.0 + 0j]          # times z/2
    s_terms = []
    ds_terms = []                  # times -z/2
    t = 1.0 + 0j                   # w^k / (k!)^2
    u = 1.0 + 0j                   # w^k / (k! (k+1)!)
    h = 0.0
    for k in range(1, _MAX_TERMS):
        prev_t = t
        t = t * w / (k * k)
        u = u * w / (k * (k + 1))
        h += 1.0 / k
        j0_terms.append(t)
        j1_terms.append(u)
        s_terms.append(h * t)
        # H_k w^{k-1} / ((k-1)! k!) = H_k * prev_t / k
        ds_terms.append(h * prev_t / k)
        if k > abs(z) and abs(t) * (1.0 + h) < 1e-20:
            break
    j0 = _csum(j0_terms)
    j1 = 0.5 * z * _csum(j1_terms)
    s = _csum(s_terms)
    ds = -0.5 * z * _csum(ds_terms)
    return j0, j1, s, ds


def _amos_block(z: complex) -> tuple[complex, complex, complex, complex]:
    if z.real < 0.0:
        j0, j1, s, ds = _amos_block(-z)
        return j0, -j1, s, -ds
    j0 = complex(_sp.jv(0, z))
    j1 = complex(_sp.jv(1, z))
    y0 = complex(_sp.yv(0, z))
    y1 = complex(_sp.yv(1, z))
    lg = cmath.log(z) - LOG2_MINUS_GAMMA
    s = lg * j0 - 0.5 * math.pi * y0
    ds = j0 / z - lg * j1 + 0.5 * math.pi * y1
    return j0, j1, s, ds


def bessel_block(z: complex) -> tuple[complex, complex, complex, complex]:
    """Return ``(J0(z), J1(z), S(z), S'(z))`` for ``|z| <= Z_MAX``.

    All four are single-valued: J0 and S are even, J1 and S' are odd.
    """
    z = complex(z)
    _check_disc(z)
    if abs(z) <= SERIES_RADIUS:
        return _series_block(z)
    return _amos_block(z)


def bessel_block_real(x: float) -> tuple[float, float, float, float]:
    """Real-axis version of :func:`bessel_block` without the ``Z_MAX`` limit.

    Used by the eigenvalue search, which needs roots far beyond the
    complex disc.
    """
    x = float(x)
    if abs(x) <= SERIES_RADIUS:
        j0, j1, s, ds = _series_block(complex(x))
        return j0.real, j1.real, s.real, ds.real
    sign = 1.0
    if x < 0.0:
        x, sign = -x, -1.0
    j0 = float(_sp.j0(x))
    j1 = float(_sp.j1(x))
    y0 = float(_sp.y0(x))
    y1 = float(_sp.y1(x))
    lg = math.log(x) - LOG2_MINUS_GAMMA
    s = lg * j0 - 0.5 * math.pi * y0
    ds = j0 / x - lg * j1 + 0.5 * math.pi * y1
    return j0, sign * j1, s, sign * ds


def j0(z: complex) -> complex:
    """Bessel function J0 for complex ``|z| <= Z_MAX``."""
    return bessel_block(z)[0]


def y0(z: complex) -> complex:
    """Bessel function Y0 on the principal branch of log z."""
    z = complex(z)
    if z == 0:
        raise DomainError("Y0 is singular at z = 0")
    if _on_cut(z):
        raise DomainError("Y0 evaluated on the branch cut (negative real axis)")
    jz, _, s, _ = bessel_block(z)
    return (2.0 / math.pi) * ((cmath.log(z) - LOG2_MINUS_GAMMA) * jz - s)


def j1_y1(z: complex) -> tuple[complex, complex]:
    """Return ``(J1(z), Y1(z))`` with ``J1 = -J0'`` and ``Y1 = -Y0'``."""
    z = complex(z)
    if z == 0:
        raise DomainError("Y1 is singular at z = 0")
    if _on_cut(z):
        raise DomainError("Y1 evaluated on the branch cut (negative real axis)")
    jz0, jz1, _, ds = bessel_block(z)
    lg = cmath.log(z) - LOG2_MINUS_GAMMA
    # (pi/2) Y0' = J0/z - lg*J1 - S'
    y1 = -(2.0 / math.pi) * (jz0 / z - lg * jz1 - ds)
    return jz1, y1


# ---------------------------------------------------------------------------
# modified Bessel functions on the positive real axis

_I_SERIES_MAX = 15.0
_K_SERIES_MAX = 2.0


@lru_cache(maxsize=4)
def _asym_coeffs(nu: int, n: int = 60) -> tuple[float, ...]:
    """a_k(nu) = prod_{j<=k} (4 nu^2 - (2j-1)^2) / (k! 8^k)."""
    out = [1.0]
    a = 1.0
    for k in range(1, n):
        a *= (4 * nu * nu - (2 * k - 1) ** 2) / (k * 8.0)
        out.append(a)
    return tuple(out)


def _asym_sum(nu: int, x: float, alternate: bool) -> float:
    terms = []
    best = math.inf
    for k, a in enumerate(_asym_coeffs(nu)):
        term = a / x**k
        if alternate and k % 2:
            term = -term
        if abs(term) > best:
            break
        terms.append(term)
        best = abs(term)
        if best < 1e-17:
            break
    return math.fsum(terms)


def _i01_series(x: float) -> tuple[float, float]:
    w = 0.25 * x * x
    t = 1.0
    u = 1.0
    s0 = [1.0]
    s1 = [1.0]
    for k in range(1, _MAX_TERMS):
        t *= w / (k * k)
        u *= w / (k * (k + 1))
        s0.append(t)
        s1.append(u)
        if t < 1e-18 * s0[0] and k > x:
            break
    return math.fsum(s0), 0.5 * x * math.fsum(s1)


def _k01_series(x: float) -> tuple[float, float]:
    i0, i1 = _i01_series(x)
    w = 0.25 * x * x
    t = 1.0
    h = 0.0
    a = []
    b = []
    for k in range(1, _MAX_TERMS):
        prev = t
        t *= w / (k * k)
        h += 1.0 / k
        a.append(h * t)
        b.append(h * prev / k)
        if t < 1e-18 and k > x:
            break
    lg = math.log(0.5 * x) + EULER_GAMMA
    k0 = -lg * i0 + math.fsum(a)
    k1 = i0 / x + lg * i1 - 0.5 * x * math.fsum(b)
    return k0, k1


_TRAP_H = 0.05


def _k01_scaled_integral(x: float) -> tuple[float, float]:
    """e^x K0(x), e^x K1(x) by the trapezoidal rule on the cosh integral."""
    tmax = math.acosh(1.0 + 42.0 / x)
    t = np.arange(0.0, tmax + _TRAP_H, _TRAP_H)
    f = np.exp(-x * (np.cosh(t) - 1.0))
    w = np.full_like(t, _TRAP_H)
    w[0] = 0.5 * _TRAP_H
    return float(np.dot(w, f)), float(np.dot(w, f * np.cosh(t)))


def modified_bessel_scaled(x: float) -> tuple[float, float, float, float]:
    """Return ``(e^-x I0, e^-x I1, e^x K0, e^x K1)`` at ``x > 0``."""
    x = float(x)
    if not x > 0.0 or not math.isfinite(x):
        raise DomainError(f"modified Bessel functions need x > 0, got {x!r}")
    if x <= _I_SERIES_MAX:
        i0, i1 = _i01_series(x)
        ex = math.exp(-x)
        i0e, i1e = i0 * ex, i1 * ex
    else:
        pref = 1.0 / math.sqrt(2.0 * math.pi * x)
        i0e = pref * _asym_sum(0, x, alternate=True)
        i1e = pref * _asym_sum(1, x, alternate=True)
    if x <= _K_SERIES_MAX:
        k0, k1 = _k01_series(x)
        ex = math.exp(x)
        k0e, k1e = k0 * ex, k1 * ex
    elif x <= _I_SERIES_MAX:
        k0e, k1e = _k01_scaled_integral(x)
    else:
        pref = math.sqrt(0.5 * math.pi / x)
        k0e = pref * _asym_sum(0, x, alternate=False)
        k1e = pref * _asym_sum(1, x, alternate=False)
    return i0e, i1e, k0e, k1e


def i0_k0(x: float) -> tuple[float, float]:
    """Modified Bessel functions ``(I0(x), K0(x))`` for ``x > 0``."""
    i0e, _, k0e, _ = modified_bessel_scaled(x)
    return i0e * math.exp(x), k0e * math.exp(-x)


def i0_k0_asymptotic(x: float) -> tuple[float, float]:
    """Large-argument expansions of ``(I0(x), K0(x))``, truncated at the smallest term."""
    if not x > 0.0:
        raise DomainError(f"x must be positive, got {x!r}")
    i0 = math.exp(x) / math.sqrt(2.0 * math.pi * x) * _asym_sum(0, x, alternate=True)
    k0 = math.sqrt(0.5 * math.pi / x) * math.exp(-x) * _asym_sum(0, x, alternate=False)
    return i0, k0


# ---------------------------------------------------------------------------
# exponential integral

_E1_SERIES_RADIUS = 4.0


def expint_e1(z: complex) -> complex:
    """E1(z) = int_z^inf e^-y / y dy on the principal branch.

    Power series for ``|z| <= 4``; modified Lentz continued fraction
    otherwise (requires ``Re z >= 0`` there).
    """
    z = complex(z)
    if z == 0:
        raise DomainError("E1 is singular at z = 0")
    if _on_cut(z):
        raise DomainError("E1 evaluated on the branch cut")
    if abs(z) <= _E1_SERIES_RADIUS:
        terms = []
        t = 1.0 + 0j
        for k in range(1, _MAX_TERMS):
            t = t * (-z) / k
            terms.append(t / k)
            if abs(t) < 1e-18:
                break
        return -EULER_GAMMA - cmath.log(z) - _csum(terms)
    if z.real < 0.0:
        raise DomainError("continued fraction for E1 needs Re z >= 0 when |z| > 4")
    tiny = 1e-300
    b = z + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 10_000):
        an = -float(i * i)
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return h * cmath.exp(-z)


def ei(x: float) -> float:
    """Exponential integral Ei(x) = gamma + log(-x) + sum x^k/(k k!) for x < 0."""
    x = float(x)
    if not x < 0.0:
        raise DomainError(f"ei is implemented for x < 0 only, got {x!r}")
    return -expint_e1(-x).real
