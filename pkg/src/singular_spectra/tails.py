"""Tail estimates for sums over eigenvalues beyond the last computed one.

Past the last root ``mu_N`` the roots are modelled as ``mu_N + k pi / R``;
the neglected shift is ``O(1/(j log^2 j))`` per root.  Sums are replaced by
the midpoint rule with its first correction term.
"""

from __future__ import annotations

import cmath
import math


def spectral_tail_resolvent(mu_last: float, n: int, R: float, mu: complex) -> complex:
    """``sum_{j > n} 1/(mu_j^2 - mu^2)``."""
    h = math.pi / R
    u0 = mu_last + 0.5 * h
    mu = complex(mu)
    m2 = mu * mu
    integral = cmath.atanh(mu / u0) / mu if mu != 0 else 1.0 / u0
    fprime = -2.0 * u0 / (u0 * u0 - m2) ** 2
    return integral / h + h * fprime / 24.0


def spectral_tail_heat(mu_last: float, R: float, t: float) -> float:
    """``sum_{j > n} exp(-t mu_j^2)`` for the roots after ``mu_last``."""
    h = math.pi / R
    u0 = mu_last + 0.5 * h
    integral = 0.5 * math.sqrt(math.pi / t) * math.erfc(u0 * math.sqrt(t))
    fprime = -2.0 * t * u0 * math.exp(-t * u0 * u0)
    return integral / h + h * fprime / 24.0
