"""Boundary data, the Hermitian symplectic form and Lagrangian planes.

A self-adjoint realization is fixed by two angles: ``theta_1`` acting on
the coefficients ``(c1, c2)`` of ``r^(1/2)`` and ``r^(1/2) log r`` at the
singular end, and ``theta_2`` acting on ``(phi'(R), phi(R))``.  Angles are
stored as exact ``(cos, sin)`` pairs so that the Friedrichs realization
(``theta_1 = pi/2``) is an ordinary value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

LAGRANGIAN_TOL = 1e-12


@dataclass(frozen=True)
class BoundaryCondition:
    """Homogeneous condition ``c * z1 + s * z2 = 0`` with ``c = cos theta``, ``s = sin theta``.

    The pair is normalized to the canonical representative of
    ``theta`` in ``[0, pi)``: ``s >= 0``, and ``c = 1`` when ``s = 0``.
    """

    c: float
    s: float

    def __post_init__(self):
        c, s = float(self.c), float(self.s)
        norm = math.hypot(c, s)
        if not norm > 0.0 or not math.isfinite(norm):
            raise DomainError(f"invalid boundary pair ({self.c!r}, {self.s!r})")
        c, s = c / norm, s / norm
        if s < 0.0 or (s == 0.0 and c < 0.0):
            c, s = -c, -s
        if s == 0.0:
            c = 1.0
        if c == 0.0:
            c, s = 0.0, 1.0
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "s", s)

    @classmethod
    def from_angle(cls, theta: float) -> "BoundaryCondition":
        return cls(math.cos(theta), math.sin(theta))

    @classmethod
    def from_tan(cls, tan_theta: float) -> "BoundaryCondition":
        """Condition with ``tan theta = tan_theta`` (theta in [0, pi), theta != pi/2)."""
        return cls(1.0, float(tan_theta))

    @classmethod
    def friedrichs(cls) -> "BoundaryCondition":
        return cls(0.0, 1.0)

    dirichlet = friedrichs  # same pair; at r = R it means phi(R) = 0

    @classmethod
    def neumann(cls) -> "BoundaryCondition":
        return cls(1.0, 0.0)

    @property
    def theta(self) -> float:
        return math.atan2(self.s, self.c)

    @property
    def tan(self) -> float:
        if self.c == 0.0:
            return math.inf
        return self.s / self.c

    @property
    def is_pi_over_2(self) -> bool:
        return self.c == 0.0


@dataclass(frozen=True)
class SpectralProblem:
    """Interval ``[0, R]`` with a condition ``bc0`` at r = 0 and ``bcR`` at r = R."""

    R: float
    bc0: BoundaryCondition
    bcR: BoundaryCondition = field(default_factory=BoundaryCondition.dirichlet)

    def __post_init__(self):
        R = float(self.R)
        if not (R > 0.0 and math.isfinite(R)):
            raise DomainError(f"R must be positive and finite, got {self.R!r}")
        object.__setattr__(self, "R", R)

    @classmethod
    def from_tan(cls, R: float, tan_theta1: float, bcR: BoundaryCondition | None = None):
        return cls(R, BoundaryCondition.from_tan(tan_theta1), bcR or BoundaryCondition.dirichlet())

    @property
    def is_friedrichs(self) -> bool:
        return self.bc0.is_pi_over_2

    @property
    def is_dirichlet(self) -> bool:
        return self.bcR.is_pi_over_2

    def with_bc0(self, bc0: BoundaryCondition) -> "SpectralProblem":
        return SpectralProblem(self.R, bc0, self.bcR)


@dataclass(frozen=True)
class Subspace2of4:
    """Two-dimensional subspace of C^4 given by a spanning pair."""

    basis: tuple

    def __post_init__(self):
        b = np.asarray(self.basis, dtype=complex)
        if b.shape != (2, 4):
            raise DomainError(f"need two vectors in C^4, got shape {b.shape}")
        gram = b.conj() @ b.T
        if abs(np.linalg.det(gram)) <= 1e-12:
            raise DomainError("basis vectors are linearly dependent")
        object.__setattr__(self, "basis", tuple(tuple(complex(x) for x in row) for row in b))

    def array(self) -> np.ndarray:
        return np.array(self.basis, dtype=complex)


def omega(v, w) -> complex:
    """Hermitian symplectic form ``v1 w2* - v2 w1* + v3 w4* - v4 w3*``."""
    v = np.asarray(v, dtype=complex)
    w = np.asarray(w, dtype=complex)
    wc = w.conj()
    return complex(v[0] * wc[1] - v[1] * wc[0] + v[2] * wc[3] - v[3] * wc[2])


def omega_matrix() -> np.ndarray:
    """Gram matrix ``omega(e_i, e_j)`` on the standard basis."""
    eye = np.eye(4)
    return np.array([[omega(eye[i], eye[j]) for j in range(4)] for i in range(4)])


def is_lagrangian(L: Subspace2of4, tol: float = LAGRANGIAN_TOL) -> bool:
    """True when omega vanishes on L; with dim L = 2 this means L equals its omega-complement."""
    b = L.array()
    b = b / np.linalg.norm(b, axis=1, keepdims=True)
    if np.linalg.matrix_rank(b, tol=1e-10) != 2:
        return False
    for i in range(2):
        for j in range(2):
            if abs(omega(b[i], b[j])) > tol:
                return False
    return True


def lagrangian_from_angles(bc0: BoundaryCondition, bcR: BoundaryCondition) -> Subspace2of4:
    """The plane ``L_theta1 (+) L_theta2`` spanned by ``(-s1, c1, 0, 0)`` and ``(0, 0, -s2, c2)``."""
    return Subspace2of4(((-bc0.s, bc0.c, 0.0, 0.0), (0.0, 0.0, -bcR.s, bcR.c)))
