import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from singular_spectra.errors import DomainError
from singular_spectra.sae import (
    BoundaryCondition,
    SpectralProblem,
    Subspace2of4,
    is_lagrangian,
    lagrangian_from_angles,
    omega,
    omega_matrix,
)

angles = st.floats(0.0, math.pi, exclude_max=True)


@given(angles)
def test_angle_round_trip(theta):
    bc = BoundaryCondition.from_angle(theta)
    assert bc.s >= 0.0
    assert math.hypot(bc.c, bc.s) == pytest.approx(1.0, abs=1e-15)
    assert bc.theta == pytest.approx(theta, abs=1e-12)


@given(st.floats(-1e6, 1e6))
def test_from_tan(tv):
    bc = BoundaryCondition.from_tan(tv)
    assert bc.tan == pytest.approx(tv, rel=1e-12, abs=1e-12)


def test_normalization_picks_one_representative():
    a = BoundaryCondition(-2.0, -2.0)
    b = BoundaryCondition(1.0, 1.0)
    assert a == b
    assert BoundaryCondition(-1.0, 0.0) == BoundaryCondition.neumann()
    assert BoundaryCondition.friedrichs().is_pi_over_2
    assert BoundaryCondition.friedrichs().tan == math.inf
    assert BoundaryCondition.dirichlet() == BoundaryCondition.friedrichs()


@pytest.mark.parametrize("pair", [(0.0, 0.0), (math.nan, 1.0), (math.inf, 1.0)])
def test_invalid_pairs(pair):
    with pytest.raises(DomainError):
        BoundaryCondition(*pair)


@pytest.mark.parametrize("R", [0.0, -1.0, math.inf])
def test_invalid_radius(R):
    with pytest.raises(DomainError):
        SpectralProblem(R, BoundaryCondition.neumann())


def test_problem_flags_and_hashing():
    p = SpectralProblem.from_tan(1.5, 0.2)
    assert p.is_dirichlet and not p.is_friedrichs
    q = p.with_bc0(BoundaryCondition.friedrichs())
    assert q.is_friedrichs and q.R == p.R
    assert len({p, SpectralProblem.from_tan(1.5, 0.2), q}) == 2


def test_omega_gram_matrix():
    expected = np.array([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]], dtype=complex)
    assert np.array_equal(omega_matrix(), expected)


@given(
    st.lists(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False), min_size=4, max_size=4),
    st.lists(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False), min_size=4, max_size=4),
)
def test_omega_is_skew_hermitian(v, w):
    assert abs(omega(v, w) + np.conj(omega(w, v))) <= 1e-9 * (1 + abs(omega(v, w)))


@given(angles, angles)
def test_separated_planes_are_lagrangian(t1, t2):
    L = lagrangian_from_angles(BoundaryCondition.from_angle(t1), BoundaryCondition.from_angle(t2))
    assert is_lagrangian(L)


def test_non_lagrangian_plane():
    L = Subspace2of4(((1, 0, 0, 0), (0, 1, 0, 0)))
    assert not is_lagrangian(L)


def test_dependent_basis_rejected():
    with pytest.raises(DomainError):
        Subspace2of4(((1, 0, 0, 0), (2, 0, 0, 0)))
