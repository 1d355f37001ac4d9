"""Spectral theory of -d^2/dr^2 - 1/(4 r^2) on [0, R] for every self-adjoint realization."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    BracketFailure,
    ContourTooClose,
    DomainError,
    EigenvalueHit,
    FriedrichsUndefined,
    NegativeEigenvalueContour,
    PoleAt,
    SingularSpectraError,
    SlowConvergence,
    StepFailure,
)
from .sae import BoundaryCondition, SpectralProblem  # noqa: E402
from .secular import kappa, log_deriv_imag, secular_f  # noqa: E402
from .spectrum import Spectrum, has_zero_mode, negative_eigenvalue, positive_eigenvalues, spectrum  # noqa: E402
from .resolvent import resolvent_kernel, trace_resolvent  # noqa: E402
from .heat import alpha_k, ell, heat_asymptotic, heat_trace  # noqa: E402
from .zeta import ContourSpec, det_closed_form, det_friedrichs, det_reg, zeta_contour, zeta_decompose, zeta_spectral  # noqa: E402
from .oracle import oracle_eigenvalues, shoot  # noqa: E402

__all__ = [
    "BoundaryCondition",
    "BracketFailure",
    "ContourSpec",
    "ContourTooClose",
    "DomainError",
    "EigenvalueHit",
    "FriedrichsUndefined",
    "NegativeEigenvalueContour",
    "PoleAt",
    "SingularSpectraError",
    "SlowConvergence",
    "SpectralProblem",
    "Spectrum",
    "StepFailure",
    "alpha_k",
    "det_closed_form",
    "det_friedrichs",
    "det_reg",
    "ell",
    "has_zero_mode",
    "heat_asymptotic",
    "heat_trace",
    "kappa",
    "log_deriv_imag",
    "negative_eigenvalue",
    "oracle_eigenvalues",
    "positive_eigenvalues",
    "resolvent_kernel",
    "secular_f",
    "shoot",
    "spectrum",
    "trace_resolvent",
    "zeta_contour",
    "zeta_decompose",
    "zeta_spectral",
]
