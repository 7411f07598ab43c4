"""Numerical workbench for a rational multi-particle integrable system.

The heavy lifting happens in the compiled extension ``rsvd_bcn._core``:
construction of the Lax matrices of the model (plain, tilde, hat and check
dressings), the coefficient tensors of its quadratic bracket, finite-difference
verification of the bracket theorem and of the Lax equation of motion, the
canonical lift with its momentum-map residuals, and a fixed-step RK4
integrator for the flow.

All matrix-valued results come back as numpy arrays.  Phase points are pairs
of strictly decreasing positive positions ``lambda_`` and unconstrained
rapidities ``theta``; couplings satisfy ``mu < 0 < nu`` and ``nu * kappa >= 0``.
Every invalid input raises :class:`WorkbenchError`.
"""

from ._core import (
    Couplings,
    PhasePoint,
    WorkbenchError,
    big_h,
    bracket_sign,
    calibrate,
    consistency_residuals,
    f_vector,
    h_matrix,
    hamiltonian,
    integrate,
    lax_equation_residual,
    lax_matrix,
    lax_pair_b,
    momentum_residuals,
    quad_coefficients,
    spectral_drift,
    theorem_residual,
    v_vector,
    z_values,
)

__version__ = "0.1.0"

__all__ = [
    "Couplings",
    "PhasePoint",
    "WorkbenchError",
    "big_h",
    "bracket_sign",
    "calibrate",
    "consistency_residuals",
    "f_vector",
    "h_matrix",
    "hamiltonian",
    "integrate",
    "lax_equation_residual",
    "lax_matrix",
    "lax_pair_b",
    "momentum_residuals",
    "quad_coefficients",
    "spectral_drift",
    "theorem_residual",
    "v_vector",
    "z_values",
]
