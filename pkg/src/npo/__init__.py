"""Guaranteed variational bounds, quasi-exact eigenpairs, and first-order
perturbation data for the radial oscillator with potential

    V(r) = B r^2 + lam r^2 / (1 + g r^2),     g > 0,

in any dimension (and on the half line), via closed-form matrix elements in a
singular-oscillator basis."""

__version__ = "0.1.0"

from .errors import (
    ConvergenceError,
    DomainError,
    InconsistentSolutionError,
    PivotPoleError,
    RootScanWarning,
)
from .exact_solutions import (
    ExactSolution,
    TridiagCoeffs,
    count_nodes,
    det_condition,
    exact_energies_order2,
    exact_energy_order1,
    exact_spectrum,
    recover_alphas,
)
from .matrix_elements import RitzProblem, build_ritz, me_inv_r2, me_nonpoly
from .model import ChannelSpec, GKState, PotentialParams, gk_energy, gk_wavefunction, zeta_of
from .oracle import ShootingConfig, quad_matrix_element, shoot_eigenvalue
from .perturbation import first_order_coefficient, first_order_energy
from .specfun import gamma_upper, hyp1f1_terminating, ln_gamma, pochhammer
from .variational import BoundResult, bound_at_A, minimize_over_A, sym_eigenvalues

__all__ = [
    "BoundResult",
    "ChannelSpec",
    "ConvergenceError",
    "DomainError",
    "ExactSolution",
    "GKState",
    "InconsistentSolutionError",
    "PivotPoleError",
    "PotentialParams",
    "RitzProblem",
    "RootScanWarning",
    "ShootingConfig",
    "TridiagCoeffs",
    "bound_at_A",
    "build_ritz",
    "count_nodes",
    "det_condition",
    "exact_energies_order2",
    "exact_energy_order1",
    "exact_spectrum",
    "first_order_coefficient",
    "first_order_energy",
    "gamma_upper",
    "gk_energy",
    "gk_wavefunction",
    "hyp1f1_terminating",
    "ln_gamma",
    "me_inv_r2",
    "me_nonpoly",
    "minimize_over_A",
    "pochhammer",
    "quad_matrix_element",
    "recover_alphas",
    "shoot_eigenvalue",
    "sym_eigenvalues",
    "zeta_of",
]
