"""Steady-state Gaussian entanglement of a driven cavity-magnon system
with two Coulomb-coupled mechanical resonators.

The package assembles the drift and diffusion matrices of the eight
linearized quadrature fluctuations, solves the stationary Lyapunov
equation for the covariance matrix, and scores two-mode entanglement by
logarithmic negativity.  :mod:`magnomech.sweep` adds parameter grids and
threshold searches; the ``magnomech`` console script wraps them.
"""

from .dynamics import (build_diffusion, build_drift, solve_lyapunov,
                       solve_lyapunov_kron, stability, symplectic_eigenvalues,
                       symplectic_form)
from .entanglement import (EN_FLOOR, Mode, ModePair, PointResult,
                           ReducedCovariance, entanglement_at, log_negativity,
                           reduce_covariance)
from .errors import (AccuracyError, BistabilityError, BracketError,
                     ConfigError, ConvergenceError, MagnomechError,
                     ParameterError, PhysicalityError, StabilityError)
from .params import (CoulombGeometry, DriveGeometry, SystemParams,
                     ThermalOccupations, baseline_params, coulomb_coupling,
                     rabi_frequency, thermal_occupation, thermal_occupations)
from .steady_state import SteadyState, solve_direct, solve_self_consistent
from .sweep import (AxisSpec, SweepResult, SweepSpec, find_threshold,
                    run_sweep, save_result)

__all__ = [
    "AccuracyError", "AxisSpec", "BistabilityError", "BracketError",
    "ConfigError", "ConvergenceError", "CoulombGeometry", "DriveGeometry",
    "EN_FLOOR", "MagnomechError", "Mode", "ModePair", "ParameterError",
    "PhysicalityError", "PointResult", "ReducedCovariance", "StabilityError",
    "SteadyState", "SweepResult", "SweepSpec", "SystemParams",
    "ThermalOccupations", "baseline_params", "build_diffusion", "build_drift",
    "coulomb_coupling", "entanglement_at", "find_threshold", "log_negativity",
    "rabi_frequency", "reduce_covariance", "run_sweep", "save_result",
    "solve_direct", "solve_lyapunov", "solve_lyapunov_kron",
    "solve_self_consistent", "stability", "symplectic_eigenvalues",
    "symplectic_form", "thermal_occupation", "thermal_occupations",
]
