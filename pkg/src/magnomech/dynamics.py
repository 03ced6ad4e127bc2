"""Linearized fluctuation dynamics and the stationary covariance matrix.

Quadrature ordering is ``(x1, p1, x2, p2, Xc, Yc, Xm, Ym)``: the two
mechanical resonators, then the cavity and magnon field quadratures.  The
covariance convention puts the vacuum variance at 1/2, so a mode in its
ground state contributes a diagonal block ``I/2`` and every symplectic
eigenvalue of a physical covariance matrix is at least 1/2.
"""

from __future__ import annotations

import numpy as np
from scipy import linalg

from .errors import AccuracyError, PhysicalityError, StabilityError
from .params import SystemParams, ThermalOccupations

N_MODES = 4
DIM = 2 * N_MODES

#: relative floor on the stability margin, in units of max|A_ij|
STABILITY_MARGIN_RTOL = 1e-9
#: Lyapunov residual bound, relative to max(1, max|D_ij|)
LYAPUNOV_RESIDUAL_RTOL = 1e-10
#: smallest admissible symplectic eigenvalue of a covariance matrix
SYMPLECTIC_EIGENVALUE_FLOOR = 0.5 - 1e-9


def symplectic_form(dim: int = DIM) -> np.ndarray:
    """Block-diagonal symplectic form for (x, p) interleaved ordering."""
    if dim % 2:
        raise ValueError("symplectic form needs an even dimension")
    omega = np.zeros((dim, dim))
    for k in range(0, dim, 2):
        omega[k, k + 1] = 1.0
        omega[k + 1, k] = -1.0
    return omega


def build_drift(params: SystemParams) -> np.ndarray:
    """8x8 drift matrix of the linearized quadrature dynamics.

    The mechanical positions feed their momenta through -omega x with the
    Coulomb cross term -G_c between the two resonators; the cavity
    quadratures rotate at the effective detuning delta_c and decay at
    kappa; the magnon block rotates at the Kerr-shifted detuning
    delta_m + delta_K and decays at gamma_m.  G_eff ties (x1, p1) to
    (Xc, Yc) and g_m couples the two field blocks beam-splitter style.
    """
    dm = params.delta_m_eff
    a = np.zeros((DIM, DIM))
    a[0, 1] = params.omega_1
    a[1, 0] = -params.omega_1
    a[1, 1] = -params.gamma_1
    a[1, 2] = -params.G_c
    a[1, 4] = params.G_eff
    a[2, 3] = params.omega_2
    a[3, 0] = -params.G_c
    a[3, 2] = -params.omega_2
    a[3, 3] = -params.gamma_2
    a[4, 4] = -params.kappa
    a[4, 5] = params.delta_c
    a[4, 7] = params.g_m
    a[5, 0] = params.G_eff
    a[5, 4] = -params.delta_c
    a[5, 5] = -params.kappa
    a[5, 6] = -params.g_m
    a[6, 5] = params.g_m
    a[6, 6] = -params.gamma_m
    a[6, 7] = dm
    a[7, 4] = -params.g_m
    a[7, 6] = -dm
    a[7, 7] = -params.gamma_m
    return a


def build_diffusion(params: SystemParams, occ: ThermalOccupations) -> np.ndarray:
    """Diagonal of the 8x8 diffusion matrix.

    Positions carry no noise; each momentum or field quadrature sees its
    damping rate times (2 n_bar + 1), with the occupations taken from the
    same parameter set.
    """
    return np.array([
        0.0,
        params.gamma_1 * (2.0 * occ.n_1 + 1.0),
        0.0,
        params.gamma_2 * (2.0 * occ.n_2 + 1.0),
        params.kappa * (2.0 * occ.n_c + 1.0),
        params.kappa * (2.0 * occ.n_c + 1.0),
        params.gamma_m * (2.0 * occ.n_m + 1.0),
        params.gamma_m * (2.0 * occ.n_m + 1.0),
    ])


def stability(a: np.ndarray) -> tuple[bool, float]:
    """Hurwitz check of a drift matrix.

    Returns ``(is_stable, margin)`` with ``margin = max Re(eigenvalue)``
    in rad/s.  The gate is strict: the margin must clear a small relative
    floor below zero, so marginal systems count as unstable (the Lyapunov
    solution diverges as the margin approaches zero).  Eigenvalue solver
    failures propagate as ``numpy.linalg.LinAlgError``.
    """
    eigenvalues = np.linalg.eigvals(a)
    margin = float(np.max(eigenvalues.real))
    floor = STABILITY_MARGIN_RTOL * float(np.max(np.abs(a)))
    return margin < -floor, margin


def solve_lyapunov(a: np.ndarray, d: np.ndarray) -> np.ndarray:
    """Stationary covariance V solving ``A V + V A^T + D = 0``.

    ``d`` is the diagonal of the diffusion matrix.  The solve runs through
    a real-Schur reduction with back substitution; the result is
    symmetrized and checked against the residual bound and the symplectic
    uncertainty floor.  Raises :class:`StabilityError` for a drift matrix
    that is not strictly stable, :class:`AccuracyError` when the residual
    exceeds its bound, and :class:`PhysicalityError` when the covariance
    violates the uncertainty principle.
    """
    is_stable, margin = stability(a)
    if not is_stable:
        raise StabilityError(
            f"drift matrix is not strictly stable (margin {margin:.6e} rad/s)")
    dmat = np.diag(np.asarray(d, dtype=float))
    v = linalg.solve_continuous_lyapunov(a, -dmat)
    v = 0.5 * (v + v.T)
    residual = float(np.max(np.abs(a @ v + v @ a.T + dmat)))
    bound = LYAPUNOV_RESIDUAL_RTOL * max(1.0, float(np.max(np.abs(dmat))))
    if residual > bound:
        raise AccuracyError(
            f"Lyapunov residual {residual:.3e} exceeds bound {bound:.3e}",
            residual=residual)
    nu_min = float(symplectic_eigenvalues(v).min())
    if nu_min < SYMPLECTIC_EIGENVALUE_FLOOR:
        raise PhysicalityError(
            f"covariance has symplectic eigenvalue {nu_min!r} below 1/2")
    return v


def solve_lyapunov_kron(a: np.ndarray, d: np.ndarray) -> np.ndarray:
    """Reference Lyapunov solver via Kronecker vectorization.

    Stacks ``A V + V A^T = -D`` into one dense (n^2 x n^2) linear system.
    Kept deliberately independent of :func:`solve_lyapunov` so the two
    paths can cross-check each other; no stability or physicality gating.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    eye = np.eye(n)
    coefficient = np.kron(eye, a) + np.kron(a, eye)
    rhs = -np.diag(np.asarray(d, dtype=float)).reshape(-1, order="F")
    v = np.linalg.solve(coefficient, rhs).reshape((n, n), order="F")
    return 0.5 * (v + v.T)


def symplectic_eigenvalues(v: np.ndarray) -> np.ndarray:
    """Symplectic spectrum of a covariance matrix, ascending.

    The eigenvalues of ``Omega V`` come in +/- i nu pairs; the returned
    array holds the nu values once each (length dim/2).
    """
    v = np.asarray(v, dtype=float)
    moduli = np.abs(np.linalg.eigvals(symplectic_form(v.shape[0]) @ v))
    return np.sort(moduli)[::2]
