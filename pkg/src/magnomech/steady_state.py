"""Classical steady-state amplitudes of the driven system.

Two entry points: :func:`solve_direct` takes the detunings as given and
evaluates the closed-form amplitudes, while :func:`solve_self_consistent`
treats the radiation-pressure shift of the cavity detuning and the
population-dependent Kerr shift of the magnon detuning as a fixed point.
All amplitudes are in hbar = 1 units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BistabilityError, ConvergenceError, ParameterError
from .params import SystemParams

_SQRT2 = math.sqrt(2.0)

#: iterations of one window used by the period-two cycle detector
_CYCLE_WINDOW = 12


@dataclass(frozen=True)
class SteadyState:
    """Steady amplitudes and the detunings they were computed at."""

    c_s: complex              # cavity amplitude
    m_s: complex              # magnon amplitude
    x_1s: float               # displacement of resonator 1
    x_2s: float               # displacement of resonator 2
    delta_c_eff: float        # cavity detuning in effect
    delta_m_eff: float        # Kerr-shifted magnon detuning in effect
    magnon_population: float  # |m_s|^2


def _field_amplitudes(params: SystemParams, delta_c: float,
                      delta_m_eff: float, omega_b: float) -> tuple[complex, complex]:
    """Cavity and magnon amplitudes with the field equations eliminated.

    The pair of coupled linear relations collapses to a single expression
    for m_s whose denominator has real part >= gamma_m > 0, so it never
    vanishes.
    """
    cavity = params.kappa + 1j * delta_c
    m_s = omega_b / (params.gamma_m + 1j * delta_m_eff + params.g_m**2 / cavity)
    c_s = -1j * params.g_m * m_s / cavity
    return c_s, m_s


def solve_direct(params: SystemParams, omega_b_rabi: float,
                 g_0: float | None = None) -> SteadyState:
    """Steady state with ``params.delta_c`` and ``params.delta_K`` as given.

    The displacements x_1s = g_0 |c_s|^2 / (omega_1 + G_c^2 / omega_2) and
    x_2s = (G_c / omega_2) x_1s need the bare optomechanical coupling; pass
    it as ``g_0``, or leave it None to infer it from the stored effective
    coupling at this drive, g_0 = G_eff / (sqrt(2) |c_s|).  With an explicit
    ``g_0`` the displacements scale with the square of the drive; under the
    inferred one G_eff is pinned, so they scale linearly.
    """
    delta_m_eff = params.delta_m_eff
    c_s, m_s = _field_amplitudes(params, params.delta_c, delta_m_eff, omega_b_rabi)
    magnitude = abs(c_s)
    if g_0 is None:
        g_0 = 0.0 if magnitude == 0.0 else params.G_eff / (_SQRT2 * magnitude)
    denominator = params.omega_1 + params.G_c**2 / params.omega_2
    x_1s = g_0 * magnitude**2 / denominator
    x_2s = (params.G_c / params.omega_2) * x_1s
    return SteadyState(c_s=c_s, m_s=m_s, x_1s=x_1s, x_2s=x_2s,
                       delta_c_eff=params.delta_c, delta_m_eff=delta_m_eff,
                       magnon_population=abs(m_s) ** 2)


def _residual_cycle(residuals: list[float], rtol: float) -> bool:
    """Detect a period-two stall: two interleaved plateaus far above rtol."""
    if len(residuals) < 2 * _CYCLE_WINDOW:
        return False
    tail = np.asarray(residuals[-2 * _CYCLE_WINDOW:])
    if not np.all(np.isfinite(tail)) or float(tail.min()) < 100.0 * rtol:
        return False
    even, odd = tail[0::2], tail[1::2]
    even_flat = float(np.ptp(even)) <= 1e-3 * float(even.mean())
    odd_flat = float(np.ptp(odd)) <= 1e-3 * float(odd.mean())
    distinct = abs(float(even.mean() - odd.mean())) \
        > 0.1 * max(float(even.mean()), float(odd.mean()))
    return even_flat and odd_flat and distinct


def solve_self_consistent(params: SystemParams, k_s: float, g_0: float,
                          delta_0: float, omega_b_rabi: float, *,
                          damping: float = 0.5, rtol: float = 1e-12,
                          max_iterations: int = 1000) -> SteadyState:
    """Fixed point of the amplitude equations with detuning feedback.

    The effective cavity detuning is ``delta_0`` minus the
    radiation-pressure shift sqrt(2) g_0 |c_s| x_1s, and the magnon
    detuning is ``params.delta_m`` plus the Kerr shift 2 k_s |m_s|^2; the
    stored ``delta_c``/``delta_K`` fields of ``params`` are ignored here.
    Damped Picard iteration (damping 0.5 by default).  Raises
    :class:`ConvergenceError` after ``max_iterations`` and
    :class:`BistabilityError` when the residual settles into a period-two
    cycle, the signature of a multistable Kerr oscillator.
    """
    if k_s < 0.0:
        raise ParameterError("k_s must be non-negative")
    if g_0 < 0.0:
        raise ParameterError("g_0 must be non-negative")
    denominator = params.omega_1 + params.G_c**2 / params.omega_2
    delta_c, delta_k = delta_0, 0.0
    residuals: list[float] = []
    for _ in range(max_iterations):
        c_s, m_s = _field_amplitudes(params, delta_c,
                                     params.delta_m + delta_k, omega_b_rabi)
        population = abs(m_s) ** 2
        magnitude = abs(c_s)
        x_1s = g_0 * magnitude**2 / denominator
        delta_c_target = delta_0 - (_SQRT2 * g_0 * magnitude) * x_1s
        delta_k_target = 2.0 * k_s * population
        residual = max(
            abs(delta_c_target - delta_c) / max(1.0, abs(delta_c_target)),
            abs(delta_k_target - delta_k) / max(1.0, abs(delta_k_target)),
        )
        residuals.append(residual)
        if residual < rtol:
            return SteadyState(
                c_s=c_s, m_s=m_s, x_1s=x_1s,
                x_2s=(params.G_c / params.omega_2) * x_1s,
                delta_c_eff=delta_c, delta_m_eff=params.delta_m + delta_k,
                magnon_population=population)
        if _residual_cycle(residuals, rtol):
            raise BistabilityError(
                "fixed-point residual cycles between two levels; the drive "
                f"may sit in a multistable Kerr regime (residual {residual:.3e})",
                residual=residual)
        delta_c += damping * (delta_c_target - delta_c)
        delta_k += damping * (delta_k_target - delta_k)
    raise ConvergenceError(
        f"no fixed point after {max_iterations} iterations "
        f"(last residual {residuals[-1]:.3e})",
        residual=residuals[-1])
