"""Physical parameters and derived quantities of the coupled system.

Unit conventions
----------------
Every dynamical quantity (frequency, detuning, damping rate, coupling) is
stored as an *angular* frequency in rad/s.  Values quoted in ordinary hertz
must be multiplied by 2*pi before they enter a :class:`SystemParams`; the
config loader in :mod:`magnomech.config` does exactly that.

The linearized dynamics are written in hbar = 1 units.  SI constants enter
only through :func:`thermal_occupation` (hbar, k_B) and the two geometry
helpers (epsilon_0, the gyromagnetic ratio).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace

from scipy import constants

from .errors import ParameterError

TWO_PI = 2.0 * math.pi

HBAR = constants.hbar            # J s
K_B = constants.k                # J / K
EPSILON_0 = constants.epsilon_0  # F / m

# garnet-sphere material defaults
SPIN_DENSITY = 4.22e27                  # spins / m^3
GYROMAGNETIC_RATIO = TWO_PI * 28e9      # rad/s per tesla


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterError(message)


@dataclass(frozen=True)
class SystemParams:
    """One full configuration of the coupled system.

    All fields are angular frequencies or rates in rad/s except
    ``temperature`` (kelvin).  ``omega_c_abs`` and ``omega_m_abs`` are the
    absolute cavity and magnon frequencies, used only to evaluate the
    thermal occupations of their baths; the detunings are independent
    inputs and are never derived from them.
    """

    omega_1: float       # mechanical resonator 1 frequency
    omega_2: float       # mechanical resonator 2 frequency
    kappa: float         # cavity decay rate
    gamma_m: float       # magnon loss rate
    gamma_1: float       # mechanical damping, resonator 1
    gamma_2: float       # mechanical damping, resonator 2
    g_m: float           # photon-magnon coupling
    G_eff: float         # effective optomechanical coupling, >= 0
    G_c: float           # Coulomb coupling between the two resonators
    delta_c: float       # effective cavity detuning
    delta_m: float       # bare magnon detuning
    delta_K: float       # Kerr frequency shift (2 K_s |m_s|^2)
    temperature: float   # bath temperature, kelvin
    omega_c_abs: float   # absolute cavity frequency
    omega_m_abs: float   # absolute magnon frequency

    def __post_init__(self):
        for name in ("omega_1", "omega_2", "kappa", "gamma_m", "gamma_1",
                     "gamma_2", "omega_c_abs", "omega_m_abs"):
            _require(getattr(self, name) > 0.0,
                     f"{name} must be strictly positive")
        # c_s is taken real and positive, so the effective coupling is too
        _require(self.G_eff >= 0.0, "G_eff must be non-negative")
        _require(self.temperature >= 0.0, "temperature must be non-negative")

    def replace(self, **changes) -> "SystemParams":
        """Copy of this parameter set with the given fields replaced."""
        return replace(self, **changes)

    @property
    def delta_m_eff(self) -> float:
        """Kerr-shifted magnon detuning delta_m + delta_K."""
        return self.delta_m + self.delta_K


def field_names() -> tuple[str, ...]:
    """Names of all :class:`SystemParams` fields, in declaration order."""
    return tuple(f.name for f in fields(SystemParams))


@dataclass(frozen=True)
class ThermalOccupations:
    """Mean thermal quanta of the four baths (two mechanical, cavity, magnon)."""

    n_1: float
    n_2: float
    n_c: float
    n_m: float

    def __post_init__(self):
        for name in ("n_1", "n_2", "n_c", "n_m"):
            _require(getattr(self, name) >= 0.0, f"{name} must be non-negative")


def thermal_occupation(omega: float, temperature: float) -> float:
    """Bose-Einstein occupation 1 / (exp(hbar*omega / k_B*T) - 1).

    Returns exactly 0.0 at ``temperature == 0``; the high-frequency tail is
    evaluated as exp(-x) once expm1 would overflow.
    """
    if omega <= 0.0:
        raise ParameterError("thermal_occupation needs omega > 0")
    if temperature < 0.0:
        raise ParameterError("temperature must be non-negative")
    if temperature == 0.0:
        return 0.0
    x = HBAR * omega / (K_B * temperature)
    if x > 700.0:
        return math.exp(-x)
    return 1.0 / math.expm1(x)


def thermal_occupations(params: SystemParams) -> ThermalOccupations:
    """Occupations of all four baths for one parameter set."""
    t = params.temperature
    return ThermalOccupations(
        n_1=thermal_occupation(params.omega_1, t),
        n_2=thermal_occupation(params.omega_2, t),
        n_c=thermal_occupation(params.omega_c_abs, t),
        n_m=thermal_occupation(params.omega_m_abs, t),
    )


@dataclass(frozen=True)
class DriveGeometry:
    """Magnetic drive applied to the magnon sphere."""

    B0: float                                        # tesla
    sphere_volume: float                             # m^3
    spin_density: float = SPIN_DENSITY               # spins / m^3
    gyromagnetic_ratio: float = GYROMAGNETIC_RATIO   # rad/s per tesla

    def __post_init__(self):
        _require(self.B0 >= 0.0, "B0 must be non-negative")
        for name in ("sphere_volume", "spin_density", "gyromagnetic_ratio"):
            _require(getattr(self, name) > 0.0,
                     f"{name} must be strictly positive")


def rabi_frequency(geom: DriveGeometry) -> float:
    """Collective-spin drive rate (sqrt(5)/4) * gamma * sqrt(rho * V) * B0.

    The sqrt(5 N) enhancement comes from the collective coupling of the N
    spin-5/2 sites in the sphere to the uniform drive field.
    """
    n_spins = geom.spin_density * geom.sphere_volume
    return (math.sqrt(5.0) / 4.0) * geom.gyromagnetic_ratio \
        * math.sqrt(n_spins) * geom.B0


@dataclass(frozen=True)
class CoulombGeometry:
    """Biased-capacitor geometry coupling the two mechanical resonators."""

    C1: float   # gate capacitance of resonator 1, farad
    C2: float   # gate capacitance of resonator 2, farad
    V1: float   # bias voltage on resonator 1, volt
    V2: float   # bias voltage on resonator 2, volt
    d: float    # resonator separation, meter

    def __post_init__(self):
        _require(self.C1 > 0.0 and self.C2 > 0.0,
                 "capacitances must be strictly positive")
        _require(self.d > 0.0, "separation d must be strictly positive")


def coulomb_coupling(geom: CoulombGeometry) -> float:
    """Position-position coupling C1 V1 C2 V2 / (2 pi eps0 d^3)."""
    return geom.C1 * geom.V1 * geom.C2 * geom.V2 \
        / (TWO_PI * EPSILON_0 * geom.d**3)


def baseline_params(**overrides) -> SystemParams:
    """Reference 10 MHz / 10 GHz parameter set used by tests and demos.

    Both mechanical modes at 10 MHz, cavity linewidth 5.5 MHz, magnon loss
    0.1 MHz, mechanical damping 200 Hz, 10 mK bath, no Coulomb coupling.
    Keyword overrides are applied on top.
    """
    omega_1 = TWO_PI * 10e6
    kappa = TWO_PI * 5.5e6
    base = SystemParams(
        omega_1=omega_1,
        omega_2=omega_1,
        kappa=kappa,
        gamma_m=TWO_PI * 0.1e6,
        gamma_1=TWO_PI * 200.0,
        gamma_2=TWO_PI * 200.0,
        g_m=TWO_PI * 15e6,
        G_eff=0.55 * kappa,
        G_c=0.0,
        delta_c=omega_1,
        delta_m=omega_1,
        delta_K=0.65 * omega_1,
        temperature=0.010,
        omega_c_abs=TWO_PI * 10e9,
        omega_m_abs=TWO_PI * 10e9,
    )
    return base.replace(**overrides) if overrides else base
