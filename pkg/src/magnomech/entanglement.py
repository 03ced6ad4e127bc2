"""Two-mode reduction of the covariance matrix and logarithmic negativity."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .dynamics import build_drift, build_diffusion, solve_lyapunov, stability
from .errors import ParameterError, PhysicalityError
from .params import SystemParams, thermal_occupations

#: negativity below this floor is solver noise and reported as exactly zero
EN_FLOOR = 1e-9


class Mode(Enum):
    """The four modes, in quadrature-vector order."""

    M1 = 0
    M2 = 1
    CAVITY = 2
    MAGNON = 3

    @property
    def block(self) -> slice:
        """Row/column slice of this mode's quadrature pair."""
        return slice(2 * self.value, 2 * self.value + 2)

    @classmethod
    def from_label(cls, label: str) -> "Mode":
        """Parse one of ``m1 | m2 | cavity | magnon`` (case-insensitive)."""
        try:
            return cls[label.strip().upper()]
        except KeyError:
            valid = ", ".join(m.name.lower() for m in cls)
            raise ParameterError(f"unknown mode {label!r}; expected one of {valid}") from None


@dataclass(frozen=True)
class ModePair:
    """Unordered pair of distinct modes; stored with the lower index first."""

    first: Mode
    second: Mode

    def __post_init__(self):
        if self.first == self.second:
            raise ParameterError("a mode pair must name two distinct modes")
        if self.first.value > self.second.value:
            first, second = self.second, self.first
            object.__setattr__(self, "first", first)
            object.__setattr__(self, "second", second)

    @classmethod
    def from_labels(cls, first: str, second: str) -> "ModePair":
        return cls(Mode.from_label(first), Mode.from_label(second))

    def labels(self) -> tuple[str, str]:
        return self.first.name.lower(), self.second.name.lower()


@dataclass(frozen=True)
class ReducedCovariance:
    """4x4 two-mode covariance in 2x2 block form [[B1, E], [E^T, B2]].

    ``b1`` and ``b2`` are the local blocks (lower mode index first), ``e``
    the cross-correlation block.
    """

    b1: np.ndarray
    b2: np.ndarray
    e: np.ndarray

    def __post_init__(self):
        for name in ("b1", "b2", "e"):
            block = np.asarray(getattr(self, name), dtype=float)
            if block.shape != (2, 2):
                raise ParameterError(f"{name} must be a 2x2 block")
            object.__setattr__(self, name, block)
        for name in ("b1", "b2"):
            block = getattr(self, name)
            scale = max(1.0, float(np.max(np.abs(block))))
            if not np.allclose(block, block.T, rtol=0.0, atol=1e-10 * scale):
                raise ParameterError(f"local block {name} must be symmetric")
            # single-mode symplectic eigenvalue of a 2x2 block is sqrt(det)
            det = float(np.linalg.det(block))
            if det < (0.5 - 1e-9) ** 2:
                raise PhysicalityError(
                    f"local block {name} has det {det!r}, below the vacuum bound 1/4")

    @property
    def psi(self) -> np.ndarray:
        """The assembled symmetric 4x4 matrix."""
        return np.block([[self.b1, self.e], [self.e.T, self.b2]])


def reduce_covariance(v: np.ndarray, pair: ModePair) -> ReducedCovariance:
    """Extract the two-mode block covariance for ``pair`` from the 8x8 V."""
    v = np.asarray(v, dtype=float)
    s1, s2 = pair.first.block, pair.second.block
    return ReducedCovariance(b1=v[s1, s1], b2=v[s2, s2], e=v[s1, s2])


def _det2(block: np.ndarray) -> float:
    return float(block[0, 0] * block[1, 1] - block[0, 1] * block[1, 0])


def log_negativity(psi: ReducedCovariance) -> float:
    """Logarithmic negativity E_N = max(0, -ln 2 eta) of a two-mode state.

    eta is the minimum symplectic eigenvalue of the partially transposed
    covariance, computed in closed form from the block determinants:

        sigma = det B1 + det B2 - 2 det E
        eta   = sqrt((sigma - sqrt(sigma^2 - 4 det Psi)) / 2)

    The state is entangled iff eta < 1/2.  A slightly negative
    discriminant (within -1e-12 of zero, relative) is clamped as roundoff;
    anything worse, or a non-positive det Psi, raises
    :class:`PhysicalityError`.  Values of E_N below :data:`EN_FLOOR` are
    reported as exactly 0.
    """
    det_b1 = _det2(psi.b1)
    det_b2 = _det2(psi.b2)
    det_e = _det2(psi.e)
    det_psi = float(np.linalg.det(psi.psi))
    if det_psi <= 0.0:
        raise PhysicalityError(
            f"reduced covariance has non-positive determinant {det_psi!r}")
    sigma = det_b1 + det_b2 - 2.0 * det_e
    discriminant = sigma * sigma - 4.0 * det_psi
    if discriminant < 0.0:
        if discriminant < -1e-12 * max(1.0, sigma * sigma):
            raise PhysicalityError(
                f"negative discriminant {discriminant!r} in the symplectic "
                "eigenvalue formula; the reduced covariance is not physical")
        discriminant = 0.0
    eta_minus = math.sqrt(max(0.0, (sigma - math.sqrt(discriminant)) / 2.0))
    if eta_minus == 0.0:
        raise PhysicalityError("degenerate partial transpose (eta = 0)")
    en = max(0.0, -math.log(2.0 * eta_minus))
    return 0.0 if en < EN_FLOOR else en


class PointResult(NamedTuple):
    """E_N at one parameter point, with the stability verdict attached.

    ``en`` is 0.0 whenever ``stable`` is False; callers that tabulate
    results should render such points as absent rather than as zeros.
    ``margin`` is the largest real part of the drift spectrum in rad/s.
    """

    en: float
    stable: bool
    margin: float


def entanglement_at(params: SystemParams, pair: ModePair) -> PointResult:
    """Full pipeline: occupations, drift/diffusion, Lyapunov solve, E_N."""
    occ = thermal_occupations(params)
    a = build_drift(params)
    d = build_diffusion(params, occ)
    is_stable, margin = stability(a)
    if not is_stable:
        return PointResult(0.0, False, margin)
    v = solve_lyapunov(a, d)
    psi = reduce_covariance(v, pair)
    return PointResult(log_negativity(psi), True, margin)
