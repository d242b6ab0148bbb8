"""Hawking radiation as a two-mode squeezing channel.

Units are natural (k_B = hbar = c = 1). The mode seen by the exterior
observer B is squeezed together with an initially empty interior mode Bbar,
with strength ``r`` fixed by ``sinh(r)**2 * (exp(omega / T) - 1) = 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError
from .symplectic import I2, Z2, check_physical, conjugate, direct_sum, two_mode_squeezer


def temperature_from_surface_gravity(fprime: float, hprime: float) -> float:
    """Hawking temperature ``sqrt(f'(r+) h'(r+)) / (4 pi)`` of a static metric.

    ``fprime`` and ``hprime`` are the horizon derivatives of the metric
    functions in ``ds^2 = -f dt^2 + dr^2 / h + ...``.
    """
    if fprime < 0 or hprime < 0:
        raise InvalidArgumentError("metric derivatives at the horizon must be nonnegative")
    return math.sqrt(fprime * hprime) / (4.0 * math.pi)


def squeezing_from_temperature(T: float, omega: float) -> float:
    """Channel squeezing ``r = arcsinh[(exp(omega/T) - 1)^(-1/2)]``."""
    if not omega > 0:
        raise InvalidArgumentError(f"frequency must be positive, got {omega}")
    if not T >= 0:
        raise InvalidArgumentError(f"temperature must be nonnegative, got {T}")
    if T == 0:
        return 0.0
    x = omega / T
    # sinh r = exp(-x/2) / sqrt(1 - exp(-x)); finite for every x > 0
    return math.asinh(math.exp(-0.5 * x) / math.sqrt(-math.expm1(-x)))


def temperature_from_squeezing(r: float, omega: float) -> float:
    """Inverse of :func:`squeezing_from_temperature`."""
    if not omega > 0:
        raise InvalidArgumentError(f"frequency must be positive, got {omega}")
    if not r >= 0:
        raise InvalidArgumentError(f"squeezing must be nonnegative, got {r}")
    if r == 0:
        return 0.0
    u = math.sinh(r)
    # ln(1 + 1/u^2) without underflow of u^2 for tiny r
    x = math.log1p(u * u) - 2.0 * math.log(u) if u < 1.0 else math.log1p(1.0 / (u * u))
    return omega / x


@dataclass(frozen=True)
class HawkingParams:
    """Hawking temperature, field frequency and the derived squeezing."""

    T: float
    omega: float = 1.0
    fprime: float | None = None
    hprime: float | None = None

    def __post_init__(self):
        if not self.T >= 0:
            raise InvalidArgumentError(f"temperature must be nonnegative, got {self.T}")
        if not self.omega > 0:
            raise InvalidArgumentError(f"frequency must be positive, got {self.omega}")

    @classmethod
    def from_metric(cls, fprime: float, hprime: float, omega: float = 1.0) -> "HawkingParams":
        return cls(temperature_from_surface_gravity(fprime, hprime), omega, fprime, hprime)

    @classmethod
    def from_squeezing(cls, r: float, omega: float = 1.0) -> "HawkingParams":
        return cls(temperature_from_squeezing(r, omega), omega)

    @property
    def r(self) -> float:
        return squeezing_from_temperature(self.T, self.omega)

    @property
    def surface_gravity(self) -> float:
        return 2.0 * math.pi * self.T


def initial_tmsv(s: float) -> np.ndarray:
    """Two-mode squeezed vacuum of parties A and B with squeezing ``s``."""
    if not s >= 0:
        raise InvalidArgumentError(f"initial squeezing must be nonnegative, got {s}")
    c, sh = np.cosh(2 * s), np.sinh(2 * s)
    return np.block([[c * I2, sh * Z2], [sh * Z2, c * I2]])


def hawking_extend(sigma_ab: np.ndarray, r: float) -> np.ndarray:
    """Three-mode state (A, B, Bbar) after the horizon squeezes B with a vacuum Bbar."""
    sigma_ab = np.asarray(sigma_ab, dtype=float)
    if sigma_ab.shape != (4, 4):
        raise InvalidArgumentError(f"expected a two-mode covariance matrix, got {sigma_ab.shape}")
    ok, nu = check_physical(sigma_ab)
    if not ok:
        raise InvalidArgumentError(f"input state is not physical (min symplectic eigenvalue {nu})")
    return conjugate(direct_sum(sigma_ab, I2), two_mode_squeezer(r), [1, 2])


def black_hole_state(s: float, T: float, omega: float = 1.0) -> np.ndarray:
    """``hawking_extend(initial_tmsv(s), r(T, omega))``."""
    return hawking_extend(initial_tmsv(s), squeezing_from_temperature(T, omega))
