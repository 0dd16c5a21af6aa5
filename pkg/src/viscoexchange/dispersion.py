"""Shear-wave dispersion in a viscoelastic fluid: gapped momentum states.

Inserting the generalized inverse viscosity into the Navier-Stokes shear
equation turns it into a telegrapher-type wave equation

    d^2 v/dt^2 + (1/tau) dv/dt = c^2 d^2 v/dx^2,   c = sqrt(G0/rho).

Plane waves v ~ exp(i k x - i omega t) then obey the quadratic

    omega^2 + i*omega/tau - c^2 k^2 = 0,

whose roots are omega = -i/(2 tau) +/- sqrt(c^2 k^2 - 1/(4 tau^2)). Below
the gap wavevector k_gap = 1/(2 c tau) both roots are purely imaginary
(no propagation, overdamped relaxation); above it the modes propagate
with a uniform decay rate 1/(2 tau). Decaying modes carry a negative
imaginary part in this convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from viscoexchange.errors import ConfigError, DomainError
from viscoexchange.maxwell import FluidParams, _check_grid


@dataclass(frozen=True)
class DispersionPoint:
    """Both complex frequency roots at one wavevector."""

    k: float
    omega_plus: complex
    omega_minus: complex


def shear_wave_speed(params: FluidParams) -> float:
    """Elastic shear-wave speed c = sqrt(G0/rho)."""
    if params.rho is None:
        raise ConfigError("shear-wave dispersion needs a mass density (rho)")
    return math.sqrt(params.G0 / params.rho)


def k_gap(params: FluidParams) -> float:
    """Wavevector gap k_gap = 1/(2 c tau); no propagating modes below it."""
    return 1.0 / (2.0 * shear_wave_speed(params) * params.tau)


def dispersion_point(k: float, params: FluidParams) -> DispersionPoint:
    """Solve the shear-wave quadratic at wavevector k.

    omega_plus carries the +sqrt branch: the propagating root with
    Re(omega) >= 0 above the gap, the slower-decaying imaginary root at or
    below it. Re(omega_plus) is exactly 0 for k <= k_gap.
    """
    kf = float(k)
    if not math.isfinite(kf) or kf < 0:
        raise DomainError(f"k must be finite and >= 0, got {k}")
    c = shear_wave_speed(params)
    half_rate = 1.0 / (2.0 * params.tau)
    if kf <= k_gap(params):
        # Overdamped branch: purely imaginary roots.
        root = math.sqrt(max(half_rate * half_rate - (c * kf) ** 2, 0.0))
        return DispersionPoint(
            k=kf,
            omega_plus=complex(0.0, -half_rate + root),
            omega_minus=complex(0.0, -half_rate - root),
        )
    root = math.sqrt((c * kf) ** 2 - half_rate * half_rate)
    return DispersionPoint(
        k=kf,
        omega_plus=complex(root, -half_rate),
        omega_minus=complex(-root, -half_rate),
    )


def dispersion_sweep(k_grid, params: FluidParams) -> list[DispersionPoint]:
    """Evaluate the dispersion relation on an increasing wavevector grid."""
    grid = np.asarray(k_grid, dtype=np.float64)
    _check_grid(grid, "k grid", allow_zero=True)
    return [dispersion_point(float(k), params) for k in grid]


def dispersion_residual(point: DispersionPoint, params: FluidParams) -> float:
    """Largest |omega^2 + i*omega/tau - c^2 k^2| over the two roots."""
    c = shear_wave_speed(params)
    ck2 = (c * point.k) ** 2
    inv_tau = 1.0 / params.tau
    return max(
        abs(w * w + 1j * w * inv_tau - ck2)
        for w in (point.omega_plus, point.omega_minus)
    )
