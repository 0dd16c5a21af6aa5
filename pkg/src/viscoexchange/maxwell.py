"""Maxwell-Frenkel viscoelastic response of a fluid.

The constitutive law combines viscous flow and elastic deformation:

    ds/dt = P/eta0 + (1/G0) dP/dt

with shear strain s, shear stress P, dynamic viscosity eta0 and
instantaneous shear modulus G0. The relaxation time tau = eta0/G0 sets the
crossover between the hydrodynamic regime (omega*tau << 1) and the
solid-like regime (omega*tau >> 1).

Frequency domain: for a periodic drive the law reduces to multiplication
by (1 + i*omega*tau), giving the complex shear modulus

    G(omega) = G0 * i*omega*tau / (1 + i*omega*tau) = G0 * (1 - F)

with the viscoelastic factor F = 1/(1 + (omega*tau)^2). F interpolates
between 1 (viscous, exchange-operative) and 0 (elastic, exchange-inactive)
and is what downstream modules use to modulate exchange energies.

Time domain: two fixed-step 4th-order integrators, one for prescribed
stress and one for prescribed strain. Drive discontinuities at t=0 are
handled analytically (elastic jump), never by the stepper.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from viscoexchange._backend import kernels
from viscoexchange.errors import ConfigError, DomainError

_DRIVE_CODES = {
    "step": kernels.DRIVE_HOLD,
    "constant": kernels.DRIVE_HOLD,
    "ramp": kernels.DRIVE_RAMP,
    "sinusoid": kernels.DRIVE_SINUSOID,
}

# Resource guard for the fixed-step integrators.
_MAX_STEPS = 100_000_000


@dataclass(frozen=True)
class FluidParams:
    """Material state of the fluid.

    Parameters
    ----------
    eta0 : float
        Dynamic viscosity (Pa*s), > 0.
    G0 : float
        Instantaneous shear modulus (Pa), > 0.
    rho : float, optional
        Mass density (kg/m^3), > 0; only needed for shear-wave dispersion.

    The relaxation time tau = eta0/G0 is always derived, never stored, so
    the three quantities cannot drift apart.
    """

    eta0: float
    G0: float
    rho: float | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.eta0) and self.eta0 > 0):
            raise DomainError(f"eta0 must be finite and > 0, got {self.eta0}")
        if not (math.isfinite(self.G0) and self.G0 > 0):
            raise DomainError(f"G0 must be finite and > 0, got {self.G0}")
        if self.rho is not None and not (math.isfinite(self.rho) and self.rho > 0):
            raise DomainError(f"rho must be finite and > 0, got {self.rho}")

    @property
    def tau(self) -> float:
        """Relaxation time tau = eta0/G0 (s)."""
        return self.eta0 / self.G0


@dataclass(frozen=True)
class ResponseSample:
    """One frequency point of the viscoelastic response."""

    omega: float
    omega_tau: float
    F: float
    G_real: float
    G_imag: float
    eta_inv_real: float
    eta_inv_imag: float


@dataclass(frozen=True)
class DriveSignal:
    """Prescribed drive for the time-domain integrators.

    Kinds
    -----
    step, constant
        Signal held at `amplitude` from t=0+ on (switch-on from a
        quiescent state; the two names are synonyms here).
    ramp
        Signal grows linearly, `amplitude` is the constant rate
        (Pa/s when driving stress, 1/s when driving strain).
    sinusoid
        amplitude * cos(omega*t + phase).

    `amplitude` is a stress (Pa) when driving stress and a strain
    (dimensionless) when driving strain, except for ramps as noted.
    """

    kind: str
    amplitude: float
    omega: float = 0.0
    phase: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in _DRIVE_CODES:
            raise DomainError(
                f"unknown drive kind {self.kind!r}; "
                f"expected one of {sorted(set(_DRIVE_CODES))}"
            )
        if not math.isfinite(self.amplitude):
            raise DomainError(f"drive amplitude must be finite, got {self.amplitude}")
        if not (math.isfinite(self.omega) and self.omega >= 0):
            raise DomainError(f"drive omega must be finite and >= 0, got {self.omega}")
        if not math.isfinite(self.phase):
            raise DomainError(f"drive phase must be finite, got {self.phase}")


@dataclass(frozen=True)
class TimeSeries:
    """Uniformly sampled stress/strain history.

    All arrays share one length; t starts at 0 with constant step dt. At
    t=0 the sampled values are the 0+ side of any switch-on discontinuity.
    """

    t: np.ndarray
    stress: np.ndarray
    strain: np.ndarray
    strain_rate: np.ndarray

    @property
    def dt(self) -> float:
        return float(self.t[1] - self.t[0])


def response_factor(omega_tau: float) -> float:
    """Viscoelastic factor F = 1/(1 + (omega*tau)^2).

    Equals 1 in the hydrodynamic limit and falls monotonically to 0 in
    the solid-like limit; F = 1/2 at omega*tau = 1.
    """
    x = float(omega_tau)
    if not math.isfinite(x) or x < 0:
        raise DomainError(f"omega_tau must be finite and >= 0, got {omega_tau}")
    return 1.0 / (1.0 + x * x)


def complex_shear_modulus(omega: float, params: FluidParams) -> tuple[float, float]:
    """Complex shear modulus G(omega) = G0 * i*wt/(1 + i*wt), wt = omega*tau.

    Returns (Re G, Im G). Re G = G0*(1-F) vanishes in the hydrodynamic
    regime and saturates at G0 in the solid-like regime; Im G/Re G = 1/wt.
    """
    w = float(omega)
    if not math.isfinite(w) or w < 0:
        raise DomainError(f"omega must be finite and >= 0, got {omega}")
    wt = w * params.tau
    x = wt * wt
    denom = 1.0 + x
    return params.G0 * x / denom, params.G0 * wt / denom


def inverse_viscosity(omega: float, params: FluidParams) -> tuple[float, float]:
    """Generalized inverse viscosity (1/eta0)*(1 + i*omega*tau).

    Returns (real, imag) parts in 1/(Pa*s); the real part is frequency
    independent.
    """
    w = float(omega)
    if not math.isfinite(w) or w < 0:
        raise DomainError(f"omega must be finite and >= 0, got {omega}")
    return 1.0 / params.eta0, w * params.tau / params.eta0


def frequency_sweep(omega_tau_grid, params: FluidParams) -> list[ResponseSample]:
    """Evaluate the frequency response on a grid of omega*tau values.

    The grid must be nonempty, strictly increasing and nonnegative.
    Returns one ResponseSample per grid point.
    """
    grid = np.asarray(omega_tau_grid, dtype=np.float64)
    _check_grid(grid, "omega_tau grid", allow_zero=True)
    tau = params.tau
    samples = []
    for wt in grid:
        wt = float(wt)
        omega = wt / tau
        f = response_factor(wt)
        g_re, g_im = complex_shear_modulus(omega, params)
        ei_re, ei_im = inverse_viscosity(omega, params)
        samples.append(
            ResponseSample(
                omega=omega,
                omega_tau=wt,
                F=f,
                G_real=g_re,
                G_imag=g_im,
                eta_inv_real=ei_re,
                eta_inv_imag=ei_im,
            )
        )
    return samples


def integrate_stress_driven(
    drive: DriveSignal,
    params: FluidParams,
    dt: float | None = None,
    horizon: float | None = None,
) -> TimeSeries:
    """Strain response to a prescribed stress history.

    Integrates ds/dt = P/eta0 + (dP/dt)/G0 with fixed-step RK4; because
    the right-hand side does not depend on the strain this is a Simpson
    accumulation of the known rate. Any switch-on discontinuity of P at
    t=0 contributes the elastic jump P(0+)/G0 to strain(0); dP/dt in the
    stepper is the smooth part only.

    Parameters
    ----------
    drive : DriveSignal
        Stress drive; amplitude in Pa (Pa/s for ramps).
    params : FluidParams
    dt : float, optional
        Step (s); default tau/1000. Rejected if larger than tau/10.
    horizon : float, optional
        Length of the simulated window (s); default 5*tau.
    """
    dt, n_steps = _step_plan(params, dt, horizon)
    stress, strain, rate = kernels.stress_driven_series(
        _DRIVE_CODES[drive.kind],
        drive.amplitude,
        drive.omega,
        drive.phase,
        n_steps,
        dt,
        params.eta0,
        params.G0,
    )
    t = np.arange(n_steps + 1, dtype=np.float64) * dt
    return TimeSeries(t=t, stress=stress, strain=strain, strain_rate=rate)


def integrate_strain_driven(
    drive: DriveSignal,
    params: FluidParams,
    dt: float | None = None,
    horizon: float | None = None,
) -> TimeSeries:
    """Stress response to a prescribed strain history.

    Integrates dP/dt = G0*ds/dt - P/tau with fixed-step RK4. A strain
    discontinuity at t=0 enters as the elastic initial condition
    P(0+) = G0*s(0+), so a step drive relaxes as G0*s0*exp(-t/tau).

    Same stepping parameters and guards as integrate_stress_driven.
    """
    dt, n_steps = _step_plan(params, dt, horizon)
    stress, strain, rate = kernels.strain_driven_series(
        _DRIVE_CODES[drive.kind],
        drive.amplitude,
        drive.omega,
        drive.phase,
        n_steps,
        dt,
        params.eta0,
        params.G0,
    )
    t = np.arange(n_steps + 1, dtype=np.float64) * dt
    return TimeSeries(t=t, stress=stress, strain=strain, strain_rate=rate)


def reconstruct_stress(series: TimeSeries, params: FluidParams) -> np.ndarray:
    """Recover the stress history from a sampled strain-rate series.

    Replays dP/dt = G0*ds/dt - P/tau with the series' strain rate
    (piecewise linear between samples) and P(0) = stress(0). Feeding the
    output of integrate_stress_driven through this function reproduces
    the original stress, which is the mutual-consistency check between
    the two integrators.
    """
    rate = np.ascontiguousarray(series.strain_rate, dtype=np.float64)
    return kernels.stress_from_strain_rate(
        rate, series.dt, float(series.stress[0]), params.eta0, params.G0
    )


def maxwell_residual(series: TimeSeries, params: FluidParams) -> float:
    """Largest interior residual of the constitutive law on a TimeSeries.

    Uses central differences of the stored strain and stress, so it is
    independent of how the series was produced:

        | ds/dt - P/eta0 - (dP/dt)/G0 |   at interior samples.

    For a series produced by the integrators this is O(dt^2) relative to
    the strain-rate scale.
    """
    if series.t.shape[0] < 3:
        return 0.0
    dt = series.dt
    ds = (series.strain[2:] - series.strain[:-2]) / (2.0 * dt)
    dp = (series.stress[2:] - series.stress[:-2]) / (2.0 * dt)
    res = ds - series.stress[1:-1] / params.eta0 - dp / params.G0
    return float(np.max(np.abs(res)))


def _step_plan(
    params: FluidParams, dt: float | None, horizon: float | None
) -> tuple[float, int]:
    tau = params.tau
    if dt is None:
        dt = tau / 1000.0
    if horizon is None:
        horizon = 5.0 * tau
    if not (math.isfinite(dt) and dt > 0):
        raise ConfigError(f"dt must be finite and > 0, got {dt}")
    if dt > tau / 10.0:
        raise ConfigError(
            f"dt={dt} too coarse for tau={tau}; the accuracy guard requires dt <= tau/10"
        )
    if not (math.isfinite(horizon) and horizon >= dt):
        raise ConfigError(f"horizon must be finite and >= dt, got {horizon}")
    n_steps = int(math.ceil(horizon / dt - 1e-9))
    if n_steps > _MAX_STEPS:
        raise ConfigError(
            f"horizon/dt = {horizon / dt:.3g} exceeds the {_MAX_STEPS} step limit"
        )
    return float(dt), n_steps


def _check_grid(grid: np.ndarray, label: str, allow_zero: bool) -> None:
    if grid.ndim != 1 or grid.size == 0:
        raise ConfigError(f"{label} must be a nonempty 1-D sequence")
    if not np.all(np.isfinite(grid)):
        raise ConfigError(f"{label} contains non-finite values")
    if allow_zero:
        if grid[0] < 0.0:
            raise ConfigError(f"{label} values must be >= 0")
    elif grid[0] <= 0.0:
        raise ConfigError(f"{label} values must be > 0")
    if grid.size > 1 and not np.all(np.diff(grid) > 0):
        raise ConfigError(f"{label} must be strictly increasing")
