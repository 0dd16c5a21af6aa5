"""Regime classification: when does quantum statistics affect observables?

Particles in a fluid can only swap places during a measurement that lasts
much longer than the relaxation time tau, so exchange effects (level
splitting, statistics) are operative only for omega*tau << 1 and frozen
out for omega*tau >> 1. The asymptotic inequalities are sharpened into
configurable decade thresholds; the scale-free midpoint of the crossover
is omega*tau = 1, where the viscoelastic factor F passes through 1/2.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from viscoexchange.errors import DomainError, NumericalFailure
from viscoexchange.maxwell import _check_grid, response_factor

#: Boltzmann constant (J/K), exact by SI definition
K_B = 1.380649e-23


class Regime(enum.Enum):
    STATISTICS_ACTIVE = "StatisticsActive"
    CROSSOVER = "Crossover"
    STATISTICS_INACTIVE = "StatisticsInactive"


@dataclass(frozen=True)
class RegimeThresholds:
    """Bounds on omega*tau separating the three regimes.

    Defaults put one decade on each side of omega*tau = 1.
    """

    active_max: float = 0.1
    inactive_min: float = 10.0

    def __post_init__(self) -> None:
        if not (0.0 < self.active_max < 1.0 < self.inactive_min):
            raise DomainError(
                "thresholds must satisfy 0 < active_max < 1 < inactive_min, got "
                f"active_max={self.active_max}, inactive_min={self.inactive_min}"
            )


def classify_regime(
    omega_tau: float, thresholds: RegimeThresholds = RegimeThresholds()
) -> Regime:
    """Classify a dimensionless omega*tau value."""
    x = float(omega_tau)
    if not math.isfinite(x) or x < 0:
        raise DomainError(f"omega_tau must be finite and >= 0, got {omega_tau}")
    if x < thresholds.active_max:
        return Regime.STATISTICS_ACTIVE
    if x > thresholds.inactive_min:
        return Regime.STATISTICS_INACTIVE
    return Regime.CROSSOVER


def measurement_window(
    t_obs: float, tau: float, thresholds: RegimeThresholds = RegimeThresholds()
) -> Regime:
    """Classify an experiment of duration t_obs against relaxation time tau.

    Long measurements (t_obs >> tau) are statistics-active; the mapping is
    classify_regime(tau / t_obs).
    """
    if not (math.isfinite(t_obs) and t_obs > 0):
        raise DomainError(f"t_obs must be finite and > 0, got {t_obs}")
    if not (math.isfinite(tau) and tau > 0):
        raise DomainError(f"tau must be finite and > 0, got {tau}")
    return classify_regime(tau / t_obs, thresholds)


def arrhenius_tau(tau0: float, Ea: float, T: float) -> float:
    """Relaxation time from an Arrhenius law, tau = tau0 * exp(Ea/(kB*T)).

    A convenience knob for sweeping tau over many decades by varying the
    temperature; not a statement about any particular material.
    """
    if not (math.isfinite(tau0) and tau0 > 0):
        raise DomainError(f"tau0 must be finite and > 0, got {tau0}")
    if not (math.isfinite(T) and T > 0):
        raise DomainError(f"T must be finite and > 0, got {T}")
    if not (math.isfinite(Ea) and Ea >= 0):
        raise DomainError(f"Ea must be finite and >= 0, got {Ea}")
    try:
        tau = tau0 * math.exp(Ea / (K_B * T))
    except OverflowError:
        tau = math.inf
    if not math.isfinite(tau):
        raise NumericalFailure(
            f"arrhenius_tau overflowed: tau0={tau0}, Ea/(kB*T)={Ea / (K_B * T)}"
        )
    return tau


@dataclass(frozen=True)
class TransitionRow:
    tau: float
    omega_tau: float
    F: float
    regime: Regime
    J_modulated: float | None
    splitting: float | None


@dataclass(frozen=True)
class TransitionResult:
    """Sweep table plus the located statistics crossover.

    crossover_omega_tau is exactly 1 (F = 1/2) whenever the sweep straddles
    it, None otherwise; crossover_tau is the corresponding relaxation time
    at the probing frequency.
    """

    rows: list[TransitionRow]
    omega: float
    crossover_omega_tau: float | None
    crossover_tau: float | None


def transition_sweep(
    tau_grid,
    omega: float | None = None,
    t_obs: float | None = None,
    thresholds: RegimeThresholds = RegimeThresholds(),
    J0: float | None = None,
) -> TransitionResult:
    """Sweep the relaxation time at a fixed probe and classify each point.

    Exactly one of `omega` (probing frequency, rad/s) or `t_obs`
    (observation time, s; probes omega_tau = tau/t_obs) must be given.
    Each row carries omega*tau, F and the regime; when J0 is supplied the
    modulated exchange J = J0*F and level splitting 2J are included.
    """
    if (omega is None) == (t_obs is None):
        raise DomainError("specify exactly one of omega or t_obs")
    if t_obs is not None:
        if not (math.isfinite(t_obs) and t_obs > 0):
            raise DomainError(f"t_obs must be finite and > 0, got {t_obs}")
        omega = 1.0 / t_obs
    assert omega is not None
    if not (math.isfinite(omega) and omega > 0):
        raise DomainError(f"omega must be finite and > 0, got {omega}")
    if J0 is not None and not math.isfinite(J0):
        raise DomainError(f"J0 must be finite, got {J0}")

    grid = np.asarray(tau_grid, dtype=np.float64)
    _check_grid(grid, "tau grid", allow_zero=False)

    rows = []
    for tau in grid:
        tau = float(tau)
        wt = omega * tau
        if not math.isfinite(wt):
            raise NumericalFailure(f"omega*tau overflowed at tau={tau}")
        f = response_factor(wt)
        if J0 is None:
            j = split = None
        else:
            j = J0 * f
            split = 2.0 * j
        rows.append(
            TransitionRow(
                tau=tau,
                omega_tau=wt,
                F=f,
                regime=classify_regime(wt, thresholds),
                J_modulated=j,
                splitting=split,
            )
        )

    # F crosses 1/2 exactly at omega*tau = 1; report it when straddled.
    if rows[0].omega_tau <= 1.0 <= rows[-1].omega_tau:
        cross_wt: float | None = 1.0
        cross_tau: float | None = 1.0 / omega
    else:
        cross_wt = cross_tau = None
    return TransitionResult(
        rows=rows,
        omega=omega,
        crossover_omega_tau=cross_wt,
        crossover_tau=cross_tau,
    )
