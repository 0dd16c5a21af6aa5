"""viscoexchange: when is quantum indistinguishability operative in a fluid?

Simulation library for the Maxwell-Frenkel viscoelastic response, the
two-particle direct and exchange integrals that indistinguishability
produces, the shear-wave dispersion with its wavevector gap, and the
crossover between statistics-active and statistics-inactive regimes as
the relaxation time or measurement frequency is swept.
"""

from viscoexchange._backend import active_backend
from viscoexchange.dispersion import (
    DispersionPoint,
    dispersion_point,
    dispersion_residual,
    dispersion_sweep,
    k_gap,
    shear_wave_speed,
)
from viscoexchange.errors import (
    ConfigError,
    DomainError,
    NumericalFailure,
    ViscoExchangeError,
)
from viscoexchange.exchange import (
    ExchangeResult,
    InteractionKernel,
    Orbital,
    QuadratureSpec,
    direct_integral,
    eval_orbital,
    exchange_integral,
    gaussian_well,
    mc_pair_integrals,
    modulated_exchange,
    pair_energies,
    pair_integrals,
    soft_coulomb,
)
from viscoexchange.maxwell import (
    DriveSignal,
    FluidParams,
    ResponseSample,
    TimeSeries,
    complex_shear_modulus,
    frequency_sweep,
    integrate_strain_driven,
    integrate_stress_driven,
    inverse_viscosity,
    maxwell_residual,
    reconstruct_stress,
    response_factor,
)
from viscoexchange.transition import (
    K_B,
    Regime,
    RegimeThresholds,
    TransitionResult,
    TransitionRow,
    arrhenius_tau,
    classify_regime,
    measurement_window,
    transition_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "DispersionPoint",
    "DomainError",
    "DriveSignal",
    "ExchangeResult",
    "FluidParams",
    "InteractionKernel",
    "K_B",
    "NumericalFailure",
    "Orbital",
    "QuadratureSpec",
    "Regime",
    "RegimeThresholds",
    "ResponseSample",
    "TimeSeries",
    "TransitionResult",
    "TransitionRow",
    "ViscoExchangeError",
    "active_backend",
    "arrhenius_tau",
    "classify_regime",
    "complex_shear_modulus",
    "direct_integral",
    "dispersion_point",
    "dispersion_residual",
    "dispersion_sweep",
    "eval_orbital",
    "exchange_integral",
    "frequency_sweep",
    "gaussian_well",
    "integrate_strain_driven",
    "integrate_stress_driven",
    "inverse_viscosity",
    "k_gap",
    "maxwell_residual",
    "mc_pair_integrals",
    "measurement_window",
    "modulated_exchange",
    "pair_energies",
    "pair_integrals",
    "reconstruct_stress",
    "response_factor",
    "shear_wave_speed",
    "soft_coulomb",
    "transition_sweep",
]
