"""Run configuration: JSON schema, defaults, strict validation.

A config file is one JSON object. Fluid parameters sit at the top level
(the minimal valid config is ``{"eta0": 1, "G0": 1}``); everything else
has defaults. Unknown keys anywhere are rejected with the offending path
in the message, so typos fail loudly instead of silently using defaults.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass

import numpy as np

from viscoexchange.dispersion import k_gap
from viscoexchange.errors import ConfigError
from viscoexchange.exchange import (
    InteractionKernel,
    Orbital,
    QuadratureSpec,
)
from viscoexchange.maxwell import DriveSignal, FluidParams
from viscoexchange.transition import RegimeThresholds

_METHODS = ("quadrature", "monte_carlo")


@dataclass(frozen=True)
class GridSpec:
    """Log-spaced grid: count points from min to max inclusive."""

    min: float
    max: float
    count: int

    def values(self) -> np.ndarray:
        return np.geomspace(self.min, self.max, self.count)


@dataclass(frozen=True)
class KGridSpec(GridSpec):
    """Wavevector grid; 'kgap' scale means multiples of the gap wavevector."""

    scale: str = "kgap"

    def k_values(self, params: FluidParams) -> np.ndarray:
        vals = self.values()
        if self.scale == "kgap":
            return vals * k_gap(params)
        return vals


@dataclass(frozen=True)
class RunConfig:
    fluid: FluidParams
    omega_tau_grid: GridSpec
    k_grid: KGridSpec
    tau_grid: GridSpec
    drive_mode: str
    drive: DriveSignal
    dt: float | None
    horizon: float | None
    orbitals: tuple[Orbital, Orbital]
    kernel: InteractionKernel
    quadrature: QuadratureSpec
    n_samples: int
    seed: int
    thresholds: RegimeThresholds
    omega_tau: float
    omega: float | None
    t_obs: float | None
    J0: float | None
    methods: tuple[str, ...]
    format: str


_TOP_KEYS = {
    "eta0",
    "G0",
    "rho",
    "omega_tau_grid",
    "k_grid",
    "tau_grid",
    "drive",
    "dt",
    "horizon",
    "orbitals",
    "kernel",
    "quadrature",
    "mc",
    "thresholds",
    "omega_tau",
    "omega",
    "t_obs",
    "J0",
    "methods",
    "format",
}


def parse_config(path: str) -> RunConfig:
    """Load and validate a JSON config file into a RunConfig."""
    if not os.path.exists(path):
        raise ConfigError(f"config file not found: {path}")
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    return build_config(raw)


def build_config(raw) -> RunConfig:
    """Validate a decoded JSON object (also the programmatic entry point)."""
    _expect_object(raw, "config")
    _reject_unknown(raw, _TOP_KEYS, "config")

    eta0 = _number(raw, "eta0", required=True)
    g0 = _number(raw, "G0", required=True)
    rho = _number(raw, "rho")
    if eta0 is None or eta0 <= 0:
        raise ConfigError(f"eta0 must be a number > 0, got {raw.get('eta0')!r}")
    if g0 is None or g0 <= 0:
        raise ConfigError(f"G0 must be a number > 0, got {raw.get('G0')!r}")
    if rho is not None and rho <= 0:
        raise ConfigError(f"rho must be a number > 0, got {raw.get('rho')!r}")
    fluid = FluidParams(eta0=eta0, G0=g0, rho=rho)

    omega_tau_grid = _grid(
        raw.get("omega_tau_grid"), "omega_tau_grid", GridSpec(1e-3, 1e3, 61)
    )
    k_grid = _k_grid(raw.get("k_grid"))
    tau_grid = _grid(raw.get("tau_grid"), "tau_grid", GridSpec(1e-13, 1e4, 69))

    drive_mode, drive = _drive(raw.get("drive"))
    dt = _number(raw, "dt")
    horizon = _number(raw, "horizon")

    orbitals = _orbitals(raw.get("orbitals"))
    kernel = _kernel(raw.get("kernel"))
    quadrature = _quadrature(raw.get("quadrature"))
    n_samples, seed = _mc(raw.get("mc"))
    thresholds = _thresholds(raw.get("thresholds"))

    omega_tau = _number(raw, "omega_tau")
    if omega_tau is None:
        omega_tau = 0.0
    elif omega_tau < 0:
        raise ConfigError(f"omega_tau must be >= 0, got {omega_tau}")

    omega = _number(raw, "omega")
    t_obs = _number(raw, "t_obs")
    if omega is not None and t_obs is not None:
        raise ConfigError("omega and t_obs are mutually exclusive")
    if omega is None and t_obs is None:
        omega = 1.0
    j0 = _number(raw, "J0")

    methods = _methods(raw.get("methods"))
    fmt = raw.get("format", "csv")
    if fmt not in ("csv", "json"):
        raise ConfigError(f"format must be 'csv' or 'json', got {fmt!r}")

    return RunConfig(
        fluid=fluid,
        omega_tau_grid=omega_tau_grid,
        k_grid=k_grid,
        tau_grid=tau_grid,
        drive_mode=drive_mode,
        drive=drive,
        dt=dt,
        horizon=horizon,
        orbitals=orbitals,
        kernel=kernel,
        quadrature=quadrature,
        n_samples=n_samples,
        seed=seed,
        thresholds=thresholds,
        omega_tau=omega_tau,
        omega=omega,
        t_obs=t_obs,
        J0=j0,
        methods=methods,
        format=fmt,
    )


def _expect_object(obj, path: str) -> None:
    if not isinstance(obj, dict):
        raise ConfigError(f"{path} must be a JSON object, got {type(obj).__name__}")


def _reject_unknown(obj: dict, allowed: set[str], path: str) -> None:
    for key in obj:
        if key not in allowed:
            raise ConfigError(f"unknown key {key!r} in {path}")


def _number(obj: dict, key: str, required: bool = False) -> float | None:
    if key not in obj or obj[key] is None:
        if required:
            raise ConfigError(f"missing required key {key!r}")
        return None
    val = obj[key]
    if isinstance(val, bool) or not isinstance(val, (int, float)):
        raise ConfigError(f"{key} must be a number, got {val!r}")
    if not math.isfinite(val):
        raise ConfigError(f"{key} must be finite, got {val!r}")
    return float(val)


def _int(obj: dict, key: str, path: str) -> int | None:
    if key not in obj or obj[key] is None:
        return None
    val = obj[key]
    if isinstance(val, bool) or not isinstance(val, int):
        raise ConfigError(f"{path}.{key} must be an integer, got {val!r}")
    return val


def _grid(section, path: str, default: GridSpec) -> GridSpec:
    if section is None:
        return default
    _expect_object(section, path)
    _reject_unknown(section, {"min", "max", "count"}, path)
    lo = _number(section, "min")
    hi = _number(section, "max")
    count = _int(section, "count", path)
    lo = default.min if lo is None else lo
    hi = default.max if hi is None else hi
    count = default.count if count is None else count
    _check_grid_spec(lo, hi, count, path)
    return GridSpec(lo, hi, count)


def _k_grid(section) -> KGridSpec:
    default = KGridSpec(0.01, 100.0, 60, "kgap")
    if section is None:
        return default
    _expect_object(section, "k_grid")
    _reject_unknown(section, {"min", "max", "count", "scale"}, "k_grid")
    lo = _number(section, "min")
    hi = _number(section, "max")
    count = _int(section, "count", "k_grid")
    scale = section.get("scale", default.scale)
    if scale not in ("kgap", "absolute"):
        raise ConfigError(f"k_grid.scale must be 'kgap' or 'absolute', got {scale!r}")
    lo = default.min if lo is None else lo
    hi = default.max if hi is None else hi
    count = default.count if count is None else count
    _check_grid_spec(lo, hi, count, "k_grid")
    return KGridSpec(lo, hi, count, scale)


def _check_grid_spec(lo: float, hi: float, count: int, path: str) -> None:
    if lo <= 0:
        raise ConfigError(f"{path}.min must be > 0 for a log-spaced grid, got {lo}")
    if count < 1:
        raise ConfigError(f"{path}.count must be >= 1, got {count}")
    if count == 1:
        if hi != lo:
            raise ConfigError(f"{path}: count=1 requires min == max")
    elif hi <= lo:
        raise ConfigError(f"{path}.max must be > min, got min={lo}, max={hi}")


def _drive(section) -> tuple[str, DriveSignal]:
    defaults = {
        "mode": "stress",
        "kind": "step",
        "amplitude": 1.0,
        "omega": 0.0,
        "phase": 0.0,
    }
    if section is None:
        section = {}
    _expect_object(section, "drive")
    _reject_unknown(section, set(defaults), "drive")
    mode = section.get("mode", defaults["mode"])
    if mode not in ("stress", "strain"):
        raise ConfigError(f"drive.mode must be 'stress' or 'strain', got {mode!r}")
    kind = section.get("kind", defaults["kind"])
    amp = _number(section, "amplitude")
    omega = _number(section, "omega")
    phase = _number(section, "phase")
    try:
        drive = DriveSignal(
            kind=kind,
            amplitude=defaults["amplitude"] if amp is None else amp,
            omega=defaults["omega"] if omega is None else omega,
            phase=defaults["phase"] if phase is None else phase,
        )
    except Exception as exc:
        raise ConfigError(f"drive: {exc}") from exc
    return mode, drive


def _orbitals(section) -> tuple[Orbital, Orbital]:
    if section is None:
        return Orbital(center=-1.0, sigma=1.0), Orbital(center=1.0, sigma=1.0)
    if not isinstance(section, list) or len(section) != 2:
        raise ConfigError("orbitals must be a list of exactly two objects")
    out = []
    for i, entry in enumerate(section):
        path = f"orbitals[{i}]"
        _expect_object(entry, path)
        _reject_unknown(entry, {"center", "sigma"}, path)
        center = _number(entry, "center")
        sigma = _number(entry, "sigma")
        if center is None or sigma is None:
            raise ConfigError(f"{path} needs both center and sigma")
        try:
            out.append(Orbital(center=center, sigma=sigma))
        except Exception as exc:
            raise ConfigError(f"{path}: {exc}") from exc
    return out[0], out[1]


def _kernel(section) -> InteractionKernel:
    if section is None:
        return InteractionKernel(kind="gaussian_well", U0=1.0, w=1.0)
    _expect_object(section, "kernel")
    _reject_unknown(section, {"kind", "U0", "w", "a"}, "kernel")
    kind = section.get("kind", "gaussian_well")
    u0 = _number(section, "U0")
    try:
        return InteractionKernel(
            kind=kind,
            U0=1.0 if u0 is None else u0,
            w=_number(section, "w"),
            a=_number(section, "a"),
        )
    except Exception as exc:
        raise ConfigError(f"kernel: {exc}") from exc


def _quadrature(section) -> QuadratureSpec:
    if section is None:
        return QuadratureSpec()
    _expect_object(section, "quadrature")
    _reject_unknown(section, {"nodes", "padding"}, "quadrature")
    nodes = _int(section, "nodes", "quadrature")
    padding = _number(section, "padding")
    default = QuadratureSpec()
    return QuadratureSpec(
        nodes=default.nodes if nodes is None else nodes,
        padding=default.padding if padding is None else padding,
    )


def _mc(section) -> tuple[int, int]:
    if section is None:
        return 100_000, 0
    _expect_object(section, "mc")
    _reject_unknown(section, {"n_samples", "seed"}, "mc")
    n = _int(section, "n_samples", "mc")
    seed = _int(section, "seed", "mc")
    n = 100_000 if n is None else n
    seed = 0 if seed is None else seed
    if n < 1000:
        raise ConfigError(f"mc.n_samples must be >= 1000, got {n}")
    if not 0 <= seed < 2**64:
        raise ConfigError(f"mc.seed must fit in an unsigned 64-bit int, got {seed}")
    return n, seed


def _thresholds(section) -> RegimeThresholds:
    if section is None:
        return RegimeThresholds()
    _expect_object(section, "thresholds")
    _reject_unknown(section, {"active_max", "inactive_min"}, "thresholds")
    active = _number(section, "active_max")
    inactive = _number(section, "inactive_min")
    default = RegimeThresholds()
    try:
        return RegimeThresholds(
            active_max=default.active_max if active is None else active,
            inactive_min=default.inactive_min if inactive is None else inactive,
        )
    except Exception as exc:
        raise ConfigError(f"thresholds: {exc}") from exc


def _methods(section) -> tuple[str, ...]:
    if section is None:
        return _METHODS
    if not isinstance(section, list) or not section:
        raise ConfigError("methods must be a nonempty list")
    for m in section:
        if m not in _METHODS:
            raise ConfigError(f"methods entries must be among {_METHODS}, got {m!r}")
    if len(set(section)) != len(section):
        raise ConfigError("methods entries must be unique")
    return tuple(section)
