"""Command-line front end.

Five subcommands map onto the computational modules:

    response    frequency sweep of F, complex G, inverse viscosity
    maxwell     time-domain stress/strain integration
    dispersion  shear-wave dispersion (gapped momentum states)
    exchange    direct/exchange integrals by quadrature and Monte Carlo
    transition  relaxation-time sweep across the statistics crossover

Every run reads one JSON config (--config), writes one output file
(--out) as CSV or JSON, and is byte-reproducible for a fixed config and
seed. Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys

from viscoexchange import dispersion as disp
from viscoexchange import exchange as exch
from viscoexchange import maxwell as mx
from viscoexchange import transition as trans
from viscoexchange.config import RunConfig, parse_config
from viscoexchange.errors import ConfigError, DomainError, NumericalFailure

HEADERS = {
    "response": [
        "omega",
        "omega_tau",
        "F",
        "G_real",
        "G_imag",
        "eta_inv_real",
        "eta_inv_imag",
    ],
    "maxwell": ["t", "stress", "strain", "strain_rate"],
    "dispersion": [
        "k",
        "omega_re_plus",
        "omega_im_plus",
        "omega_re_minus",
        "omega_im_minus",
    ],
    "exchange": [
        "method",
        "A",
        "J0",
        "J_modulated",
        "E_sym",
        "E_anti",
        "stderr_A",
        "stderr_J0",
    ],
    "transition": ["omega_tau", "F", "regime", "J_modulated", "splitting"],
}


def _cmd_response(cfg: RunConfig) -> list[dict]:
    samples = mx.frequency_sweep(cfg.omega_tau_grid.values(), cfg.fluid)
    return [
        {
            "omega": s.omega,
            "omega_tau": s.omega_tau,
            "F": s.F,
            "G_real": s.G_real,
            "G_imag": s.G_imag,
            "eta_inv_real": s.eta_inv_real,
            "eta_inv_imag": s.eta_inv_imag,
        }
        for s in samples
    ]


def _cmd_maxwell(cfg: RunConfig) -> list[dict]:
    integrate = (
        mx.integrate_stress_driven
        if cfg.drive_mode == "stress"
        else mx.integrate_strain_driven
    )
    series = integrate(cfg.drive, cfg.fluid, dt=cfg.dt, horizon=cfg.horizon)
    return [
        {
            "t": float(series.t[i]),
            "stress": float(series.stress[i]),
            "strain": float(series.strain[i]),
            "strain_rate": float(series.strain_rate[i]),
        }
        for i in range(series.t.shape[0])
    ]


def _cmd_dispersion(cfg: RunConfig) -> list[dict]:
    points = disp.dispersion_sweep(cfg.k_grid.k_values(cfg.fluid), cfg.fluid)
    return [
        {
            "k": p.k,
            "omega_re_plus": p.omega_plus.real,
            "omega_im_plus": p.omega_plus.imag,
            "omega_re_minus": p.omega_minus.real,
            "omega_im_minus": p.omega_minus.imag,
        }
        for p in points
    ]


def _cmd_exchange(cfg: RunConfig) -> list[dict]:
    orb1, orb2 = cfg.orbitals
    rows = []
    for method in cfg.methods:
        if method == "quadrature":
            res = exch.pair_integrals(
                orb1, orb2, cfg.kernel, cfg.quadrature, omega_tau=cfg.omega_tau
            )
        else:
            res = exch.mc_pair_integrals(
                orb1,
                orb2,
                cfg.kernel,
                n_samples=cfg.n_samples,
                seed=cfg.seed,
                omega_tau=cfg.omega_tau,
            )
        rows.append(
            {
                "method": res.method,
                "A": res.A,
                "J0": res.J0,
                "J_modulated": res.J_modulated,
                "E_sym": res.E_sym,
                "E_anti": res.E_anti,
                "stderr_A": res.stderr_A,
                "stderr_J0": res.stderr_J0,
            }
        )
    return rows


def _cmd_transition(cfg: RunConfig) -> list[dict]:
    result = trans.transition_sweep(
        cfg.tau_grid.values(),
        omega=cfg.omega,
        t_obs=cfg.t_obs,
        thresholds=cfg.thresholds,
        J0=cfg.J0,
    )
    if result.crossover_omega_tau is None:
        print("crossover: not straddled by this sweep")
    else:
        print(
            f"crossover: omega_tau={result.crossover_omega_tau!r} "
            f"at tau={result.crossover_tau!r} s"
        )
    return [
        {
            "omega_tau": r.omega_tau,
            "F": r.F,
            "regime": r.regime.value,
            "J_modulated": r.J_modulated,
            "splitting": r.splitting,
        }
        for r in result.rows
    ]


_COMMANDS = {
    "response": _cmd_response,
    "maxwell": _cmd_maxwell,
    "dispersion": _cmd_dispersion,
    "exchange": _cmd_exchange,
    "transition": _cmd_transition,
}


def _check_finite(rows: list[dict]) -> None:
    for i, row in enumerate(rows):
        for key, val in row.items():
            if val is None or isinstance(val, str):
                continue
            if not math.isfinite(float(val)):
                raise NumericalFailure(
                    f"non-finite value for {key!r} in output row {i}: {val!r}"
                )


def _cell(val) -> str:
    if val is None:
        return ""
    if isinstance(val, str):
        return val
    return repr(float(val))


def _write_output(path: str, header: list[str], rows: list[dict], fmt: str) -> None:
    _check_finite(rows)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            if fmt == "csv":
                fh.write(",".join(header) + "\n")
                for row in rows:
                    fh.write(",".join(_cell(row[k]) for k in header) + "\n")
            else:
                json.dump(
                    [{k: row[k] for k in header} for row in rows], fh, indent=1
                )
                fh.write("\n")
    except OSError as exc:
        raise ConfigError(f"cannot write output file {path}: {exc}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="viscoexchange",
        description="Viscoelastic response, exchange integrals and the "
        "statistics-active/inactive crossover in fluids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name, help=f"run the {name} computation")
        p.add_argument("--config", required=True, help="path to the JSON config file")
        p.add_argument("--out", required=True, help="path of the output file")
        p.add_argument(
            "--format",
            choices=("csv", "json"),
            default=None,
            help="output format (overrides the config; default csv)",
        )
        p.add_argument(
            "--seed",
            type=int,
            default=None,
            help="Monte Carlo seed (overrides the config; default 0)",
        )
    return parser


def run(argv: list[str]) -> int:
    """Entry point returning the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0

    try:
        cfg = parse_config(args.config)
        if args.format is not None:
            cfg = dataclasses.replace(cfg, format=args.format)
        if args.seed is not None:
            if not 0 <= args.seed < 2**64:
                raise ConfigError(
                    f"--seed must fit in an unsigned 64-bit int, got {args.seed}"
                )
            cfg = dataclasses.replace(cfg, seed=args.seed)
        rows = _COMMANDS[args.command](cfg)
        _write_output(args.out, HEADERS[args.command], rows, cfg.format)
    except (ConfigError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalFailure as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
