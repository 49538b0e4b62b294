"""Command-line harness: presets, sweeps, optimization runs, verification.

All inputs are dimensionless: the Rabi frequency is fixed to 1
internally, detuning is given as a ratio D/W and times as W*T.  The
token ``half-rabi-cycle`` for ``--omega-t`` selects W*T = pi * W / W_R,
the time of the first no-pulse transition maximum.

Output is CSV with 17 significant digits.  Identical configurations
(including the seed) produce byte-identical files.

Exit codes: 0 success, 1 configuration error, 2 verification failure,
3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from .evolution import trajectory, transition_probability
from .models import equidistant_closed_form, udd_closed_sum
from .optimize import (
    DegenerateFitError,
    NoConvergenceError,
    minimize_transition,
    solve_derivative_conditions,
)
from .sequences import SequenceError, equidistant, read_fractions, udd
from .su2 import SystemParams
from .verify import run_all_checks

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_VERIFY = 2
EXIT_IO = 3

SWEEP_HEADER = "n,delta_over_omega,omega_t,sequence,probability"
TRAJECTORY_HEADER = "time,sequence,p_g,p_e,pulse_edge"

HALF_RABI_TOKEN = "half-rabi-cycle"

MODES = ("trajectory", "sweep-n", "sweep-detuning", "optimize", "verify", "preset")
SEQUENCE_KINDS = ("none", "equidistant", "udd", "file")


class ConfigError(Exception):
    """Invalid command-line configuration."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 by default, which collides with the
    # verification-failure code; route parse errors through ConfigError
    def error(self, message):
        raise ConfigError(message)


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


@dataclass(frozen=True)
class ExperimentConfig:
    mode: str
    detuning_ratios: tuple[float, ...]
    omega_t_spec: str
    n: int | None
    n_range: tuple[int, ...]
    sequences: tuple[str, ...]
    sequence_file: str | None
    samples: int
    seed: int
    out: str | None
    preset: str | None

    def omega_t(self, ratio: float) -> float:
        if self.omega_t_spec == HALF_RABI_TOKEN:
            return math.pi / math.hypot(1.0, ratio)
        return float(self.omega_t_spec)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="phasekick",
        description="Simulate and optimize phase-kick pulse timing in a driven "
        "two-level system.",
    )
    p.add_argument("--mode", choices=MODES, help="what to run")
    p.add_argument("--preset", choices=("fig3", "fig4", "fig5"), help="figure preset")
    p.add_argument("--n", type=int, help="number of kicks")
    p.add_argument("--n-range", help="inclusive kick-count range A..B for sweep-n")
    p.add_argument(
        "--detuning-ratio",
        default="0",
        help="detuning over Rabi frequency; comma-separated list for sweep-detuning",
    )
    p.add_argument(
        "--omega-t",
        default=HALF_RABI_TOKEN,
        help=f"dimensionless total time W*T, or '{HALF_RABI_TOKEN}'",
    )
    p.add_argument(
        "--sequence",
        default="udd",
        help="kick timing: none, equidistant, udd, or file; "
        "comma-separated list allowed in sweeps",
    )
    p.add_argument("--sequence-file", help="fractions file (one per line, # comments)")
    p.add_argument("--samples", type=int, default=200, help="samples per interval")
    p.add_argument("--seed", type=int, default=0, help="seed for optimizer restarts")
    p.add_argument("--out", help="output file (directory for presets)")
    return p


def _parse_n_range(text: str) -> tuple[int, ...]:
    try:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    except ValueError as exc:
        raise ConfigError(f"bad --n-range {text!r}; expected A..B") from exc
    if hi < lo:
        raise ConfigError("--n-range must be increasing")
    return tuple(range(lo, hi + 1))


def _parse_ratios(text: str) -> tuple[float, ...]:
    try:
        ratios = tuple(float(part) for part in text.split(","))
    except ValueError as exc:
        raise ConfigError(f"bad --detuning-ratio {text!r}") from exc
    if not ratios:
        raise ConfigError("--detuning-ratio must not be empty")
    return ratios


def _parse_sequences(text: str) -> tuple[str, ...]:
    kinds = tuple(part.strip() for part in text.split(","))
    for kind in kinds:
        if kind not in SEQUENCE_KINDS:
            raise ConfigError(
                f"unknown sequence {kind!r}; choose from {', '.join(SEQUENCE_KINDS)}"
            )
    return kinds


def _config_from_args(args) -> ExperimentConfig:
    mode = args.mode
    if mode is None and args.preset is not None:
        mode = "preset"
    if mode is None:
        raise ConfigError("--mode is required (or give --preset)")
    if mode == "preset" and args.preset is None:
        raise ConfigError("--preset is required in preset mode")
    if args.omega_t != HALF_RABI_TOKEN:
        try:
            value = float(args.omega_t)
        except ValueError as exc:
            raise ConfigError(f"bad --omega-t {args.omega_t!r}") from exc
        if value <= 0.0:
            raise ConfigError("--omega-t must be positive")
    if args.samples < 1:
        raise ConfigError("--samples must be at least 1")
    kinds = _parse_sequences(args.sequence)
    if "file" in kinds and args.sequence_file is None:
        raise ConfigError("--sequence-file is required for sequence=file")
    if args.sequence_file is not None and "file" not in kinds:
        raise ConfigError("--sequence-file given but sequence is not 'file'")
    config = ExperimentConfig(
        mode=mode,
        detuning_ratios=_parse_ratios(args.detuning_ratio),
        omega_t_spec=args.omega_t,
        n=args.n,
        n_range=_parse_n_range(args.n_range) if args.n_range else (),
        sequences=kinds,
        sequence_file=args.sequence_file,
        samples=args.samples,
        seed=args.seed,
        out=args.out,
        preset=args.preset,
    )
    return config


def _fractions_for(config: ExperimentConfig, kind: str, n: int | None) -> np.ndarray:
    if kind == "none":
        return np.empty(0)
    if kind == "file":
        if config.sequence_file is None:
            raise ConfigError("--sequence-file is required for sequence=file")
        return read_fractions(config.sequence_file)
    if n is None:
        raise ConfigError(f"--n is required for sequence={kind}")
    if n < 0:
        raise ConfigError("--n must be nonnegative")
    return equidistant(n) if kind == "equidistant" else udd(n)


def _write_lines(path: str | None, header: str, rows) -> None:
    text = header + "\n" + "".join(row + "\n" for row in rows)
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _sweep_row(n: int, ratio: float, omega_t: float, kind: str, prob: float) -> str:
    return f"{n},{_fmt(ratio)},{_fmt(omega_t)},{kind},{_fmt(prob)}"


def run_trajectory(config: ExperimentConfig) -> None:
    ratio = config.detuning_ratios[0]
    omega_t = config.omega_t(ratio)
    kind = config.sequences[0]
    frac = _fractions_for(config, kind, config.n)
    params = SystemParams(1.0, ratio, omega_t)
    rows = [
        f"{_fmt(pt.time)},{kind},{_fmt(pt.p_g)},{_fmt(pt.p_e)},{pt.pulse_edge}"
        for pt in trajectory(params, frac, samples_per_interval=config.samples)
    ]
    _write_lines(config.out, TRAJECTORY_HEADER, rows)


def run_sweep_n(config: ExperimentConfig) -> None:
    if not config.n_range:
        raise ConfigError("--n-range is required for sweep-n")
    if "file" in config.sequences:
        raise ConfigError("sequence=file has a fixed kick count; cannot sweep n")
    ratio = config.detuning_ratios[0]
    omega_t = config.omega_t(ratio)
    params = SystemParams(1.0, ratio, omega_t)
    rows = []
    for n in config.n_range:
        for kind in config.sequences:
            prob = transition_probability(params, _fractions_for(config, kind, n))
            rows.append(_sweep_row(n, ratio, omega_t, kind, prob))
    _write_lines(config.out, SWEEP_HEADER, rows)


def run_sweep_detuning(config: ExperimentConfig) -> None:
    rows = []
    for ratio in config.detuning_ratios:
        omega_t = config.omega_t(ratio)
        params = SystemParams(1.0, ratio, omega_t)
        for kind in config.sequences:
            frac = _fractions_for(config, kind, config.n)
            prob = transition_probability(params, frac)
            rows.append(_sweep_row(frac.size, ratio, omega_t, kind, prob))
    _write_lines(config.out, SWEEP_HEADER, rows)


def run_optimize(config: ExperimentConfig) -> None:
    if config.n is None or config.n < 1:
        raise ConfigError("--n >= 1 is required for optimize")
    ratio = config.detuning_ratios[0]
    omega_t = config.omega_t(ratio)
    params = SystemParams(1.0, ratio, omega_t)
    reference = udd(config.n)
    newton = solve_derivative_conditions(config.n)
    direct = minimize_transition(params, config.n, restarts=8, seed=config.seed)
    summary = {
        "n": config.n,
        "delta_over_omega": ratio,
        "omega_t": omega_t,
        "seed": config.seed,
        "reference_fractions": [float(f) for f in reference],
        "reference_objective": transition_probability(params, reference),
        "newton": {
            "fractions": [float(f) for f in newton.fractions],
            "max_residual": newton.objective_value,
            "iterations": newton.iterations,
            "converged": newton.converged,
            "max_deviation_from_reference": float(
                np.max(np.abs(newton.fractions - reference))
            ),
        },
        "direct": {
            "fractions": [float(f) for f in direct.fractions],
            "objective": direct.objective_value,
            "iterations": direct.iterations,
            "converged": direct.converged,
        },
    }
    text = json.dumps(summary, indent=2, sort_keys=True) + "\n"
    if config.out is None:
        sys.stdout.write(text)
    else:
        with open(config.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def run_verify() -> int:
    results = run_all_checks()
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_VERIFY if failed else EXIT_OK


def _preset_trajectories(path, ratio, omega_t, runs) -> None:
    params = SystemParams(1.0, ratio, omega_t)
    rows = []
    for kind, frac, per_interval in runs:
        for pt in trajectory(params, frac, samples_per_interval=per_interval):
            rows.append(
                f"{_fmt(pt.time)},{kind},{_fmt(pt.p_g)},{_fmt(pt.p_e)},{pt.pulse_edge}"
            )
    _write_lines(path, TRAJECTORY_HEADER, rows)


def run_preset(name: str, out_dir: str | None) -> list[str]:
    """Write the preset's CSV files and return their paths."""
    out_dir = out_dir or "."
    os.makedirs(out_dir, exist_ok=True)
    written = []

    def path_for(filename: str) -> str:
        full = os.path.join(out_dir, filename)
        written.append(full)
        return full

    if name == "fig3":
        # resonant, 8 kicks, three full population cycles
        omega_t = 6.0 * math.pi
        runs = [
            ("equidistant", equidistant(8), 80),
            ("udd", udd(8), 80),
        ]
        _preset_trajectories(path_for("fig3_trajectories.csv"), 0.0, omega_t, runs)
    elif name == "fig4":
        # far-detuned, 5 kicks, half a Rabi cycle
        ratio = 10.0
        omega_t = math.pi / math.hypot(1.0, ratio)
        runs = [
            ("none", np.empty(0), 1200),
            ("equidistant", equidistant(5), 200),
            ("udd", udd(5), 200),
        ]
        _preset_trajectories(path_for("fig4_trajectories.csv"), ratio, omega_t, runs)
    elif name == "fig5":
        ratio = 1.0
        omega_t = math.pi / math.hypot(1.0, ratio)
        params = SystemParams(1.0, ratio, omega_t)
        rows = []
        for n in range(2, 12):
            for kind in ("none", "equidistant", "udd"):
                frac = np.empty(0) if kind == "none" else (
                    equidistant(n) if kind == "equidistant" else udd(n)
                )
                prob = transition_probability(params, frac)
                rows.append(_sweep_row(n, ratio, omega_t, kind, prob))
        _write_lines(path_for("fig5_sweep.csv"), SWEEP_HEADER, rows)

        analytic_rows = []
        for n in range(2, 12):
            analytic_rows.append(
                _sweep_row(
                    n, ratio, omega_t, "equidistant",
                    equidistant_closed_form(1.0, ratio, omega_t, n),
                )
            )
            analytic_rows.append(
                _sweep_row(n, ratio, omega_t, "udd", udd_closed_sum(1.0, ratio, omega_t, n))
            )
        _write_lines(path_for("fig5_analytic.csv"), SWEEP_HEADER, analytic_rows)
    else:
        raise ConfigError(f"unknown preset {name!r}")
    return written


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = _config_from_args(args)
        if config.mode == "verify":
            return run_verify()
        if config.mode == "preset":
            for path in run_preset(config.preset, config.out):
                print(path)
            return EXIT_OK
        if config.mode == "trajectory":
            run_trajectory(config)
        elif config.mode == "sweep-n":
            run_sweep_n(config)
        elif config.mode == "sweep-detuning":
            run_sweep_detuning(config)
        elif config.mode == "optimize":
            run_optimize(config)
        return EXIT_OK
    except (
        ConfigError,
        SequenceError,
        ValueError,
        NoConvergenceError,
        DegenerateFitError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
