"""Command-line front end.

Subcommands: ``point`` (single E_N evaluation), ``sweep`` (grid run to
CSV + JSON), ``threshold`` (bisection for the entanglement death point),
and ``stability`` (drift eigenvalue dump).  Exit codes: 0 on success,
2 on config errors, 3 on numerical or stability errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from .config import bundled_config_path, load_base_params, load_sweep_spec
from .dynamics import build_drift, stability
from .entanglement import ModePair, entanglement_at
from .errors import ConfigError, MagnomechError, ParameterError
from .params import TWO_PI
from .sweep import find_threshold, run_sweep, save_result

_MODE_CHOICES = ("m1", "m2", "cavity", "magnon")


def _resolve_config(value: str) -> Path:
    """Accept a filesystem path or the name of a bundled config."""
    path = Path(value)
    if path.is_file():
        return path
    if "/" not in value:
        return bundled_config_path(value)
    raise ConfigError(f"config file not found: {value}")


def _pair_from_args(labels) -> ModePair:
    return ModePair.from_labels(*labels)


def _cmd_point(args) -> int:
    params = load_base_params(_resolve_config(args.config))
    point = entanglement_at(params, _pair_from_args(args.pair))
    print(f"E_N = {point.en!r}" if point.stable else "E_N =")
    print(f"stability_margin_rad_s = {point.margin!r}")
    print(f"status = {'ok' if point.stable else 'unstable'}")
    return 0


def _cmd_sweep(args) -> int:
    spec = load_sweep_spec(_resolve_config(args.config))
    if args.pair:
        spec = replace(spec, pair=_pair_from_args(args.pair))
    out = args.out or spec.output_path or f"{Path(args.config).stem}.csv"
    result = run_sweep(spec, jobs=args.jobs)
    csv_path, json_path = save_result(result, out)
    counts = result.metadata["counts"]
    print(f"wrote {csv_path} and {json_path} "
          f"({counts['ok']} ok, {counts['unstable']} unstable, "
          f"{counts['error']} error)")
    return 0


def _cmd_threshold(args) -> int:
    params = load_base_params(_resolve_config(args.config))
    axis = args.axis
    factor = 1.0 if axis == "temperature" else TWO_PI
    value = find_threshold(params, axis, factor * args.lo, factor * args.hi,
                           _pair_from_args(args.pair))
    unit = "K" if axis == "temperature" else "Hz"
    print(f"threshold_{axis} = {value / factor!r} {unit}")
    return 0


def _cmd_stability(args) -> int:
    params = load_base_params(_resolve_config(args.config))
    drift = build_drift(params)
    is_stable, margin = stability(drift)
    eigenvalues = np.linalg.eigvals(drift)
    print(f"status = {'stable' if is_stable else 'unstable'}")
    print(f"margin_rad_s = {margin!r}")
    print("eigenvalues_rad_s (real, imag):")
    for value in sorted(eigenvalues, key=lambda z: (z.real, z.imag)):
        print(f"  {value.real!r} {value.imag!r}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magnomech",
        description="Steady-state two-mode entanglement of the coupled "
                    "cavity-magnon-mechanics model.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_config(p):
        p.add_argument("--config", required=True,
                       help="config file path, or the name of a bundled config")

    def add_pair(p, required):
        p.add_argument("--pair", nargs=2, choices=_MODE_CHOICES,
                       required=required, metavar=("MODE_A", "MODE_B"),
                       help="the two modes scored for entanglement")

    point = sub.add_parser("point", help="evaluate E_N at one parameter set")
    add_config(point)
    add_pair(point, required=True)
    point.set_defaults(func=_cmd_point)

    sweep = sub.add_parser("sweep", help="run a 1-D/2-D sweep to CSV + JSON")
    add_config(sweep)
    add_pair(sweep, required=False)
    sweep.add_argument("--out", help="CSV output path (JSON sidecar derives from it)")
    sweep.add_argument("--jobs", type=int, default=1,
                       help="worker processes (default 1, serial)")
    sweep.set_defaults(func=_cmd_sweep)

    threshold = sub.add_parser(
        "threshold", help="bisect for the parameter value where E_N dies")
    add_config(threshold)
    add_pair(threshold, required=True)
    threshold.add_argument("--axis", required=True,
                           help="system parameter to search along")
    threshold.add_argument("--lo", type=float, required=True,
                           help="live end of the bracket (Hz; K for temperature)")
    threshold.add_argument("--hi", type=float, required=True,
                           help="dead end of the bracket (Hz; K for temperature)")
    threshold.set_defaults(func=_cmd_threshold)

    stab = sub.add_parser("stability", help="dump the drift eigenvalue spectrum")
    add_config(stab)
    stab.set_defaults(func=_cmd_stability)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ParameterError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (MagnomechError, np.linalg.LinAlgError) as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
