"""Command-line interface: ``steerbh point|sweep|transitions|verify``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from .errors import InvalidArgumentError, SteerBHError
from .oracle import transition_temperature
from .steering import ASYMMETRY_KEYS, DEFICIT_KEYS, STEERING_KEYS
from .sweep import (
    SweepConfig,
    SweepRow,
    argmax_temperature,
    evaluate_point,
    find_transition,
    run_sweep,
    verify_oracle,
)

SCHEMA = "steerbh-1"
COLUMNS = ("T", "r") + STEERING_KEYS + DEFICIT_KEYS + ASYMMETRY_KEYS

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_NUMERIC, EXIT_IO = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    return f"{x:.12g}"


def _num(x: float) -> float:
    return float(fmt(x))


def row_record(row: SweepRow, s: float, omega: float) -> dict:
    rep = row.report
    return {
        "params": {"s": _num(s), "omega": _num(omega), "T": _num(row.T), "r": _num(row.r)},
        "steering": {k: _num(v) for k, v in rep.steering.items()},
        "deficits": {k: _num(v) for k, v in rep.deficits.items()},
        "asymmetry": {k: _num(v) for k, v in rep.asymmetry.items()},
        "ckw_pass": rep.passed,
    }


def render_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        vals = row.values()
        writer.writerow([fmt(vals[c]) for c in COLUMNS])
    return buf.getvalue()


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _check_point_args(args) -> None:
    if not args.s >= 0:
        raise UsageError("--s must be nonnegative")
    if not args.omega > 0:
        raise UsageError("--omega must be positive")


def _config(args) -> SweepConfig:
    _check_point_args(args)
    try:
        return SweepConfig(args.s, args.omega, args.tmin, args.tmax, args.points, args.tolerance)
    except InvalidArgumentError as exc:
        raise UsageError(str(exc)) from None


def cmd_point(args) -> int:
    _check_point_args(args)
    if not args.temp >= 0:
        raise UsageError("--temp must be nonnegative")
    row = evaluate_point(args.s, args.omega, args.temp)
    if args.format == "json":
        text = _dump({"schema": SCHEMA, **row_record(row, args.s, args.omega)})
    else:
        text = render_csv([row])
    _emit(text, args.output)
    return EXIT_OK


def cmd_sweep(args) -> int:
    config = _config(args)
    rows = run_sweep(config)
    if args.format == "json":
        text = _dump({
            "schema": SCHEMA,
            "config": _config_dict(config),
            "rows": [row_record(r, config.s, config.omega) for r in rows],
        })
    else:
        text = render_csv(rows)
    _emit(text, args.output)
    if args.check:
        report = verify_oracle(config)
        sys.stderr.write(_dump(report.to_dict()))
        if not report.passed:
            return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args) -> int:
    config = _config(args)
    report = verify_oracle(config)
    _emit(_dump({"schema": SCHEMA, "config": _config_dict(config), **report.to_dict()}),
          args.output)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_transitions(args) -> int:
    if not args.s > 0:
        raise UsageError("--s must be positive for transition finding")
    if not args.omega > 0:
        raise UsageError("--omega must be positive")
    death = find_transition(args.s, args.omega, "death")
    birth = find_transition(args.s, args.omega, "birth")
    closed = transition_temperature(args.s, args.omega)
    local = SweepConfig(args.s, args.omega, 0.9 * death, 1.1 * death, args.local_points)
    rows = run_sweep(local)
    peak = argmax_temperature(rows, "Dasym_AB_Bbar")
    step = float(np.diff(local.temperatures()[:2])[0])
    _emit(_dump({
        "schema": SCHEMA,
        "params": {"s": _num(args.s), "omega": _num(args.omega)},
        "T_death_A_to_B": _num(death),
        "T_birth_Bbar_to_B": _num(birth),
        "difference": _num(death - birth),
        "T_closed_form": _num(closed),
        "T_asymmetry_argmax": _num(peak),
        "asymmetry_grid_step": _num(step),
    }), args.output)
    return EXIT_OK


def _config_dict(config: SweepConfig) -> dict:
    return {"s": _num(config.s), "omega": _num(config.omega), "T_min": _num(config.T_min),
            "T_max": _num(config.T_max), "n_points": config.n_points,
            "tolerance": config.tolerance}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--s", type=float, default=1.0, help="initial two-mode squeezing")
    common.add_argument("--omega", type=float, default=1.0, help="field mode frequency")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", default=None, help="output path (default: stdout)")
    common.add_argument("--tolerance", type=float, default=1e-9)

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--tmin", type=float, default=0.05)
    grid.add_argument("--tmax", type=float, default=3.0)
    grid.add_argument("--points", type=int, default=60)

    parser = argparse.ArgumentParser(
        prog="steerbh",
        description="Gaussian steering monogamy under the Hawking effect.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("point", parents=[common], help="evaluate one Hawking temperature")
    p.add_argument("--temp", type=float, required=True, help="Hawking temperature")
    p.set_defaults(func=cmd_point)

    p = sub.add_parser("sweep", parents=[common, grid], help="sweep the Hawking temperature")
    p.add_argument("--check", action="store_true",
                   help="also verify against closed forms; exit 1 on failure")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("transitions", parents=[common],
                       help="locate the A->B death and Bbar->B birth temperatures")
    p.add_argument("--local-points", type=int, default=2001,
                   help="grid size of the asymmetry scan around the transition")
    p.set_defaults(func=cmd_transitions)

    p = sub.add_parser("verify", parents=[common, grid], help="closed-form oracle check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"steerbh {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"steerbh: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    except (SteerBHError, ArithmeticError, np.linalg.LinAlgError) as exc:
        print(f"steerbh: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
