"""Command line front end: findist <subcommand> [options].

Exit codes: 0 all hard checks passed, 1 at least one check failed,
2 configuration or I/O problems.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .field import FieldSpec
from .generators import UnsupportedGeneratorError
from .harness import ExperimentConfig, Thresholds, make_config, run

SUBCOMMANDS = ("stats", "verify", "reduce", "prune", "kinematic-check", "clifford-check", "sweep")

_DEFAULT_FIELD = (7, 1)
_DEFAULT_SWEEP_FIELD = (31, 1)
_DEFAULT_SWEEP_SIZES = [20, 40, 60, 80, 97]


class CliError(Exception):
    pass


def _parse_field(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) not in (1, 2):
        raise CliError(f"--field expects p or p,r, got {text!r}")
    try:
        p = int(parts[0])
        r = int(parts[1]) if len(parts) == 2 else 1
    except ValueError as exc:
        raise CliError(f"--field expects integers, got {text!r}") from exc
    return p, r


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="findist",
        description="exact distance, motion, and incidence experiments over small finite fields",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("--config", help="experiment config JSON")
        cmd.add_argument("--out", help="output path (JSON, or CSV for sweep)")
        cmd.add_argument("--seed", type=int, help="override the config seed")
        cmd.add_argument("--field", help="override the field as p or p,r")
        cmd.add_argument("--workers", type=int, default=1, help="worker pool size")
        if name in ("stats", "verify", "reduce", "prune"):
            cmd.add_argument("--points", help="explicit point-set JSON instead of a generator")
    return parser


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _resolve_config(args) -> ExperimentConfig:
    if args.config:
        obj = _load_json(args.config)
        try:
            config = ExperimentConfig.from_json(obj)
        except (KeyError, TypeError, ValueError) as exc:
            raise CliError(f"bad config {args.config}: {exc}") from exc
    else:
        p, r = _DEFAULT_SWEEP_FIELD if args.subcommand == "sweep" else _DEFAULT_FIELD
        params = {"sizes": list(_DEFAULT_SWEEP_SIZES)} if args.subcommand == "sweep" else {"size": 10}
        config = make_config(FieldSpec(p, r), "random", params, seed=7)

    updates = {}
    if args.field is not None:
        p, r = _parse_field(args.field)
        try:
            updates["field"] = FieldSpec(p, r)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    if args.seed is not None:
        updates["seed"] = args.seed
    if args.out is not None:
        updates["out"] = args.out

    points_path = getattr(args, "points", None)
    if points_path:
        blob = _load_json(points_path)
        try:
            spec = FieldSpec.from_json(blob["field"])
        except (KeyError, TypeError, ValueError) as exc:
            raise CliError(f"bad point-set file {points_path}: {exc}") from exc
        updates["field"] = spec
        updates["generator"] = "explicit"
        updates["params"] = {"points": blob["points"]}

    checks = (args.subcommand,)
    return make_config(
        field=updates.get("field", config.field),
        generator=updates.get("generator", config.generator),
        params=updates.get("params", config.params_dict()),
        seed=updates.get("seed", config.seed),
        checks=checks,
        out=updates.get("out", config.out),
        thresholds=config.thresholds,
    )


def _emit(report, subcommand: str) -> None:
    payload = report.render_csv() if subcommand == "sweep" else report.render() + "\n"
    if report.config["out"]:
        try:
            with open(report.config["out"], "w", encoding="utf-8") as fh:
                fh.write(payload)
        except OSError as exc:
            raise CliError(f"cannot write {report.config['out']}: {exc}") from exc
    else:
        sys.stdout.write(payload)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _resolve_config(args)
        if args.workers < 1:
            raise CliError("--workers must be >= 1")
        report = run(config, workers=args.workers)
        _emit(report, args.subcommand)
    except CliError as exc:
        print(f"findist: {exc}", file=sys.stderr)
        return 2
    except (UnsupportedGeneratorError, ValueError, KeyError, OSError) as exc:
        print(f"findist: {exc}", file=sys.stderr)
        return 2
    return 0 if report.passed() else 1


if __name__ == "__main__":
    raise SystemExit(main())
