"""Command line front end.

Verbs: `run` a scenario, `compare` strategies on one scenario, `dump-config`
the embedded defaults, `replay` metrics from an existing trace CSV.

Exit codes: 0 success, 2 collision, 3 timeout, 4 configuration error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from . import config as cfgmod
from .controller import STRATEGIES
from .errors import ConfigurationError, ValidationError
from .harness import run_scenario
from .metrics import compute_metrics
from .scenarios import BUNDLED, load_scenario
from .sim import COLLISION, SUCCESS, TIMEOUT
from .traces import read_trace

EXIT_CODES = {SUCCESS: 0, COLLISION: 2, TIMEOUT: 3}
EXIT_CONFIG_ERROR = 4


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--scenario", required=True,
                   help=f"bundled scenario name ({', '.join(sorted(BUNDLED))}) or scenario JSON file")
    p.add_argument("--strategy", choices=STRATEGIES, default=None,
                   help="fusion strategy (default: the scenario's, usually bbfm)")
    p.add_argument("--disable-behavior", action="append", default=[],
                   metavar="NAME", help="disable a behavior (e.g. local_minimum); repeatable")
    p.add_argument("--config", default=None, help="JSON config file merged over the defaults")
    p.add_argument("--grid-step-u", type=float, default=None, help="u grid resolution [m/s]")
    p.add_argument("--grid-step-omega", type=float, default=None, help="omega grid resolution [rad/s]")
    p.add_argument("--dt", type=float, default=None, help="integration timestep [s]")
    p.add_argument("--max-steps", type=int, default=None, help="episode step budget")
    p.add_argument("--out-dir", default=None, help="directory for trace/plot/metrics artifacts")


def _overrides_from_args(args) -> dict:
    over: dict = {}
    if args.grid_step_u is not None:
        over.setdefault("domain", {})["u_step"] = args.grid_step_u
    if args.grid_step_omega is not None:
        over.setdefault("domain", {})["omega_step"] = args.grid_step_omega
    if args.dt is not None:
        over.setdefault("episode", {})["dt"] = args.dt
    if args.max_steps is not None:
        over.setdefault("episode", {})["max_steps"] = args.max_steps
    return over


def _print_metrics(name: str, strategy: str, metrics) -> None:
    m = metrics
    print(f"{name} [{strategy}]: {m.outcome}  "
          f"distance={m.traveled_distance:.2f} m  time={m.elapsed_time:.2f} s  "
          f"smoothness={m.smoothness_deg:.2f} deg/step  target_error={m.target_error:.3f} m")


def cmd_run(args) -> int:
    scenario = load_scenario(args.scenario)
    if args.strategy:
        scenario = dataclasses.replace(scenario, strategy=args.strategy)
    if args.disable_behavior:
        scenario = dataclasses.replace(
            scenario, disabled=tuple(scenario.disabled) + tuple(args.disable_behavior))
    result = run_scenario(scenario, out_dir=args.out_dir,
                          config_path=args.config, overrides=_overrides_from_args(args))
    _print_metrics(scenario.name, scenario.strategy, result.metrics)
    for kind, path in result.artifacts.items():
        print(f"  {kind}: {path}")
    return EXIT_CODES[result.trace.outcome]


def cmd_compare(args) -> int:
    base = load_scenario(args.scenario)
    rows = []
    for strategy in STRATEGIES:
        scenario = dataclasses.replace(
            base, strategy=strategy,
            disabled=tuple(base.disabled) + tuple(args.disable_behavior))
        result = run_scenario(scenario, out_dir=args.out_dir,
                              config_path=args.config, overrides=_overrides_from_args(args))
        rows.append((strategy, result.metrics))
    header = f"{'strategy':10} {'outcome':10} {'distance':>10} {'time':>8} {'smoothness':>12} {'target_err':>11}"
    print(f"scenario: {base.name}")
    print(header)
    for strategy, m in rows:
        print(f"{strategy:10} {m.outcome:10} {m.traveled_distance:10.2f} {m.elapsed_time:8.2f} "
              f"{m.smoothness_deg:12.3f} {m.target_error:11.3f}")
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        report = out / f"{base.name}-compare.csv"
        lines = ["strategy,outcome,traveled_distance_m,elapsed_time_s,smoothness_deg_per_step,target_error_m"]
        lines += [f"{s},{m.outcome},{m.traveled_distance!r},{m.elapsed_time!r},"
                  f"{m.smoothness_deg!r},{m.target_error!r}" for s, m in rows]
        report.write_text("\n".join(lines) + "\n")
        print(f"  report: {report}")
    # compare's own exit reflects the primary strategy's outcome
    return EXIT_CODES[rows[0][1].outcome]


def cmd_dump_config(args) -> int:
    text = json.dumps(cfgmod.load_config(args.config), indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
        print(f"wrote {args.out}")
    else:
        print(text)
    return 0


def cmd_replay(args) -> int:
    trace = read_trace(args.trace)
    metrics = compute_metrics(trace)
    _print_metrics(Path(args.trace).name, "replay", metrics)
    if args.out:
        Path(args.out).write_text(json.dumps(metrics.as_dict(), indent=2) + "\n")
    return EXIT_CODES.get(trace.outcome, 0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bbfm",
        description="Behavior-based fuzzy navigation with lexicographic command fusion.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p_run = sub.add_parser("run", help="run one scenario")
    _add_run_flags(p_run)
    p_run.set_defaults(func=cmd_run)

    p_cmp = sub.add_parser("compare", help="run one scenario across all strategies")
    _add_run_flags(p_cmp)
    p_cmp.set_defaults(func=cmd_compare)

    p_dump = sub.add_parser("dump-config", help="emit the default configuration as JSON")
    p_dump.add_argument("--config", default=None, help="merge this file over the defaults first")
    p_dump.add_argument("--out", default=None, help="write to a file instead of stdout")
    p_dump.set_defaults(func=cmd_dump_config)

    p_rep = sub.add_parser("replay", help="recompute metrics from a trace CSV")
    p_rep.add_argument("--trace", required=True, help="trace CSV written by `run`")
    p_rep.add_argument("--out", default=None, help="write metrics JSON here")
    p_rep.set_defaults(func=cmd_replay)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigurationError, ValidationError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR


if __name__ == "__main__":
    sys.exit(main())
