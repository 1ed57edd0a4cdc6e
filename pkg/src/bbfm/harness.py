"""Scenario execution front end: build a controller from configuration, run
the episode, compute metrics, and write artifacts (CSV trace, SVG plot,
metrics JSON)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import config as cfgmod
from .controller import NavigationController
from .metrics import Metrics, compute_metrics
from .sim import TrajectoryTrace, run_episode
from .svg import write_svg
from .traces import write_trace


@dataclass
class RunResult:
    scenario: cfgmod.ScenarioConfig
    trace: TrajectoryTrace
    metrics: Metrics
    artifacts: dict[str, Path]


def build_controller(cfg: dict, strategy: str = "bbfm",
                     disabled: tuple[str, ...] = ()) -> NavigationController:
    return NavigationController(
        behaviors=cfgmod.build_behaviors(cfg),
        domain=cfgmod.build_domain(cfg),
        strategy=strategy,
        disabled=disabled,
    )


def run_scenario(scenario: cfgmod.ScenarioConfig,
                 out_dir: str | Path | None = None,
                 config_path: str | Path | None = None,
                 overrides: dict | None = None) -> RunResult:
    """Run one scenario under its configured strategy and collect artifacts.

    Overrides are merged in order: defaults < config file < scenario
    overrides < explicit overrides.
    """
    cfg = cfgmod.load_config(config_path, scenario.overrides)
    if overrides:
        cfg = cfgmod.merge(cfg, overrides)
    controller = build_controller(cfg, scenario.strategy, scenario.disabled)
    trace = run_episode(
        world=scenario.world,
        start=scenario.start,
        target=scenario.target,
        controller=controller,
        limits=cfgmod.build_limits(cfg),
        sensors=cfgmod.build_sensors(cfg),
        robot=cfgmod.build_robot(cfg),
    )
    metrics = compute_metrics(trace)
    artifacts: dict[str, Path] = {}
    if out_dir is not None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        stem = scenario.name
        if scenario.strategy != "bbfm" or scenario.disabled:
            tag = scenario.strategy + ("-no-" + "-".join(scenario.disabled) if scenario.disabled else "")
            stem = f"{stem}-{tag}"
        artifacts["trace"] = write_trace(trace, out / f"{stem}.csv")
        artifacts["plot"] = write_svg(trace, scenario.world, out / f"{stem}.svg",
                                      title=f"{scenario.name} [{scenario.strategy}]")
        metrics_path = out / f"{stem}-metrics.json"
        metrics_path.write_text(json.dumps(metrics.as_dict(), indent=2) + "\n")
        artifacts["metrics"] = metrics_path
    return RunResult(scenario=scenario, trace=trace, metrics=metrics, artifacts=artifacts)
