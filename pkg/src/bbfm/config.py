"""JSON-compatible configuration: membership parameters, rule tables, grids,
robot and episode settings.

The shipped defaults are embedded; `default_config()` returns them as a plain
dict, `dump-config` on the CLI emits them, and a user file with the same
schema is deep-merged over the defaults (dicts merge, everything else
replaces).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

import numpy as np

from . import behaviors
from .errors import ConfigurationError
from .fuzzy import Gaussian, LinguisticVariable, MembershipFunction, Rule, Sigmoid
from .fusion import CommandDomain, make_grid
from .sim import EpisodeLimits, Pose, RobotParams, SensorConfig, World


def _mf_to_dict(mf: MembershipFunction) -> dict:
    if isinstance(mf, Gaussian):
        return {"kind": "gaussian", "center": mf.center, "width": mf.width}
    return {"kind": "sigmoid", "slope": mf.slope, "inflection": mf.inflection}


def _mf_from_dict(data: Mapping[str, Any]) -> MembershipFunction:
    try:
        kind = data["kind"]
        if kind == "gaussian":
            return Gaussian(float(data["center"]), float(data["width"]))
        if kind == "sigmoid":
            return Sigmoid(float(data["slope"]), float(data["inflection"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigurationError(f"malformed membership function {data!r}: {exc}") from exc
    raise ConfigurationError(f"unknown membership kind {kind!r}")


def _rules_to_list(spec: behaviors.BehaviorSpec) -> list[dict]:
    return [{"if": dict(r.antecedent), "then": dict(r.consequent)} for r in spec.rulebase.rules]


def default_config() -> dict:
    """The embedded defaults as a JSON-compatible dict."""
    variables = behaviors.default_variables()
    specs = behaviors.default_behaviors()
    return {
        "domain": {
            "u_step": 0.01,
            "omega_step": 0.01,
            "epsilon": 1e-9,
            "u_limits": [0.0, 1.3],
            "omega_limits": [-4.3, 4.3],
        },
        "episode": {"dt": 0.1, "max_steps": 5000, "stop_radius": 0.05},
        "robot": {
            "wheel_radius": 0.085,
            "axle_length": 0.265,
            "body_radius": 0.18,
        },
        "sensors": {
            "mount_angles_deg": [float(a) for a in np.degrees(SensorConfig().mount_angles)],
            "cone_half_angle_deg": 7.5,
            "max_range": 4.0,
            "min_range": 0.0,
            "rays_per_cone": 5,
        },
        "variables": {
            name: {
                "universe": [var.universe[0], var.universe[1]],
                "terms": {label: _mf_to_dict(mf) for label, mf in var.terms.items()},
            }
            for name, var in variables.items()
        },
        "rules": {spec.name: _rules_to_list(spec) for spec in specs},
        "priorities": {spec.name: spec.priority for spec in specs},
    }


def merge(base: dict, override: Mapping) -> dict:
    """Deep-merge `override` into a copy of `base`; dicts merge, leaves replace."""
    out = dict(base)
    for key, value in override.items():
        if isinstance(value, Mapping) and isinstance(out.get(key), dict):
            out[key] = merge(out[key], value)
        else:
            out[key] = value
    return out


def load_config(path: str | Path | None = None, overrides: Mapping | None = None) -> dict:
    """Defaults, optionally merged with a JSON file and explicit overrides."""
    cfg = default_config()
    if path is not None:
        try:
            with open(path) as fh:
                user = json.load(fh)
        except OSError as exc:
            raise ConfigurationError(f"cannot read config {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"config {path} is not valid JSON: {exc}") from exc
        if not isinstance(user, dict):
            raise ConfigurationError(f"config {path} must hold a JSON object")
        cfg = merge(cfg, user)
    if overrides:
        cfg = merge(cfg, overrides)
    return cfg


def build_variables(cfg: Mapping) -> dict[str, LinguisticVariable]:
    out = {}
    for name, data in cfg["variables"].items():
        try:
            lo, hi = data["universe"]
            terms = {label: _mf_from_dict(mf) for label, mf in data["terms"].items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigurationError(f"malformed variable {name!r}: {exc}") from exc
        out[name] = LinguisticVariable(name, (float(lo), float(hi)), terms)
    return out


def build_behaviors(cfg: Mapping) -> tuple[behaviors.BehaviorSpec, ...]:
    variables = build_variables(cfg)
    builders = {
        "local_minimum": behaviors.build_local_minimum,
        "obstacle_avoidance": behaviors.build_obstacle_avoidance,
        "goal_reaching": behaviors.build_goal_reaching,
    }
    specs = []
    for name, build in builders.items():
        spec = build(variables)
        rules = cfg.get("rules", {}).get(name)
        if rules is not None:
            parsed = tuple(Rule(dict(r["if"]), dict(r["then"])) for r in rules)
            rb = spec.rulebase
            spec = behaviors.BehaviorSpec(name, spec.priority, type(rb)(
                name=rb.name, inputs=rb.inputs, outputs=rb.outputs, rules=parsed))
        priority = cfg.get("priorities", {}).get(name, spec.priority)
        specs.append(behaviors.BehaviorSpec(name, int(priority), spec.rulebase))
    return tuple(sorted(specs, key=lambda s: s.priority))


def build_domain(cfg: Mapping) -> CommandDomain:
    dom = cfg["domain"]
    u_lo, u_hi = dom["u_limits"]
    w_lo, w_hi = dom["omega_limits"]
    return CommandDomain(
        u_grid=make_grid(float(u_lo), float(u_hi), float(dom["u_step"])),
        omega_grid=make_grid(float(w_lo), float(w_hi), float(dom["omega_step"])),
        epsilon=float(dom["epsilon"]),
    )


def build_sensors(cfg: Mapping) -> SensorConfig:
    sens = cfg["sensors"]
    return SensorConfig(
        mount_angles=tuple(math.radians(float(a)) for a in sens["mount_angles_deg"]),
        cone_half_angle=math.radians(float(sens["cone_half_angle_deg"])),
        max_range=float(sens["max_range"]),
        min_range=float(sens["min_range"]),
        rays_per_cone=int(sens["rays_per_cone"]),
    )


def build_robot(cfg: Mapping) -> RobotParams:
    rob = cfg["robot"]
    return RobotParams(
        wheel_radius=float(rob["wheel_radius"]),
        axle_length=float(rob["axle_length"]),
        body_radius=float(rob["body_radius"]),
    )


def build_limits(cfg: Mapping) -> EpisodeLimits:
    epi = cfg["episode"]
    return EpisodeLimits(
        dt=float(epi["dt"]),
        max_steps=int(epi["max_steps"]),
        stop_radius=float(epi["stop_radius"]),
    )


@dataclass
class ScenarioConfig:
    """One runnable scenario: a world, endpoints, and optional overrides."""

    name: str
    world: World
    start: Pose
    target: Pose
    strategy: str = "bbfm"
    disabled: tuple[str, ...] = ()
    overrides: dict = field(default_factory=dict)
    seed: int | None = None  # reserved; the core is deterministic
    description: str = ""

    @classmethod
    def from_file(cls, path: str | Path) -> "ScenarioConfig":
        path = Path(path)
        try:
            data = json.loads(path.read_text())
        except OSError as exc:
            raise ConfigurationError(f"cannot read scenario {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"scenario {path} is not valid JSON: {exc}") from exc
        try:
            if "world_file" in data:
                world_path = Path(data["world_file"])
                if not world_path.is_absolute():
                    world_path = path.parent / world_path
                world = World.from_dict(json.loads(world_path.read_text()))
            else:
                world = World.from_dict(data["world"])
            start = Pose(*map(float, data["start"]))
            target = Pose(*map(float, data["target"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigurationError(f"malformed scenario {path}: {exc}") from exc
        except OSError as exc:
            raise ConfigurationError(f"cannot read world for scenario {path}: {exc}") from exc
        return cls(
            name=data.get("name", path.stem),
            world=world,
            start=start,
            target=target,
            strategy=data.get("strategy", "bbfm"),
            disabled=tuple(data.get("disable", ())),
            overrides=data.get("overrides", {}),
            seed=data.get("seed"),
            description=data.get("description", ""),
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "world": self.world.to_dict(),
            "start": [self.start.x, self.start.y, self.start.theta],
            "target": [self.target.x, self.target.y, self.target.theta],
            "strategy": self.strategy,
            "disable": list(self.disabled),
            "overrides": self.overrides,
            "description": self.description,
        }
