"""Glue between the behavior rule bases and a fusion strategy."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .baselines import (COMBINE_THEN_DEFUZZIFY, DEFUZZIFY_THEN_COMBINE,
                        BaselineStrategy, fuse_baseline)
from .behaviors import BehaviorSpec, NavInputs, default_behaviors
from .errors import ConfigurationError
from .fusion import CommandDomain, VelocityCommand, fuse
from .fuzzy import AggregatedMembership, evaluate_rulebase

STRATEGIES = ("bbfm", "fig4a", "fig4b")

_TAGS = {"local_minimum": "LM", "obstacle_avoidance": "OA", "goal_reaching": "GR"}


@dataclass(frozen=True)
class Decision:
    command: VelocityCommand
    strengths: tuple[float, float, float]  # max firing strength per behavior, priority order


class NavigationController:
    """Evaluates the behavior stack on crisp inputs and fuses one command.

    Strategies: "bbfm" (lexicographic multi-objective), "fig4a" (defuzzify
    each behavior, then weighted-average the crisp values), "fig4b" (max-
    combine the fuzzy outputs, then defuzzify once).  A disabled behavior
    contributes an identically-zero output, which constrains nothing.
    """

    def __init__(self, behaviors: Sequence[BehaviorSpec] | None = None,
                 domain: CommandDomain | None = None,
                 strategy: str = "bbfm",
                 weights: Sequence[float] | None = None,
                 disabled: Iterable[str] = ()):
        if strategy not in STRATEGIES:
            raise ConfigurationError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
        self.behaviors = tuple(sorted(
            default_behaviors() if behaviors is None else behaviors,
            key=lambda spec: spec.priority))
        if len(self.behaviors) != 3:
            raise ConfigurationError(f"expected 3 behaviors, got {len(self.behaviors)}")
        priorities = [spec.priority for spec in self.behaviors]
        if len(set(priorities)) != len(priorities):
            raise ConfigurationError(f"behavior priorities must be unique, got {priorities}")
        self.domain = domain if domain is not None else CommandDomain.default()
        self.strategy = strategy
        self.disabled = frozenset(disabled)
        known = {spec.name for spec in self.behaviors}
        unknown = self.disabled - known
        if unknown:
            raise ConfigurationError(f"cannot disable unknown behaviors {sorted(unknown)}")
        if weights is None:
            weights = (1.0,) * len(self.behaviors)
        self._baseline = BaselineStrategy(
            DEFUZZIFY_THEN_COMBINE if strategy == "fig4a" else COMBINE_THEN_DEFUZZIFY,
            tuple(float(w) for w in weights))
        # Fill the consequent-curve caches up front; afterwards the domain is
        # only read, so episodes can share a controller.
        for spec in self.behaviors:
            for variable, var in spec.rulebase.outputs.items():
                self.domain.warm_cache(variable, list(var.terms.values()))

    def decide(self, nav: NavInputs) -> Decision:
        inputs = nav.as_dict()
        outputs = []
        strengths = []
        for spec in self.behaviors:
            if spec.name in self.disabled:
                outputs.append({name: AggregatedMembership(var, ())
                                for name, var in spec.rulebase.outputs.items()})
                strengths.append(0.0)
            else:
                out = evaluate_rulebase(spec.rulebase, inputs)
                outputs.append(out)
                strengths.append(out["u"].max_strength())
        if self.strategy == "bbfm":
            command = fuse(outputs[0], outputs[1], outputs[2], self.domain)
        else:
            command = fuse_baseline(self._baseline, outputs, self.domain)
        return Decision(command=command, strengths=tuple(strengths))

    __call__ = decide

    def tags(self) -> tuple[str, ...]:
        return tuple(_TAGS.get(spec.name, spec.name) for spec in self.behaviors)
