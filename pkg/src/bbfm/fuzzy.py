"""Mamdani fuzzy core: membership functions, rule firing, max-min aggregation.

Inference deliberately stops before defuzzification.  Evaluating a rule base
yields, per output variable, an aggregated membership function that stays
evaluable (firing strengths plus consequent references), so downstream code
can treat it as an objective function over a command grid.

All membership degrees are computed through the scalar `math.exp` path, also
when sampling onto numpy grids.  Grid-level combination then only uses exact
min/max operations, which keeps results bit-identical to a straightforward
scalar implementation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Union

import numpy as np

from .errors import ConfigurationError, ValidationError

# math.exp raises OverflowError just above 709.78; past the cutoff the
# sigmoid has saturated to 0 anyway.
_EXP_CUTOFF = 709.0


@dataclass(frozen=True)
class Gaussian:
    """exp(-(x - center)^2 / (2 width^2)); equals 1 at the center."""

    center: float
    width: float

    def __post_init__(self):
        if not (math.isfinite(self.center) and math.isfinite(self.width)):
            raise ValidationError(f"non-finite Gaussian parameters ({self.center}, {self.width})")
        if self.width <= 0:
            raise ValidationError(f"Gaussian width must be > 0, got {self.width}")


@dataclass(frozen=True)
class Sigmoid:
    """1 / (1 + exp(-slope (x - inflection))); equals 0.5 at the inflection.

    The sign of `slope` picks the direction: positive saturates to 1 on the
    right, negative on the left.
    """

    slope: float
    inflection: float

    def __post_init__(self):
        if not (math.isfinite(self.slope) and math.isfinite(self.inflection)):
            raise ValidationError(f"non-finite Sigmoid parameters ({self.slope}, {self.inflection})")
        if self.slope == 0:
            raise ValidationError("Sigmoid slope must be nonzero")


MembershipFunction = Union[Gaussian, Sigmoid]


def eval_mf(mf: MembershipFunction, x: float) -> float:
    """Membership degree of crisp value `x`, always in [0, 1]."""
    if not math.isfinite(x):
        raise ValidationError(f"non-finite input {x!r}")
    if isinstance(mf, Gaussian):
        d = x - mf.center
        return math.exp(-(d * d) / (2.0 * mf.width * mf.width))
    if isinstance(mf, Sigmoid):
        t = -mf.slope * (x - mf.inflection)
        if t > _EXP_CUTOFF:
            return 0.0
        return 1.0 / (1.0 + math.exp(t))
    raise ValidationError(f"not a membership function: {mf!r}")


def sample(mf: MembershipFunction, xs) -> np.ndarray:
    """Evaluate `mf` at every point of `xs` through the scalar path."""
    return np.array([eval_mf(mf, float(x)) for x in xs], dtype=float)


@dataclass(frozen=True)
class LinguisticVariable:
    """A named variable with a closed universe and its term membership functions."""

    name: str
    universe: tuple[float, float]
    terms: Mapping[str, MembershipFunction]

    def __post_init__(self):
        lo, hi = self.universe
        if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
            raise ConfigurationError(f"degenerate universe {self.universe} for {self.name!r}")
        if not self.terms:
            raise ConfigurationError(f"variable {self.name!r} has no terms")

    def clamp(self, x: float) -> float:
        # Sensors may report at or past the range boundary; rule semantics
        # live on the declared universe.
        lo, hi = self.universe
        return min(max(x, lo), hi)

    def term(self, label: str) -> MembershipFunction:
        try:
            return self.terms[label]
        except KeyError:
            raise ConfigurationError(f"variable {self.name!r} has no term {label!r}") from None

    def membership(self, label: str, x: float) -> float:
        return eval_mf(self.term(label), self.clamp(x))


@dataclass(frozen=True)
class Rule:
    """if <antecedent> then <consequent>; unmentioned inputs are don't-cares."""

    antecedent: Mapping[str, str]
    consequent: Mapping[str, str]


def firing_strength(rule: Rule, inputs: Mapping[str, float],
                    variables: Mapping[str, LinguisticVariable]) -> float:
    """Minimum antecedent membership; don't-care variables do not participate.

    An empty antecedent fires with strength 1.
    """
    h = 1.0
    for name, label in rule.antecedent.items():
        var = variables.get(name)
        if var is None:
            raise ConfigurationError(f"rule references unknown variable {name!r}")
        if name not in inputs:
            raise ValidationError(f"missing crisp input for variable {name!r}")
        h = min(h, var.membership(label, inputs[name]))
    return h


@dataclass(frozen=True)
class RuleBase:
    name: str
    inputs: Mapping[str, LinguisticVariable]
    outputs: Mapping[str, LinguisticVariable]
    rules: tuple[Rule, ...]

    def __post_init__(self):
        for i, rule in enumerate(self.rules):
            for var, label in rule.antecedent.items():
                if var not in self.inputs:
                    raise ConfigurationError(
                        f"{self.name}: rule {i + 1} antecedent uses undeclared input {var!r}")
                self.inputs[var].term(label)
            for var in self.outputs:
                if var not in rule.consequent:
                    raise ConfigurationError(
                        f"{self.name}: rule {i + 1} has no consequent for output {var!r}")
            for var, label in rule.consequent.items():
                if var not in self.outputs:
                    raise ConfigurationError(
                        f"{self.name}: rule {i + 1} consequent uses undeclared output {var!r}")
                self.outputs[var].term(label)


@dataclass(frozen=True)
class AggregatedMembership:
    """Un-defuzzified output of one rule base for one output variable.

    Stores (firing strength, consequent) pairs; evaluation realizes
    y -> max_k min(H_k, mu_k(y)).  With no pairs, or all strengths zero,
    the function is identically 0.
    """

    variable: LinguisticVariable
    pairs: tuple[tuple[float, MembershipFunction], ...]

    def evaluate(self, y: float) -> float:
        best = 0.0
        for h, mf in self.pairs:
            best = max(best, min(h, eval_mf(mf, y)))
        return best

    def evaluate_on(self, grid, curves: Mapping[MembershipFunction, np.ndarray] | None = None) -> np.ndarray:
        """Vectorized evaluation on a grid.

        `curves` may hold pre-sampled consequent values for the same grid;
        combination uses only exact min/max, so the result is bit-identical
        to pointwise `evaluate`.
        """
        out = np.zeros(len(grid), dtype=float)
        for h, mf in self.pairs:
            curve = curves[mf] if curves is not None else sample(mf, grid)
            np.maximum(out, np.minimum(h, curve), out=out)
        return out

    def max_strength(self) -> float:
        return max((h for h, _ in self.pairs), default=0.0)


def evaluate_rulebase(rb: RuleBase, inputs: Mapping[str, float]) -> dict[str, AggregatedMembership]:
    """Fire every rule once and aggregate per output variable (max-min)."""
    strengths = [firing_strength(rule, inputs, rb.inputs) for rule in rb.rules]
    result = {}
    for var_name, var in rb.outputs.items():
        pairs = tuple(
            (h, var.term(rule.consequent[var_name]))
            for h, rule in zip(strengths, rb.rules)
        )
        result[var_name] = AggregatedMembership(var, pairs)
    return result
