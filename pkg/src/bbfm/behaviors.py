"""Crisp navigation inputs and the three behavior rule bases.

The behaviors, in descending priority: local-minimum avoidance, obstacle
avoidance, goal reaching.  Each is a Mamdani rule base over a shared set of
linguistic vocabularies; membership parameters below are tunable defaults
and can be overridden through the JSON configuration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Mapping, Sequence

from .errors import ValidationError
from .fuzzy import Gaussian, LinguisticVariable, Rule, RuleBase, Sigmoid

if TYPE_CHECKING:
    from .sim import Pose


# Default term parameters.  Edge terms saturate (sigmoid), interior terms
# are unimodal (Gaussian).  Vocabulary labels: N/M/F near-medium-far,
# LN/N/Z/P/LP strongly-negative..strongly-positive bearing, S/M/L speed,
# *o turn-rate counterparts, PT positive range trend.
DISTANCE_TERMS = {
    "N": Sigmoid(-10.0, 0.6),
    "M": Gaussian(1.0, 0.35),
    "F": Sigmoid(6.0, 1.4),
}
BEARING_TERMS = {
    "LN": Sigmoid(-4.0, -1.2),
    "N": Gaussian(-0.6, 0.35),
    "Z": Gaussian(0.0, 0.25),
    "P": Gaussian(0.6, 0.35),
    "LP": Sigmoid(4.0, 1.2),
}
SPEED_TERMS = {
    "S": Gaussian(0.15, 0.12),
    "M": Gaussian(0.55, 0.18),
    "L": Sigmoid(8.0, 0.9),
}
TURN_TERMS = {
    "LNo": Sigmoid(-3.0, -2.2),
    "No": Gaussian(-1.2, 0.5),
    "Zo": Gaussian(0.0, 0.4),
    "Po": Gaussian(1.2, 0.5),
    "LPo": Sigmoid(3.0, 2.2),
}
TARGET_RANGE_TERMS = {
    "N": Sigmoid(-8.0, 0.8),
    "M": Gaussian(2.5, 1.0),
    "F": Sigmoid(2.0, 4.5),
}
RANGE_TREND_TERMS = {
    "PT": Sigmoid(30.0, 0.02),
}

SENSOR_RANGE = (0.0, 4.0)
BEARING_RANGE = (-math.pi, math.pi)
SPEED_RANGE = (0.0, 1.3)
TURN_RANGE = (-4.3, 4.3)
TARGET_RANGE = (0.0, 20.0)
TREND_RANGE = (-1.0, 1.0)


def default_variables() -> dict[str, LinguisticVariable]:
    """Linguistic variables for all controller inputs and outputs."""
    return {
        "d_l": LinguisticVariable("d_l", SENSOR_RANGE, DISTANCE_TERMS),
        "d_f": LinguisticVariable("d_f", SENSOR_RANGE, DISTANCE_TERMS),
        "d_r": LinguisticVariable("d_r", SENSOR_RANGE, DISTANCE_TERMS),
        "alpha": LinguisticVariable("alpha", BEARING_RANGE, BEARING_TERMS),
        "rho": LinguisticVariable("rho", TARGET_RANGE, TARGET_RANGE_TERMS),
        "e_d": LinguisticVariable("e_d", TREND_RANGE, RANGE_TREND_TERMS),
        "u": LinguisticVariable("u", SPEED_RANGE, SPEED_TERMS),
        "omega": LinguisticVariable("omega", TURN_RANGE, TURN_TERMS),
    }


@dataclass(frozen=True)
class NavInputs:
    """Crisp controller inputs: grouped sensor distances, bearing to target,
    distance to target, and its per-step change."""

    d_l: float
    d_f: float
    d_r: float
    alpha: float
    rho: float
    e_d: float

    def as_dict(self) -> dict[str, float]:
        return {
            "d_l": self.d_l, "d_f": self.d_f, "d_r": self.d_r,
            "alpha": self.alpha, "rho": self.rho, "e_d": self.e_d,
        }


def wrap_angle(a: float) -> float:
    """Wrap into [-pi, pi]; the boundary keeps its sign."""
    return math.remainder(a, math.tau)


def compute_nav_inputs(pose: "Pose", target: "Pose", prev_rho: float | None,
                       readings: Sequence[float]) -> NavInputs:
    """Derive the crisp behavior inputs from pose, target and 8 sensor readings.

    Sensors are indexed right-to-left: readings 1-3 form the right group,
    4-5 the front group, 6-8 the left group.  e_d is the change of rho since
    the previous control step (0 on the first step).
    """
    if len(readings) != 8:
        raise ValidationError(f"expected 8 sensor readings, got {len(readings)}")
    for v in (pose.x, pose.y, pose.theta, target.x, target.y):
        if not math.isfinite(v):
            raise ValidationError("non-finite pose or target")
    dx = target.x - pose.x
    dy = target.y - pose.y
    rho = math.hypot(dx, dy)
    alpha = wrap_angle(math.atan2(dy, dx) - pose.theta)
    e_d = 0.0 if prev_rho is None else rho - prev_rho
    return NavInputs(
        d_l=min(readings[5], readings[6], readings[7]),
        d_f=min(readings[3], readings[4]),
        d_r=min(readings[0], readings[1], readings[2]),
        alpha=alpha,
        rho=rho,
        e_d=e_d,
    )


@dataclass(frozen=True)
class BehaviorSpec:
    """A named rule base with its rank in the fusion priority order (1 = top)."""

    name: str
    priority: int
    rulebase: RuleBase


# Rule charts.  None marks a don't-care antecedent.
#
# Transcription notes for the obstacle-avoidance chart: the original uses the
# spelling variants "Lpo"/"LN0"/"Lno"/"LN _o" for LPo and LNo, normalized
# here.  Row 4 lists output speed "N", which is not in the speed vocabulary
# {S, M, L}; it is encoded as S, the minimal-speed reading for a near-obstacle
# turn.  Rows 1/5 and 4/9 duplicate antecedents with different consequents and
# are kept verbatim: max-min aggregation composes them without special
# handling.

# (d_l, d_f, d_r, alpha) -> (u, omega)
OBSTACLE_AVOIDANCE_RULES = (
    ("N", "N", "F", None, "S", "Po"),    # 1
    ("F", "N", "N", None, "M", "Po"),    # 2
    ("M", "N", "N", None, "M", "Po"),    # 3
    ("F", "N", "M", None, "S", "LPo"),   # 4 (u "N" -> S)
    ("N", "N", "F", None, "M", "LNo"),   # 5
    ("N", "N", "M", None, "M", "No"),    # 6
    ("F", "N", "F", None, "M", "LPo"),   # 7
    ("M", "N", "F", None, "M", "No"),    # 8
    ("F", "N", "M", None, "M", "Po"),    # 9
    ("N", "M", "N", None, "M", "Po"),    # 10
    ("N", "N", "N", None, "S", "Po"),    # 11
    ("M", "N", "M", None, "S", "Po"),    # 12
    ("N", "M", "M", None, "M", "No"),    # 13
    ("N", "M", "F", None, "M", "No"),    # 14
    ("N", "F", "M", None, "M", "No"),    # 15
    ("N", "F", "F", "LN", "S", "LNo"),   # 16
    ("N", "F", "F", "N", "S", "No"),     # 17
    ("N", "F", "F", "Z", "L", "Zo"),     # 18
    ("N", "N", "N", "LP", "L", "Zo"),    # 19
    ("N", "F", "F", "P", "L", "Zo"),     # 20
    ("M", "M", "N", None, "M", "Po"),    # 21
    ("F", "M", "N", None, "M", "Po"),    # 22
    ("M", "F", "N", None, "M", "Po"),    # 23
    ("F", "F", "N", "LN", "L", "Zo"),    # 24
    ("F", "F", "N", "N", "L", "Zo"),     # 25
    ("F", "F", "N", "Z", "L", "Zo"),     # 26
    ("F", "F", "N", "LP", "S", "LPo"),   # 27
    ("F", "F", "N", "P", "S", "LPo"),    # 28
)

# (rho, alpha) -> (u, omega); full 3x5 product, speed scales with range and
# turn mirrors bearing.
GOAL_REACHING_RULES = (
    ("N", "Z", "S", "Zo"),
    ("N", "N", "S", "No"),
    ("N", "LN", "S", "LNo"),
    ("N", "P", "S", "Po"),
    ("N", "LP", "S", "LPo"),
    ("M", "Z", "M", "Zo"),
    ("M", "N", "M", "No"),
    ("M", "LN", "M", "LNo"),
    ("M", "P", "M", "Po"),
    ("M", "LP", "M", "LPo"),
    ("F", "Z", "L", "Zo"),
    ("F", "N", "L", "No"),
    ("F", "LN", "L", "LNo"),
    ("F", "P", "L", "Po"),
    ("F", "LP", "L", "LPo"),
)

# (d_l, d_f, d_r, e_d, alpha) -> (u, omega); rows 4-7 require a positive
# range trend (the robot is moving away from the target), the trap signature.
LOCAL_MINIMUM_RULES = (
    ("N", "N", "N", None, "Z", "S", "Po"),
    ("F", "N", "N", None, "P", "M", "Po"),
    ("F", "N", "N", None, "LP", "S", "LPo"),
    ("F", "F", "N", "PT", "P", "M", "Zo"),
    ("F", "F", "N", "PT", "LP", "M", "Zo"),
    ("F", "F", "F", "PT", "P", "M", "Zo"),
    ("F", "F", "F", "PT", "LP", "M", "LNo"),
)


def _rules(rows, input_names, output_names) -> tuple[Rule, ...]:
    out = []
    for row in rows:
        n = len(input_names)
        antecedent = {v: t for v, t in zip(input_names, row[:n]) if t is not None}
        consequent = dict(zip(output_names, row[n:]))
        out.append(Rule(antecedent, consequent))
    return tuple(out)


def _pick(variables: Mapping[str, LinguisticVariable] | None, names) -> dict[str, LinguisticVariable]:
    variables = default_variables() if variables is None else variables
    return {n: variables[n] for n in names}


def build_obstacle_avoidance(variables: Mapping[str, LinguisticVariable] | None = None) -> BehaviorSpec:
    """28 rules over (d_l, d_f, d_r, alpha) -> (u, omega)."""
    rb = RuleBase(
        name="obstacle_avoidance",
        inputs=_pick(variables, ("d_l", "d_f", "d_r", "alpha")),
        outputs=_pick(variables, ("u", "omega")),
        rules=_rules(OBSTACLE_AVOIDANCE_RULES, ("d_l", "d_f", "d_r", "alpha"), ("u", "omega")),
    )
    return BehaviorSpec("obstacle_avoidance", priority=2, rulebase=rb)


def build_goal_reaching(variables: Mapping[str, LinguisticVariable] | None = None) -> BehaviorSpec:
    """15 rules over (rho, alpha) -> (u, omega)."""
    rb = RuleBase(
        name="goal_reaching",
        inputs=_pick(variables, ("rho", "alpha")),
        outputs=_pick(variables, ("u", "omega")),
        rules=_rules(GOAL_REACHING_RULES, ("rho", "alpha"), ("u", "omega")),
    )
    return BehaviorSpec("goal_reaching", priority=3, rulebase=rb)


def build_local_minimum(variables: Mapping[str, LinguisticVariable] | None = None) -> BehaviorSpec:
    """7 rules over (d_l, d_f, d_r, e_d, alpha) -> (u, omega)."""
    rb = RuleBase(
        name="local_minimum",
        inputs=_pick(variables, ("d_l", "d_f", "d_r", "e_d", "alpha")),
        outputs=_pick(variables, ("u", "omega")),
        rules=_rules(LOCAL_MINIMUM_RULES, ("d_l", "d_f", "d_r", "e_d", "alpha"), ("u", "omega")),
    )
    return BehaviorSpec("local_minimum", priority=1, rulebase=rb)


def default_behaviors(variables: Mapping[str, LinguisticVariable] | None = None) -> tuple[BehaviorSpec, ...]:
    """All behaviors, sorted by descending importance."""
    variables = default_variables() if variables is None else variables
    specs = (
        build_local_minimum(variables),
        build_obstacle_avoidance(variables),
        build_goal_reaching(variables),
    )
    return tuple(sorted(specs, key=lambda s: s.priority))
