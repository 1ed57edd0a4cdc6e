"""Behavior-based fuzzy navigation with lexicographic multi-objective fusion.

Three Mamdani behaviors (local-minimum avoidance, obstacle avoidance, goal
reaching) keep their outputs fuzzy; a lexicographic optimizer over the
discretized command space picks a Pareto-optimal (u, omega).  Includes a 2D
differential-drive simulator with ultrasonic cone sensing, conventional
fuzzy-fusion baselines, and a scenario harness CLI.
"""

from .baselines import BaselineStrategy, centroid_defuzzify, fuse_baseline
from .behaviors import (BehaviorSpec, NavInputs, build_goal_reaching,
                        build_local_minimum, build_obstacle_avoidance,
                        compute_nav_inputs, default_behaviors,
                        default_variables, wrap_angle)
from .controller import Decision, NavigationController
from .errors import ConfigurationError, ValidationError
from .fusion import (CommandDomain, VelocityCommand, argmax_set, fuse,
                     lexicographic_solve, make_grid)
from .fuzzy import (AggregatedMembership, Gaussian, LinguisticVariable,
                    MembershipFunction, Rule, RuleBase, Sigmoid, eval_mf,
                    evaluate_rulebase, firing_strength, sample)
from .metrics import Metrics, compute_metrics
from .sim import (EpisodeLimits, Pose, RobotParams, SensorConfig,
                  TrajectoryTrace, World, raycast, run_episode, sense,
                  step_kinematics)

__version__ = "0.1.0"

__all__ = [
    "AggregatedMembership", "BaselineStrategy", "BehaviorSpec",
    "CommandDomain", "ConfigurationError", "Decision", "EpisodeLimits",
    "Gaussian", "LinguisticVariable", "MembershipFunction", "Metrics",
    "NavInputs", "NavigationController", "Pose", "RobotParams", "Rule",
    "RuleBase", "SensorConfig", "Sigmoid", "TrajectoryTrace",
    "ValidationError", "VelocityCommand", "World", "argmax_set",
    "build_goal_reaching", "build_local_minimum", "build_obstacle_avoidance",
    "centroid_defuzzify", "compute_metrics", "compute_nav_inputs",
    "default_behaviors", "default_variables", "eval_mf", "evaluate_rulebase",
    "firing_strength", "fuse", "fuse_baseline", "lexicographic_solve",
    "make_grid", "raycast", "run_episode", "sample", "sense",
    "step_kinematics", "wrap_angle",
]
