"""Conventional fuzzy command-fusion orderings used as comparison baselines.

Two variants: defuzzify each behavior first and combine the crisp values
(weighted average), or combine the fuzzy outputs first (pointwise max) and
defuzzify once.  Both use centroid defuzzification.  The two orderings
generally disagree with each other and with lexicographic fusion, which is
the point of keeping them around.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ConfigurationError
from .fusion import CommandDomain, VelocityCommand
from .fuzzy import AggregatedMembership

DEFUZZIFY_THEN_COMBINE = "defuzzify_then_combine"
COMBINE_THEN_DEFUZZIFY = "combine_then_defuzzify"


@dataclass(frozen=True)
class BaselineStrategy:
    variant: str
    weights: tuple[float, ...] = (1.0, 1.0, 1.0)

    def __post_init__(self):
        if self.variant not in (DEFUZZIFY_THEN_COMBINE, COMBINE_THEN_DEFUZZIFY):
            raise ConfigurationError(f"unknown baseline variant {self.variant!r}")
        if any(w < 0 for w in self.weights) or not any(self.weights):
            raise ConfigurationError(f"weights must be non-negative and not all zero: {self.weights}")


def centroid_defuzzify(agg, grid) -> float:
    """Centroid of an aggregated membership over the grid.

    Falls back to the grid midpoint when the function is identically zero.
    """
    if isinstance(agg, AggregatedMembership):
        vals = agg.evaluate_on(grid)
    else:
        vals = np.asarray(agg, dtype=float)
    total = float(vals.sum())
    if total == 0.0:
        return float(grid[0] + grid[-1]) / 2.0
    return float(np.dot(grid, vals)) / total


def fuse_baseline(strategy: BaselineStrategy,
                  outputs: Sequence[dict[str, AggregatedMembership]],
                  domain: CommandDomain) -> VelocityCommand:
    """Fuse per-behavior outputs with the selected conventional ordering.

    `outputs` holds one {variable: AggregatedMembership} map per behavior,
    aligned with the strategy weights.  A behavior whose output is identically
    zero has no opinion: it is left out of the variant-A average instead of
    contributing a meaningless midpoint centroid.
    """
    if len(outputs) != len(strategy.weights):
        raise ConfigurationError(
            f"{len(outputs)} behavior outputs for {len(strategy.weights)} weights")
    command = {}
    for variable in ("u", "omega"):
        grid = domain.grid(variable)
        values = [domain.evaluate(out[variable], variable) for out in outputs]
        if strategy.variant == DEFUZZIFY_THEN_COMBINE:
            num = den = 0.0
            for w, vals in zip(strategy.weights, values):
                if w == 0.0 or float(vals.sum()) == 0.0:
                    continue
                num += w * centroid_defuzzify(vals, grid)
                den += w
            crisp = num / den if den else float(grid[0] + grid[-1]) / 2.0
        else:
            combined = np.maximum.reduce(values)
            crisp = centroid_defuzzify(combined, grid)
        command[variable] = min(max(crisp, float(grid[0])), float(grid[-1]))
    return VelocityCommand(command["u"], command["omega"])
