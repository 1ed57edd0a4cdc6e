"""Lexicographic multi-objective command fusion over discretized (u, omega).

Each behavior's aggregated output membership functions act as objective
functions.  The solver maximizes them in strict priority order, each stage
restricted to the previous stage's argmax set, and stops early once a unique
solution remains.  Remaining ties break toward the greatest u and the
smallest-magnitude omega (positive preferred).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence, Union

import numpy as np

from .errors import ConfigurationError
from .fuzzy import AggregatedMembership, MembershipFunction, sample

Objective = Union[AggregatedMembership, np.ndarray, Callable[[np.ndarray], np.ndarray]]

U_LIMITS = (0.0, 1.3)
OMEGA_LIMITS = (-4.3, 4.3)
DEFAULT_GRID_STEP = 0.01
DEFAULT_EPSILON = 1e-9


def make_grid(lo: float, hi: float, step: float) -> np.ndarray:
    """Ascending grid from lo to hi with the requested step.

    Rounded to 12 decimals so the endpoints land exactly on the limits and a
    symmetric grid contains an exact 0.0.
    """
    if not lo < hi or step <= 0:
        raise ConfigurationError(f"bad grid spec [{lo}, {hi}] step {step}")
    n = int(round((hi - lo) / step)) + 1
    return np.round(np.linspace(lo, hi, n), 12) + 0.0


@dataclass(frozen=True)
class VelocityCommand:
    u: float
    omega: float


@dataclass
class CommandDomain:
    """Discretized command space shared by fusion and the baselines.

    Caches consequent membership curves per grid; the caches are filled via
    the scalar evaluation path and are read-only afterwards, so a domain can
    be shared across concurrently running episodes.
    """

    u_grid: np.ndarray
    omega_grid: np.ndarray
    epsilon: float = DEFAULT_EPSILON
    _curves: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for name, grid, limits in (("u", self.u_grid, U_LIMITS),
                                   ("omega", self.omega_grid, OMEGA_LIMITS)):
            if len(grid) == 0:
                raise ConfigurationError(f"empty {name} grid")
            if np.any(np.diff(grid) <= 0):
                raise ConfigurationError(f"{name} grid is not strictly ascending")
        if self.epsilon < 0:
            raise ConfigurationError(f"negative tolerance {self.epsilon}")
        self._curves = {"u": {}, "omega": {}}

    @classmethod
    def default(cls, u_step: float = DEFAULT_GRID_STEP, omega_step: float = DEFAULT_GRID_STEP,
                epsilon: float = DEFAULT_EPSILON,
                u_limits: tuple[float, float] = U_LIMITS,
                omega_limits: tuple[float, float] = OMEGA_LIMITS) -> "CommandDomain":
        return cls(
            u_grid=make_grid(u_limits[0], u_limits[1], u_step),
            omega_grid=make_grid(omega_limits[0], omega_limits[1], omega_step),
            epsilon=epsilon,
        )

    def grid(self, variable: str) -> np.ndarray:
        return self.u_grid if variable == "u" else self.omega_grid

    def warm_cache(self, variable: str, mfs: Sequence[MembershipFunction]) -> None:
        cache = self._curves[variable]
        grid = self.grid(variable)
        for mf in mfs:
            if mf not in cache:
                cache[mf] = sample(mf, grid)

    def evaluate(self, agg: AggregatedMembership, variable: str) -> np.ndarray:
        self.warm_cache(variable, [mf for _, mf in agg.pairs])
        return agg.evaluate_on(self.grid(variable), self._curves[variable])


def _values(objective: Objective, grid: np.ndarray) -> np.ndarray:
    if isinstance(objective, AggregatedMembership):
        vals = objective.evaluate_on(grid)
    elif isinstance(objective, np.ndarray):
        vals = objective
    else:
        vals = np.asarray(objective(grid), dtype=float)
    if len(vals) != len(grid):
        raise ConfigurationError("objective values do not match the grid")
    return vals


def argmax_set(objective: Objective, grid: np.ndarray, epsilon: float = 0.0) -> np.ndarray:
    """All grid points within epsilon of the objective's grid maximum, in grid order."""
    vals = _values(objective, grid)
    return grid[vals >= vals.max() - epsilon]


def lexicographic_solve(objectives: Sequence[Objective], grid: np.ndarray,
                        epsilon: float = 0.0) -> np.ndarray:
    """Filter the grid through the objectives in priority order.

    Stops early once a single point remains.  The result is never empty, and
    with epsilon = 0 every member is Pareto-optimal on the grid.
    """
    if not objectives:
        raise ConfigurationError("need at least one objective")
    keep = np.arange(len(grid))
    for objective in objectives:
        vals = _values(objective, grid)[keep]
        keep = keep[vals >= vals.max() - epsilon]
        if len(keep) == 1:
            break
    return grid[keep]


def _pick_u(candidates: np.ndarray) -> float:
    return float(candidates[-1])


def _pick_omega(candidates: np.ndarray) -> float:
    # Smallest magnitude; a +/- magnitude tie goes to the positive side.
    return float(min(candidates, key=lambda w: (abs(w), 0.0 if w >= 0 else 1.0)))


def fuse(lm_out: Mapping[str, AggregatedMembership],
         oa_out: Mapping[str, AggregatedMembership],
         gr_out: Mapping[str, AggregatedMembership],
         domain: CommandDomain) -> VelocityCommand:
    """Fuse the three behaviors' outputs into one velocity command.

    u and omega are solved as two independent lexicographic problems with
    priority order local-minimum, obstacle, goal.  Leftover ties break to the
    greatest u and the smallest-magnitude omega.
    """
    command = {}
    for variable, pick in (("u", _pick_u), ("omega", _pick_omega)):
        stacked = [domain.evaluate(out[variable], variable) for out in (lm_out, oa_out, gr_out)]
        candidates = lexicographic_solve(stacked, domain.grid(variable), domain.epsilon)
        command[variable] = pick(candidates)
    return VelocityCommand(command["u"], command["omega"])
