"""Episode quality metrics: traveled distance, elapsed time, smoothness
(mean absolute per-step heading change, degrees), final target error."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .behaviors import wrap_angle
from .errors import ValidationError
from .sim import Pose, TrajectoryTrace


@dataclass(frozen=True)
class Metrics:
    traveled_distance: float
    elapsed_time: float
    smoothness_deg: float
    target_error: float
    outcome: str

    def as_dict(self) -> dict:
        return {
            "traveled_distance_m": self.traveled_distance,
            "elapsed_time_s": self.elapsed_time,
            "smoothness_deg_per_step": self.smoothness_deg,
            "target_error_m": self.target_error,
            "outcome": self.outcome,
        }


def compute_metrics(trace: TrajectoryTrace, target: Pose | None = None) -> Metrics:
    """Metrics over a trace; `target` defaults to the trace's own target."""
    if not trace.rows:
        raise ValidationError("empty trace")
    target = trace.target if target is None else target
    poses = [row.pose for row in trace.rows]
    traveled = 0.0
    turn_sum = 0.0
    for a, b in zip(poses, poses[1:]):
        traveled += math.hypot(b.x - a.x, b.y - a.y)
        turn_sum += abs(wrap_angle(b.theta - a.theta))
    steps = len(poses) - 1
    final = poses[-1]
    return Metrics(
        traveled_distance=traveled,
        elapsed_time=steps * trace.dt,
        smoothness_deg=math.degrees(turn_sum / steps) if steps else 0.0,
        target_error=math.hypot(final.x - target.x, final.y - target.y),
        outcome=trace.outcome,
    )
