"""2D kinematic simulator: segment-obstacle worlds, cone-model ultrasonic
sensing, unicycle integration, and the deterministic episode loop."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .behaviors import NavInputs, compute_nav_inputs, wrap_angle
from .errors import ConfigurationError, ValidationError
from .fusion import VelocityCommand


@dataclass(frozen=True)
class Pose:
    x: float
    y: float
    theta: float


@dataclass(frozen=True)
class RobotParams:
    wheel_radius: float = 0.085
    axle_length: float = 0.265
    u_limits: tuple[float, float] = (0.0, 1.3)
    omega_limits: tuple[float, float] = (-4.3, 4.3)
    body_radius: float = 0.18

    def wheel_speeds(self, cmd: VelocityCommand) -> tuple[float, float]:
        """Per-wheel angular speeds (left, right) for a commanded twist.

        The wheel parameter is treated as a radius; the trajectory simulation
        itself integrates (u, omega) directly and never uses it.
        """
        half = 0.5 * self.axle_length
        return ((cmd.u - cmd.omega * half) / self.wheel_radius,
                (cmd.u + cmd.omega * half) / self.wheel_radius)


class World:
    """Obstacles as line segments; polygons are stored as closed chains."""

    def __init__(self, segments: Sequence[tuple[tuple[float, float], tuple[float, float]]],
                 bounds: tuple[float, float, float, float] | None = None):
        segs = np.asarray(segments, dtype=float).reshape(-1, 2, 2)
        if segs.size and not np.all(np.isfinite(segs)):
            raise ConfigurationError("non-finite world segment")
        if segs.size and np.any(np.all(segs[:, 0] == segs[:, 1], axis=1)):
            raise ConfigurationError("degenerate (zero-length) world segment")
        self.segments = segs
        self.bounds = bounds
        # Precomputed pieces for raycasting and distance queries.
        self._a = segs[:, 0, :] if segs.size else np.zeros((0, 2))
        self._d = (segs[:, 1, :] - segs[:, 0, :]) if segs.size else np.zeros((0, 2))
        self._len2 = np.sum(self._d * self._d, axis=1)

    @classmethod
    def from_shapes(cls, polygons: Sequence[Sequence[tuple[float, float]]] = (),
                    segments: Sequence = (),
                    bounds: tuple[float, float, float, float] | None = None) -> "World":
        segs = [tuple(map(tuple, s)) for s in segments]
        for poly in polygons:
            pts = [tuple(p) for p in poly]
            for i in range(len(pts)):
                segs.append((pts[i], pts[(i + 1) % len(pts)]))
        return cls(segs, bounds=bounds)

    @classmethod
    def from_dict(cls, data: dict) -> "World":
        try:
            return cls.from_shapes(
                polygons=data.get("polygons", ()),
                segments=data.get("segments", ()),
                bounds=tuple(data["bounds"]) if "bounds" in data else None,
            )
        except (TypeError, ValueError, KeyError) as exc:
            raise ConfigurationError(f"malformed world data: {exc}") from exc

    def to_dict(self) -> dict:
        data = {"segments": self.segments.tolist()}
        if self.bounds is not None:
            data["bounds"] = list(self.bounds)
        return data

    def clearance(self, x: float, y: float) -> float:
        """Distance from a point to the nearest obstacle segment."""
        if not len(self.segments):
            return math.inf
        p = np.array((x, y)) - self._a
        t = np.clip(np.einsum("ij,ij->i", p, self._d) / np.where(self._len2 > 0, self._len2, 1.0), 0.0, 1.0)
        closest = self._a + t[:, None] * self._d
        diff = np.array((x, y)) - closest
        return float(np.sqrt(np.min(np.einsum("ij,ij->i", diff, diff))))


def raycast(world: World, origin: tuple[float, float], direction: float,
            max_range: float = 4.0) -> float:
    """Distance along the ray to the nearest segment hit, capped at max_range."""
    if not len(world.segments):
        return max_range
    ox, oy = origin
    dx, dy = math.cos(direction), math.sin(direction)
    a, d = world._a, world._d
    denom = dx * d[:, 1] - dy * d[:, 0]
    rel = a - (ox, oy)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = (rel[:, 0] * d[:, 1] - rel[:, 1] * d[:, 0]) / denom
        s = (rel[:, 0] * dy - rel[:, 1] * dx) / denom
    hit = (denom != 0) & (t >= 0.0) & (s >= 0.0) & (s <= 1.0)
    if not hit.any():
        return max_range
    return float(min(t[hit].min(), max_range))


@dataclass(frozen=True)
class SensorConfig:
    """Eight ultrasonic cones, mounted right-to-left across the frontal arc."""

    mount_angles: tuple[float, ...] = tuple(np.radians(np.linspace(-80.0, 80.0, 8)))
    cone_half_angle: float = math.radians(7.5)
    max_range: float = 4.0
    min_range: float = 0.0
    rays_per_cone: int = 5

    def __post_init__(self):
        if len(self.mount_angles) != 8:
            raise ConfigurationError(f"expected 8 mount angles, got {len(self.mount_angles)}")
        if any(b <= a for a, b in zip(self.mount_angles, self.mount_angles[1:])):
            raise ConfigurationError("mount angles must ascend right-to-left")
        if not 0 <= self.min_range < self.max_range:
            raise ConfigurationError("sensor range must satisfy 0 <= min < max")
        if self.rays_per_cone < 1:
            raise ConfigurationError("need at least one ray per cone")


def sense(world: World, pose: Pose, cfg: SensorConfig = SensorConfig()) -> tuple[float, ...]:
    """Simulated ultrasonic readings: per sensor, the minimum raycast over
    rays fanned across its cone, clamped to the configured range."""
    readings = []
    for mount in cfg.mount_angles:
        if cfg.rays_per_cone == 1:
            offsets = (0.0,)
        else:
            offsets = np.linspace(-cfg.cone_half_angle, cfg.cone_half_angle, cfg.rays_per_cone)
        dist = min(
            raycast(world, (pose.x, pose.y), pose.theta + mount + off, cfg.max_range)
            for off in offsets
        )
        readings.append(min(max(dist, cfg.min_range), cfg.max_range))
    return tuple(readings)


def step_kinematics(pose: Pose, cmd: VelocityCommand, dt: float) -> Pose:
    """Explicit Euler step of the unicycle model; heading stays wrapped."""
    if dt <= 0:
        raise ValidationError(f"dt must be > 0, got {dt}")
    return Pose(
        x=pose.x + cmd.u * math.cos(pose.theta) * dt,
        y=pose.y + cmd.u * math.sin(pose.theta) * dt,
        theta=wrap_angle(pose.theta + cmd.omega * dt),
    )


@dataclass(frozen=True)
class EpisodeLimits:
    dt: float = 0.1
    max_steps: int = 5000
    stop_radius: float = 0.05


@dataclass(frozen=True)
class StepRecord:
    step: int
    t: float
    pose: Pose
    nav: NavInputs
    command: VelocityCommand
    strengths: tuple[float, float, float]  # (H_LM, H_OA, H_GR)


@dataclass
class TrajectoryTrace:
    """Per-step episode record.

    `rows` holds one record per control step plus a terminal stop row
    (command 0,0) carrying the final pose, so consecutive rows fully describe
    the path.
    """

    rows: list[StepRecord]
    outcome: str  # success | collision | timeout
    dt: float
    target: Pose
    stop_radius: float

    @property
    def steps(self) -> list[StepRecord]:
        return self.rows[:-1]

    @property
    def final_pose(self) -> Pose:
        return self.rows[-1].pose


SUCCESS, COLLISION, TIMEOUT = "success", "collision", "timeout"

_STOP = VelocityCommand(0.0, 0.0)


def run_episode(world: World, start: Pose, target: Pose,
                controller: Callable[[NavInputs], "object"],
                limits: EpisodeLimits = EpisodeLimits(),
                sensors: SensorConfig = SensorConfig(),
                robot: RobotParams = RobotParams()) -> TrajectoryTrace:
    """Run sense -> infer -> fuse -> integrate until the target ball is
    reached, the body disc touches an obstacle, or steps run out.

    The controller maps NavInputs to a decision exposing `command`
    (VelocityCommand) and `strengths` ((H_LM, H_OA, H_GR)).  Failures are
    recorded outcomes, not exceptions.
    """
    rows: list[StepRecord] = []
    pose = start
    prev_rho: float | None = None
    outcome = TIMEOUT
    nav = None
    for step in range(limits.max_steps):
        nav = compute_nav_inputs(pose, target, prev_rho, sense(world, pose, sensors))
        prev_rho = nav.rho
        if nav.rho <= limits.stop_radius:
            outcome = SUCCESS
            break
        decision = controller(nav)
        rows.append(StepRecord(step, step * limits.dt, pose, nav,
                               decision.command, tuple(decision.strengths)))
        pose = step_kinematics(pose, decision.command, limits.dt)
        nav = None
        if world.clearance(pose.x, pose.y) < robot.body_radius:
            outcome = COLLISION
            break
    if nav is None:  # collision or timeout: terminal inputs not sensed yet
        nav = compute_nav_inputs(pose, target, prev_rho, sense(world, pose, sensors))
    rows.append(StepRecord(len(rows), len(rows) * limits.dt, pose, nav,
                           _STOP, (0.0, 0.0, 0.0)))
    return TrajectoryTrace(rows=rows, outcome=outcome, dt=limits.dt,
                           target=target, stop_radius=limits.stop_radius)
