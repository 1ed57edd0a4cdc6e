"""Bundled scenario maps.

All maps are hand-authored, desk-scale approximations of the usual
navigation benchmarks: an empty field, a corridor, a cluttered diagonal
course, an office-like room with partition walls, and two trap courses
with U-shaped pockets between start and target.
"""

from __future__ import annotations

import math

from .config import ScenarioConfig
from .errors import ConfigurationError
from .sim import Pose, World


def _rect(x0: float, y0: float, x1: float, y1: float) -> list[tuple[float, float]]:
    return [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]


def open_field() -> ScenarioConfig:
    """Empty world; the target sits 5 m straight ahead."""
    return ScenarioConfig(
        name="open-field",
        world=World.from_shapes(bounds=(-1.0, -3.0, 7.0, 3.0)),
        start=Pose(0.0, 0.0, 0.0),
        target=Pose(5.0, 0.0, 0.0),
        description="empty world, straight 5 m run",
    )


def corridor() -> ScenarioConfig:
    """Straight corridor, 2 m wide, with a far end wall."""
    world = World.from_shapes(
        segments=[
            ((-1.0, 1.0), (8.0, 1.0)),
            ((-1.0, -1.0), (8.0, -1.0)),
            ((8.0, -1.0), (8.0, 1.0)),
        ],
        bounds=(-1.5, -2.0, 8.5, 2.0),
    )
    return ScenarioConfig(
        name="corridor",
        world=world,
        start=Pose(0.0, 0.0, 0.0),
        target=Pose(6.5, 0.0, 0.0),
        description="2 m wide corridor run",
    )


def cluttered() -> ScenarioConfig:
    """Diagonal course through scattered block obstacles (classic benchmark
    layout: start and target on opposite corners, boxes in between)."""
    world = World.from_shapes(
        polygons=[
            _rect(1.2, -0.4, 2.0, 0.6),
            _rect(3.0, 0.8, 3.8, 1.8),
            _rect(2.6, -2.2, 3.4, -1.2),
            _rect(4.6, -0.9, 5.4, 0.1),
        ],
        bounds=(-1.0, -3.5, 8.0, 3.5),
    )
    return ScenarioConfig(
        name="cluttered",
        world=world,
        start=Pose(0.0, -0.6, 0.0),
        target=Pose(6.5, 1.2, 0.0),
        description="diagonal run through scattered blocks",
    )


def office() -> ScenarioConfig:
    """Office-like room: outer walls plus two partition bulkheads that force
    an S-shaped route."""
    world = World.from_shapes(
        segments=[
            # outer walls
            ((-1.0, -1.5), (8.0, -1.5)),
            ((8.0, -1.5), (8.0, 4.5)),
            ((8.0, 4.5), (-1.0, 4.5)),
            ((-1.0, 4.5), (-1.0, -1.5)),
            # partitions
            ((1.8, -1.5), (1.8, 2.6)),
            ((4.6, 4.5), (4.6, 0.4)),
        ],
        bounds=(-1.5, -2.0, 8.5, 5.0),
    )
    return ScenarioConfig(
        name="office",
        world=world,
        start=Pose(0.0, 0.0, 0.0),
        target=Pose(6.8, 0.6, 0.0),
        description="room with two partition walls, S-shaped route",
    )


def u_trap() -> ScenarioConfig:
    """A U-shaped pocket between start and target, mouth facing the robot.

    A purely reactive controller cycles in and out of the pocket forever;
    trap detection is needed to slip past the arm."""
    world = World.from_shapes(
        segments=[
            ((2.5, 1.2), (4.5, 1.2)),
            ((4.5, 1.2), (4.5, -1.2)),
            ((4.5, -1.2), (2.5, -1.2)),
        ],
        bounds=(-1.5, -4.0, 9.0, 4.0),
    )
    return ScenarioConfig(
        name="u-trap",
        world=world,
        start=Pose(0.0, 0.5, 0.0),
        target=Pose(7.0, 0.0, 0.0),
        description="U-shaped pocket between start and target",
    )


def nested_trap() -> ScenarioConfig:
    """Two concentric U-shaped pockets; escaping the inner one lands the
    robot inside the outer one."""
    world = World.from_shapes(
        segments=[
            # inner pocket
            ((2.5, 1.2), (4.5, 1.2)),
            ((4.5, 1.2), (4.5, -1.2)),
            ((4.5, -1.2), (2.5, -1.2)),
            # outer pocket
            ((1.0, 2.6), (6.0, 2.6)),
            ((6.0, 2.6), (6.0, -2.6)),
            ((6.0, -2.6), (1.0, -2.6)),
        ],
        bounds=(-1.5, -5.0, 10.5, 5.0),
    )
    return ScenarioConfig(
        name="nested-trap",
        world=world,
        start=Pose(0.0, 0.5, 0.0),
        target=Pose(8.5, 0.0, 0.0),
        description="two nested U-shaped pockets",
    )


BUNDLED = {
    "open-field": open_field,
    "corridor": corridor,
    "cluttered": cluttered,
    "office": office,
    "u-trap": u_trap,
    "nested-trap": nested_trap,
}


def load_scenario(name_or_path: str) -> ScenarioConfig:
    """A bundled scenario by name, or a scenario JSON file by path."""
    if name_or_path in BUNDLED:
        return BUNDLED[name_or_path]()
    if str(name_or_path).endswith(".json"):
        return ScenarioConfig.from_file(name_or_path)
    raise ConfigurationError(
        f"unknown scenario {name_or_path!r}; bundled: {', '.join(sorted(BUNDLED))} "
        "(or pass a .json scenario file)")
