"""Trace CSV round-trip.

Floats are written with shortest round-trip repr, so a trace read back from
disk reproduces the in-memory values bit-for-bit; header comment lines carry
the episode metadata (outcome, dt, target, stop radius).
"""

from __future__ import annotations

from pathlib import Path

from .behaviors import NavInputs
from .errors import ValidationError
from .fusion import VelocityCommand
from .sim import Pose, StepRecord, TrajectoryTrace

COLUMNS = ("step", "t", "x", "y", "theta", "d_l", "d_f", "d_r", "alpha",
           "rho", "e_d", "u", "omega", "H_LM", "H_OA", "H_GR")


def _fmt(value: float) -> str:
    return repr(float(value))


def trace_to_csv(trace: TrajectoryTrace) -> str:
    lines = [
        "# bbfm-trace v1",
        f"# outcome={trace.outcome}",
        f"# dt={_fmt(trace.dt)}",
        f"# target={_fmt(trace.target.x)},{_fmt(trace.target.y)},{_fmt(trace.target.theta)}",
        f"# stop_radius={_fmt(trace.stop_radius)}",
        ",".join(COLUMNS),
    ]
    for row in trace.rows:
        nav = row.nav
        values = (row.t, row.pose.x, row.pose.y, row.pose.theta,
                  nav.d_l, nav.d_f, nav.d_r, nav.alpha, nav.rho, nav.e_d,
                  row.command.u, row.command.omega, *row.strengths)
        lines.append(",".join([str(row.step)] + [_fmt(v) for v in values]))
    return "\n".join(lines) + "\n"


def write_trace(trace: TrajectoryTrace, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(trace_to_csv(trace))
    return path


def read_trace(path: str | Path) -> TrajectoryTrace:
    """Rebuild a trace from a CSV file written by `write_trace`."""
    meta: dict[str, str] = {}
    rows: list[StepRecord] = []
    header_seen = False
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line.lstrip("# ")
            if "=" in body:
                key, _, value = body.partition("=")
                meta[key.strip()] = value.strip()
            continue
        if not header_seen:
            if tuple(line.split(",")) != COLUMNS:
                raise ValidationError(f"unexpected trace header: {line!r}")
            header_seen = True
            continue
        parts = line.split(",")
        if len(parts) != len(COLUMNS):
            raise ValidationError(f"malformed trace row: {line!r}")
        step = int(parts[0])
        (t, x, y, theta, d_l, d_f, d_r, alpha, rho, e_d,
         u, omega, h_lm, h_oa, h_gr) = map(float, parts[1:])
        rows.append(StepRecord(
            step=step, t=t, pose=Pose(x, y, theta),
            nav=NavInputs(d_l=d_l, d_f=d_f, d_r=d_r, alpha=alpha, rho=rho, e_d=e_d),
            command=VelocityCommand(u, omega),
            strengths=(h_lm, h_oa, h_gr),
        ))
    if not rows:
        raise ValidationError(f"trace {path} has no rows")
    for key in ("outcome", "dt", "target", "stop_radius"):
        if key not in meta:
            raise ValidationError(f"trace {path} is missing metadata {key!r}")
    tx, ty, ttheta = map(float, meta["target"].split(","))
    return TrajectoryTrace(
        rows=rows,
        outcome=meta["outcome"],
        dt=float(meta["dt"]),
        target=Pose(tx, ty, ttheta),
        stop_radius=float(meta["stop_radius"]),
    )
