"""Self-contained SVG plotting for episode artifacts: path over the obstacle
map plus u/omega time series.  No plotting dependency."""

from __future__ import annotations

import math
from pathlib import Path

from .sim import TrajectoryTrace, World

_W = 720
_MAP_H = 460
_TS_H = 180
_PAD = 40


def _map_bounds(trace: TrajectoryTrace, world: World):
    xs = [r.pose.x for r in trace.rows] + [trace.target.x]
    ys = [r.pose.y for r in trace.rows] + [trace.target.y]
    if world.bounds is not None:
        x0, y0, x1, y1 = world.bounds
        xs += [x0, x1]
        ys += [y0, y1]
    for seg in world.segments:
        xs += [seg[0][0], seg[1][0]]
        ys += [seg[0][1], seg[1][1]]
    x0, x1 = min(xs) - 0.5, max(xs) + 0.5
    y0, y1 = min(ys) - 0.5, max(ys) + 0.5
    return x0, y0, x1, y1


def _polyline(points, stroke, width="2", dash=None, opacity="1"):
    pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
    extra = f' stroke-dasharray="{dash}"' if dash else ""
    return (f'<polyline points="{pts}" fill="none" stroke="{stroke}" '
            f'stroke-width="{width}" opacity="{opacity}"{extra}/>')


def render_svg(trace: TrajectoryTrace, world: World, title: str = "") -> str:
    x0, y0, x1, y1 = _map_bounds(trace, world)
    span = max(x1 - x0, 1e-9)
    scale = (_W - 2 * _PAD) / span
    map_h = max(int((y1 - y0) * scale) + 2 * _PAD, 160)

    def mx(x):
        return _PAD + (x - x0) * scale

    def my(y):
        return map_h - _PAD - (y - y0) * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" '
        f'height="{map_h + _TS_H}" font-family="sans-serif" font-size="12">',
        f'<rect width="{_W}" height="{map_h + _TS_H}" fill="white"/>',
    ]
    if title:
        parts.append(f'<text x="{_PAD}" y="18" font-size="14">{title}</text>')
    for seg in world.segments:
        parts.append(_polyline([(mx(seg[0][0]), my(seg[0][1])),
                                (mx(seg[1][0]), my(seg[1][1]))], "#333", "3"))
    path = [(mx(r.pose.x), my(r.pose.y)) for r in trace.rows]
    if len(path) > 1:
        parts.append(_polyline(path, "#1f77b4"))
    sx, sy = path[0]
    parts.append(f'<circle cx="{sx:.2f}" cy="{sy:.2f}" r="5" fill="#2ca02c"/>')
    tx, ty = mx(trace.target.x), my(trace.target.y)
    r = max(trace.stop_radius * scale, 3.0)
    parts.append(f'<circle cx="{tx:.2f}" cy="{ty:.2f}" r="{r:.2f}" fill="none" stroke="#d62728"/>')
    parts.append(_polyline([(tx - 6, ty), (tx + 6, ty)], "#d62728"))
    parts.append(_polyline([(tx, ty - 6), (tx, ty + 6)], "#d62728"))
    parts.append(f'<text x="{_PAD}" y="{map_h - 12}">outcome: {trace.outcome}</text>')

    # velocity panel
    top = map_h + 10
    ts = [r.t for r in trace.rows]
    t_span = max(ts[-1], 1e-9)
    us = [r.command.u for r in trace.rows]
    ws = [r.command.omega for r in trace.rows]
    v_lo = min(min(ws), 0.0) - 0.2
    v_hi = max(max(us), max(ws), 0.1) + 0.2

    def px(t):
        return _PAD + t / t_span * (_W - 2 * _PAD)

    def py(v):
        return top + _TS_H - 30 - (v - v_lo) / (v_hi - v_lo) * (_TS_H - 50)

    parts.append(_polyline([(px(0), py(0)), (px(t_span), py(0))], "#aaa", "1", dash="4 3"))
    parts.append(_polyline([(px(t), py(u)) for t, u in zip(ts, us)], "#1f77b4"))
    parts.append(_polyline([(px(t), py(w)) for t, w in zip(ts, ws)], "#ff7f0e"))
    parts.append(f'<text x="{_PAD}" y="{top + 12}" fill="#1f77b4">u [m/s]</text>')
    parts.append(f'<text x="{_PAD + 70}" y="{top + 12}" fill="#ff7f0e">omega [rad/s]</text>')
    parts.append(f'<text x="{_W - _PAD - 60}" y="{top + _TS_H - 12}">t = {ts[-1]:.1f} s</text>')
    parts.append("</svg>")
    return "\n".join(parts)


def write_svg(trace: TrajectoryTrace, world: World, path: str | Path, title: str = "") -> Path:
    path = Path(path)
    path.write_text(render_svg(trace, world, title))
    return path
