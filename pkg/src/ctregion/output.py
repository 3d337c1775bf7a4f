"""CSV, JSON and SVG writers. Every writer is deterministic for identical input."""

from __future__ import annotations

import csv
import io
import json
import math

from .blockpower import BlockPowerTrace
from .regions import BoundaryCurve

SCHEMA_VERSION = 1
_FMT = "%.12g"


def ray_extent(curve: BoundaryCurve) -> float:
    """Length of the drawn rays: twice the larger side of the boundary's bounding box."""
    (x0, y0), (x1, y1) = curve.bbox()
    ext = 2.0 * max(x1 - x0, y1 - y0)
    return ext if ext > 0 else 2.0 * max(x1, y1)


def boundary_rows(curve: BoundaryCurve):
    """``(segment, d1, d2)`` rows: vray, curve1, diag, curve2, hray in that order."""
    ext = ray_extent(curve)
    b, c, a = curve.d_b, curve.d_c, curve.d_a
    rows = [("vray", b.d1, b.d2), ("vray", b.d1, b.d2 + ext)]
    rows += [("curve1", p.d1, p.d2) for p in curve.curve1]
    rows += [("diag", c.d1, c.d2), ("diag", c.d1 + ext, c.d2 + ext)]
    rows += [("curve2", p.d1, p.d2) for p in curve.curve2]
    rows += [("hray", a.d1, a.d2), ("hray", a.d1 + ext, a.d2)]
    return rows


def _csv_text(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([x if isinstance(x, str) else _FMT % x for x in row])
    return buf.getvalue()


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def emit_boundary_csv(curve: BoundaryCurve, path) -> None:
    _write(path, _csv_text(["segment", "d1", "d2"], boundary_rows(curve)))


def read_boundary_csv(path):
    with open(path, encoding="utf-8", newline="") as fh:
        return [(r["segment"], float(r["d1"]), float(r["d2"])) for r in csv.DictReader(fh)]


def block_rows(trace: BlockPowerTrace):
    return [(c, d.d1, d.d2, s.p_first, s.p_second, s.fraction)
            for c, d, s in zip(trace.c_grid, trace.points, trace.splits)]


def emit_block_csv(trace: BlockPowerTrace, path) -> None:
    header = ["c", "d1", "d2", "p_first", "p_second", "fraction"]
    _write(path, _csv_text(header, block_rows(trace)))


def _clean(obj):
    # JSON cannot carry inf/nan; floats are rounded through the CSV format for stability
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return None
        return float(_FMT % obj)
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def emit_json(payload: dict, path) -> None:
    body = {"spec": SCHEMA_VERSION}
    body.update(payload)
    _write(path, json.dumps(_clean(body), sort_keys=True, indent=2) + "\n")


# ---------------------------------------------------------------------------
# SVG

_W, _H = 800, 600
_COLORS = ("#1f4e9a", "#b43c1e", "#2e7d32", "#6a1b9a")


class _Frame:
    def __init__(self, xs, ys):
        x0, x1 = min(xs), max(xs)
        y0, y1 = min(ys), max(ys)
        dx = (x1 - x0) or 1.0
        dy = (y1 - y0) or 1.0
        self.x0, self.x1 = x0 - 0.1 * dx, x1 + 0.1 * dx
        self.y0, self.y1 = y0 - 0.1 * dy, y1 + 0.1 * dy
        self.px0, self.px1 = 70.0, _W - 20.0
        self.py0, self.py1 = _H - 50.0, 20.0

    def sx(self, x):
        return self.px0 + (x - self.x0) / (self.x1 - self.x0) * (self.px1 - self.px0)

    def sy(self, y):
        return self.py0 + (y - self.y0) / (self.y1 - self.y0) * (self.py1 - self.py0)


def _polyline(frame, pts, color, dashed):
    coords = " ".join(f"{frame.sx(x):.3f},{frame.sy(y):.3f}" for x, y in pts)
    dash = ' stroke-dasharray="8 5"' if dashed else ""
    return f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="2"{dash}/>'


def _axes(frame, xlabel, ylabel):
    out = [
        f'<rect x="{frame.px0:.3f}" y="{frame.py1:.3f}" width="{frame.px1 - frame.px0:.3f}" '
        f'height="{frame.py0 - frame.py1:.3f}" fill="none" stroke="#444" stroke-width="1"/>',
    ]
    for i in range(6):
        x = frame.x0 + i * (frame.x1 - frame.x0) / 5
        y = frame.y0 + i * (frame.y1 - frame.y0) / 5
        out.append(f'<text x="{frame.sx(x):.3f}" y="{frame.py0 + 18:.3f}" font-size="12" '
                   f'text-anchor="middle">{x:.3g}</text>')
        out.append(f'<text x="{frame.px0 - 6:.3f}" y="{frame.sy(y) + 4:.3f}" font-size="12" '
                   f'text-anchor="end">{y:.3g}</text>')
    out.append(f'<text x="{(frame.px0 + frame.px1) / 2:.3f}" y="{_H - 10}" font-size="14" '
               f'text-anchor="middle">{xlabel}</text>')
    out.append(f'<text x="18" y="{(frame.py0 + frame.py1) / 2:.3f}" font-size="14" text-anchor="middle" '
               f'transform="rotate(-90 18 {(frame.py0 + frame.py1) / 2:.3f})">{ylabel}</text>')
    return out


def _clip_to(frame, pts):
    # rays are long; clamp them to the plotted window so the picture stays tidy
    return [(min(x, frame.x1), min(y, frame.y1)) for x, y in pts]


def render_svg(series, xlabel="d1", ylabel="d2") -> str:
    """SVG text for ``series``: a list of ``(points, dashed)`` tuples.

    Axis limits come from the first series' finite extent plus a 10% margin.
    """
    xs = [x for pts, _ in series for x, _ in pts]
    ys = [y for pts, _ in series for _, y in pts]
    frame = _Frame(xs, ys)
    body = _axes(frame, xlabel, ylabel)
    for k, (pts, dashed) in enumerate(series):
        body.append(_polyline(frame, _clip_to(frame, pts), _COLORS[k % len(_COLORS)], dashed))
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_W} {_H}" '
            f'width="{_W}" height="{_H}">')
    return "\n".join([head, '<rect width="100%" height="100%" fill="white"/>', *body, "</svg>"]) + "\n"


def curve_outline(curve: BoundaryCurve, reach: float = 0.25):
    """Boundary as one polyline with short ray stubs (``reach`` times the bbox size)."""
    (x0, y0), (x1, y1) = curve.bbox()
    ext = reach * max(x1 - x0, y1 - y0, 1e-12)
    b, a = curve.d_b, curve.d_a
    pts = [(b.d1, b.d2 + ext)] + [(p.d1, p.d2) for p in curve.curve_samples] + [(a.d1 + ext, a.d2)]
    c = curve.d_c
    return pts, [(c.d1, c.d2), (c.d1 + ext, c.d2 + ext)]


def emit_region_svg(curves, path) -> None:
    """``curves``: list of ``(BoundaryCurve, dashed)``; diagonal rays drawn thin and dashed."""
    series = []
    for curve, dashed in curves:
        outline, diag = curve_outline(curve)
        series.append((outline, dashed))
        series.append((diag, True))
    _write(path, render_svg(series))


def emit_block_svg(trace: BlockPowerTrace, per_symbol: BoundaryCurve, path) -> None:
    """Block-power trace solid, per-symbol boundary dashed."""
    outline, _ = curve_outline(per_symbol)
    (x0, y0), (x1, y1) = per_symbol.bbox()
    ext = 0.25 * max(x1 - x0, y1 - y0, 1e-12)
    b, a = trace.vertical_origin, trace.horizontal_origin
    pts = [(b.d1, b.d2 + ext)] + [(p.d1, p.d2) for p in trace.points] + [(a.d1 + ext, a.d2)]
    _write(path, render_svg([(pts, False), (outline, True)]))
