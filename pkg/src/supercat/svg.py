"""Static SVG diagrams of bijection traces: one panel per surgery step.

Panel 1 shows the intermediate path F = F1·F2 with the F1/F2 boundary and the
marked points u, v', x, y; panel 2 shows the output Dyck path with x and the
lowered point y'.  Geometry and colors are fixed constants, so the output is
byte-identical for a given trace.
"""

from __future__ import annotations

from .bijection import BijectionTrace
from .lattice_paths import Path

UNIT = 28
MARGIN = 46
TITLE_SPACE = 26
GRID_COLOR = "#dddddd"
BASELINE_COLOR = "#888888"
PATH_COLORS = ("#1f5fbf", "#bf3f2f")
BOUNDARY_COLOR = "#777777"
MARKER_COLOR = "#111111"
MARKER_RADIUS = 4


def _panel(path: Path, markers: dict[str, int], boundary: int | None,
           title: str, color: str, y_top: int) -> tuple[list[str], int, int]:
    """Render one path panel at vertical offset y_top.

    Returns (svg elements, width, height).
    """
    top = path.height
    width = 2 * MARGIN + len(path) * UNIT
    height = TITLE_SPACE + top * UNIT + MARGIN

    def px(i: int) -> int:
        return MARGIN + i * UNIT

    def py(level: int) -> int:
        return y_top + TITLE_SPACE + (top - level) * UNIT

    parts = [f'<text x="{MARGIN}" y="{y_top + 18}" font-size="14" '
             f'font-family="monospace">{title}</text>']
    for level in range(top + 1):
        stroke = BASELINE_COLOR if level == 0 else GRID_COLOR
        parts.append(f'<line x1="{px(0)}" y1="{py(level)}" x2="{px(len(path))}" '
                     f'y2="{py(level)}" stroke="{stroke}" stroke-width="1"/>')
    for i in range(len(path) + 1):
        parts.append(f'<line x1="{px(i)}" y1="{py(top)}" x2="{px(i)}" '
                     f'y2="{py(0)}" stroke="{GRID_COLOR}" stroke-width="1"/>')
    if boundary is not None:
        parts.append(f'<line x1="{px(boundary)}" y1="{py(top) - 10}" '
                     f'x2="{px(boundary)}" y2="{py(0) + 10}" '
                     f'stroke="{BOUNDARY_COLOR}" stroke-width="1" '
                     'stroke-dasharray="5,3"/>')
    points = " ".join(f"{px(i)},{py(level)}" for i, level in enumerate(path.levels))
    parts.append(f'<polyline points="{points}" fill="none" stroke="{color}" '
                 'stroke-width="2"/>')

    by_index: dict[int, list[str]] = {}
    for label, index in markers.items():
        by_index.setdefault(index, []).append(label)
    for index in sorted(by_index):
        label = ", ".join(by_index[index])
        cx, cy = px(index), py(path.levels[index])
        parts.append(f'<circle cx="{cx}" cy="{cy}" r="{MARKER_RADIUS}" '
                     f'fill="{MARKER_COLOR}"/>')
        parts.append(f'<text x="{cx + 7}" y="{cy - 7}" font-size="13" '
                     f'font-family="monospace">{label}</text>')
    return parts, width, height


def render_trace(trace: BijectionTrace) -> str:
    """Two-panel SVG document for one application of the pair-to-path map."""
    panel1, w1, h1 = _panel(
        trace.intermediate.path,
        {"u": trace.u, "v'": trace.v_prime, "x": trace.x, "y": trace.y},
        trace.intermediate.boundary,
        "surgery 1: F = F1 F2 (dashed line marks the F1/F2 boundary)",
        PATH_COLORS[0],
        0,
    )
    panel2, w2, h2 = _panel(
        trace.output,
        {"x": trace.x, "y'": trace.y_prime},
        None,
        "surgery 2: the step into y is flipped and the tail drops two levels",
        PATH_COLORS[1],
        h1,
    )
    width = max(w1, w2)
    height = h1 + h2
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
             f'height="{height}" viewBox="0 0 {width} {height}">']
    parts.extend(panel1)
    parts.extend(panel2)
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
