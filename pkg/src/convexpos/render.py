"""Schematic SVG drawings: wires are polylines, each crossing a unit-slope X."""
from __future__ import annotations

import xml.etree.ElementTree as ET

from convexpos.cc.wiring import WiringDiagram, simulate
from convexpos.cylinder.system import CurveSystem

UNIT = 40
MARGIN = 40
COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"]


def _schematic(perms, swaps, title: str, cyclic: bool) -> str:
    n = len(perms[0])
    cols = len(swaps)
    width = 2 * MARGIN + cols * UNIT + 2 * UNIT
    height = 2 * MARGIN + (n - 1) * UNIT
    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=str(width),
        height=str(height),
        viewBox=f"0 0 {width} {height}",
    )
    ET.SubElement(svg, "title").text = title

    def xy(col, rank):
        return MARGIN + UNIT + col * UNIT, MARGIN + (n - 1 - rank) * UNIT

    labels = sorted(perms[0], key=str)
    for i, x in enumerate(labels):
        pts = [(MARGIN, xy(0, perms[0].index(x))[1])]
        for col, perm in enumerate(perms):
            pts.append(xy(col, perm.index(x)))
        pts.append((width - MARGIN, pts[-1][1]))
        ET.SubElement(
            svg,
            "polyline",
            points=" ".join(f"{a},{b}" for a, b in pts),
            fill="none",
            stroke=COLORS[i % len(COLORS)],
            **{"stroke-width": "2", "class": "wire", "data-label": str(x)},
        )
        for side, (px, py) in (("start", pts[0]), ("end", pts[-1])):
            t = ET.SubElement(
                svg,
                "text",
                x=str(px - 6 if side == "start" else px + 6),
                y=str(py + 4),
                **{"text-anchor": "end" if side == "start" else "start", "font-size": "14"},
            )
            t.text = str(x)
    for col, (pos, pair) in enumerate(swaps):
        cx, _ = xy(col, pos)
        _, cy = xy(col, pos + 0.5)
        ET.SubElement(
            svg,
            "circle",
            cx=str(cx + UNIT / 2),
            cy=str(cy),
            r="3",
            fill="black",
            **{"class": "crossing", "data-pair": f"{pair[0]},{pair[1]}"},
        )
    if cyclic:
        for col in (0, cols):
            x0, _ = xy(col, 0)
            ET.SubElement(
                svg,
                "line",
                x1=str(x0),
                y1=str(MARGIN / 2),
                x2=str(x0),
                y2=str(height - MARGIN / 2),
                stroke="#999",
                **{"stroke-dasharray": "4 4", "class": "seam"},
            )
    ET.indent(svg)
    return ET.tostring(svg, encoding="unicode") + "\n"


def _swaps(perms):
    out = []
    for a, b in zip(perms, perms[1:]):
        i = next(k for k in range(len(a)) if a[k] != b[k])
        out.append((i, (a[i], a[i + 1])))
    return out


def render_diagram(W: WiringDiagram) -> str:
    perms = simulate(W.base, W.switches)
    return _schematic(perms, _swaps(perms), "wiring diagram", cyclic=False)


def render_system(S: CurveSystem) -> str:
    """One period of the cylinder, cut along the seam before the first event."""
    perms = [tuple(p) for p in S.permutations] + [tuple(S.base)]
    return _schematic(perms, _swaps(perms), "curve system", cyclic=True)
