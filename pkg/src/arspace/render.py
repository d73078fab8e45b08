"""SVG pictures of the strip: projective and injective lines, lambda graphs,
marked objects with their position glyphs, Hom cones and rectangles.

Output is deterministic: elements are emitted in a fixed order and every
coordinate is printed with six decimals.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

from .derived import DObject, TriangleResult, derived_position, gamma_b
from .geometry import (
    HALF_PI,
    LambdaKey,
    RectangleKind,
    RectangleResult,
    StripPoint,
    anchor_points,
    kappa,
)
from .quiver import QuiverSpec

SCALE = 80.0
MARGIN = 30.0


@dataclass(frozen=True)
class LambdaGraph:
    key: LambdaKey


@dataclass(frozen=True)
class HomRegion:
    obj: DObject


@dataclass(frozen=True)
class Rectangle:
    result: Union[RectangleResult, TriangleResult]
    shift: int = 0


Overlay = Union[LambdaGraph, HomRegion, Rectangle]


@dataclass
class Scene:
    quiver: QuiverSpec
    marks: List[Tuple[DObject, str]] = field(default_factory=list)
    overlays: List[Overlay] = field(default_factory=list)
    window: Optional[Tuple[float, float]] = None


def _num(v: float) -> str:
    text = "%.6f" % v
    return text[1:] if text == "-0.000000" else text


def _rect_points(q: QuiverSpec, r: Union[RectangleResult, TriangleResult], shift: int) -> List[StripPoint]:
    if isinstance(r, TriangleResult):
        objs = list(r.objects)
        if r.phantom is not None:
            objs.insert(2, r.phantom)
        return [gamma_b(q, o) for o in objs]
    objs = list(r.corners)
    if r.phantom is not None:
        objs.insert(2, r.phantom)
    return [gamma_b(q, DObject(o, shift)) for o in objs]


def _cone(p: StripPoint) -> List[StripPoint]:
    """Apex, top, far and bottom corners of the Hom cone at ``p``."""
    up = HALF_PI - p.y
    down = HALF_PI + p.y
    return [
        p,
        StripPoint(p.x + up, HALF_PI),
        StripPoint(p.x + math.pi, -p.y),
        StripPoint(p.x + down, -HALF_PI),
    ]


def default_window(scene: Scene) -> Tuple[float, float]:
    q = scene.quiver
    xs = [x for x, _ in anchor_points(q).values()]
    xs += [x + math.pi for x, _ in anchor_points(q).values()]
    for obj, _ in scene.marks:
        xs.append(gamma_b(q, obj).x)
    for ov in scene.overlays:
        if isinstance(ov, HomRegion):
            xs.extend(p.x for p in _cone(gamma_b(q, ov.obj)))
        elif isinstance(ov, Rectangle) and ov.result.kind is not RectangleKind.NONE:
            xs.extend(p.x for p in _rect_points(q, ov.result, ov.shift))
    return (min(xs) - 0.5, max(xs) + 0.5)


class _Canvas:
    def __init__(self, window: Tuple[float, float]):
        self.x0, self.x1 = window
        self.width = (self.x1 - self.x0) * SCALE + 2 * MARGIN
        self.height = math.pi * SCALE + 2 * MARGIN
        self.root = ET.Element(
            "svg",
            xmlns="http://www.w3.org/2000/svg",
            width=_num(self.width),
            height=_num(self.height),
            viewBox="0 0 %s %s" % (_num(self.width), _num(self.height)),
        )

    def xy(self, x: float, y: float) -> Tuple[str, str]:
        return _num(MARGIN + (x - self.x0) * SCALE), _num(MARGIN + (HALF_PI - y) * SCALE)

    def group(self, cls: str) -> ET.Element:
        return ET.SubElement(self.root, "g", {"class": cls})

    def path(self, parent, pts: Sequence[Tuple[float, float]], closed=False, **attrs) -> None:
        cmds = []
        for n, (x, y) in enumerate(pts):
            px, py = self.xy(x, y)
            cmds.append("%s%s %s" % ("M" if n == 0 else "L", px, py))
        if closed:
            cmds.append("Z")
        ET.SubElement(parent, "path", dict(d=" ".join(cmds), **attrs))

    def dot(self, parent, p: StripPoint, r: float = 3.0, **attrs) -> None:
        cx, cy = self.xy(p.x, p.y)
        ET.SubElement(parent, "circle", dict(cx=cx, cy=cy, r=_num(r), **attrs))

    def text(self, parent, p: StripPoint, label: str, dx: float = 5.0, dy: float = -5.0) -> None:
        cx, cy = self.xy(p.x, p.y)
        t = ET.SubElement(parent, "text", x=_num(float(cx) + dx), y=_num(float(cy) + dy))
        t.text = label


def _lambda_vertices(q: QuiverSpec, key: LambdaKey, x0: float, x1: float):
    """Corners of the tent graph over [x0, x1]: minima at kappa + 2k pi, maxima between."""
    k = kappa(q, key)
    start = math.floor((x0 - k) / math.pi) - 1
    pts = []
    n = start
    while True:
        x = k + n * math.pi
        y = -HALF_PI if n % 2 == 0 else HALF_PI
        pts.append((x, y))
        if x > x1:
            break
        n += 1
    return _clip(pts, x0, x1)


def _clip(pts, x0, x1):
    out = []
    for (ax, ay), (bx, by) in zip(pts, pts[1:]):
        if bx < x0 or ax > x1:
            continue
        if ax < x0:
            ay = ay + (by - ay) * (x0 - ax) / (bx - ax)
            ax = x0
        if bx > x1:
            by = ay + (by - ay) * (x1 - ax) / (bx - ax)
            bx = x1
        if not out:
            out.append((ax, ay))
        out.append((bx, by))
    return out


def render_svg(scene: Scene) -> str:
    q = scene.quiver
    window = scene.window or default_window(scene)
    c = _Canvas(window)
    x0, x1 = window

    frame = c.group("strip")
    for y in (HALF_PI, -HALF_PI):
        c.path(frame, [(x0, y), (x1, y)], stroke="black", fill="none")

    anchors = [anchor_points(q)[e.index] for e in q.elements]
    lines = c.group("projectives")
    c.path(lines, anchors, stroke="black", fill="none")
    c.path(lines, [(x + math.pi, -y) for x, y in anchors], stroke="gray", fill="none")

    for ov in scene.overlays:
        if isinstance(ov, LambdaGraph):
            g = c.group("lambda")
            c.path(g, _lambda_vertices(q, ov.key, x0, x1), stroke="blue", fill="none",
                   **{"stroke-dasharray": "4 3"})
        elif isinstance(ov, HomRegion):
            g = c.group("hom-region")
            cone = _cone(gamma_b(q, ov.obj))
            c.path(g, [(p.x, p.y) for p in cone], closed=True, fill="green",
                   **{"fill-opacity": "0.15", "stroke": "green"})
        elif isinstance(ov, Rectangle):
            if ov.result.kind is RectangleKind.NONE:
                continue
            g = c.group("rectangle")
            pts = _rect_points(q, ov.result, ov.shift)
            order = [pts[0], pts[1], pts[3], pts[2]]
            c.path(g, [(p.x, p.y) for p in order], closed=True, stroke="red", fill="none")
            for p in pts:
                c.dot(g, p, 4.0, fill="none", stroke="red")

    marks = c.group("marks")
    for obj, label in scene.marks:
        p = gamma_b(q, obj)
        c.dot(marks, p, fill="black")
        c.text(marks, p, "%s [%d]" % (label, int(derived_position(q, obj))))

    ET.indent(c.root)
    return ET.tostring(c.root, encoding="unicode") + "\n"
