import math
import re
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from arspace.derived import DObject, parse_dobject
from arspace.geometry import HALF_PI, LambdaKey, Sign, extension_rectangle
from arspace.quiver import ext
from arspace.render import MARGIN, SCALE, HomRegion, LambdaGraph, Rectangle, Scene, default_window, render_svg

from conftest import I, Q

GOLDEN = Path(__file__).parent / "golden"
NS = "{http://www.w3.org/2000/svg}"


def marked_scene():
    q = Q([0])
    return Scene(q, [(parse_dobject("(-1,1)"), "(-1,1)")])


def rectangle_scene():
    q = Q([0])
    rect = extension_rectangle(q, I("[0,1]"), I("[0.5,2]"))
    return Scene(q, overlays=[Rectangle(rect)])


def _to_scene(scene, x, y):
    x0 = (scene.window or default_window(scene))[0]
    return MARGIN + (x - x0) * SCALE, MARGIN + (HALF_PI - y) * SCALE


def test_empty_scene_draws_frame_only():
    root = ET.fromstring(render_svg(Scene(Q([0]))))
    groups = [g.get("class") for g in root.findall(NS + "g")]
    assert groups == ["strip", "projectives", "marks"]
    assert len(root.find(NS + "g[@class='marks']")) == 0


def test_mark_lands_on_its_image():
    scene = marked_scene()
    root = ET.fromstring(render_svg(scene))
    (dot,) = root.iter(NS + "circle")
    cx, cy = _to_scene(scene, HALF_PI, 0)
    assert (dot.get("cx"), dot.get("cy")) == ("%.6f" % cx, "%.6f" % cy)
    (label,) = root.iter(NS + "text")
    assert label.text == "(-1,1) [1]"


def test_rectangle_has_four_corners_and_edges():
    root = ET.fromstring(render_svg(rectangle_scene()))
    g = root.find(NS + "g[@class='rectangle']")
    assert len(g.findall(NS + "circle")) == 4
    d = g.find(NS + "path").get("d")
    assert d.count("L") == 3 and d.endswith("Z")


def test_lambda_graph_is_dashed_tent():
    q = Q([0])
    svg = render_svg(Scene(q, overlays=[LambdaGraph(LambdaKey(ext(0), Sign.MINUS))], window=(-1.0, 7.0)))
    root = ET.fromstring(svg)
    path = root.find(NS + "g[@class='lambda']/" + NS + "path")
    assert path.get("stroke-dasharray")
    ys = {float(v) for v in re.findall(r"[ML][-\d.]+ ([-\d.]+)", path.get("d"))}
    top, bottom = MARGIN, MARGIN + math.pi * SCALE
    assert {round(top, 6), round(bottom, 6)} <= {round(v, 6) for v in ys}
    assert all(top - 1e-6 <= v <= bottom + 1e-6 for v in ys)


def test_hom_region_overlay():
    q = Q([0])
    root = ET.fromstring(render_svg(Scene(q, overlays=[HomRegion(DObject(I("[0,1]")))])))
    d = root.find(NS + "g[@class='hom-region']/" + NS + "path").get("d")
    assert d.count("L") == 3


def test_coordinates_have_six_decimals():
    svg = render_svg(rectangle_scene())
    for num in re.findall(r' (?:cx|cy|x|y|r|width|height)="([^"]+)"', svg):
        assert re.fullmatch(r"-?\d+\.\d{6}", num)


@pytest.mark.parametrize("name,build", [("q1_marked.svg", marked_scene), ("q1_rectangle.svg", rectangle_scene)])
def test_golden(name, build):
    first, second = render_svg(build()), render_svg(build())
    assert first == second
    assert first == (GOLDEN / name).read_text()
