from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from fractions import Fraction
from pathlib import Path

import pytest

from hexphi.construction import build_cluster, make_report
from hexphi.render import RenderOptions, render_svg
from hexphi.tessellation import HexIndex, VertexRef

GOLDEN = Path(__file__).parent / "data" / "cluster_default.svg"

NUMERIC_ATTRS = {
    "width", "height", "viewBox", "x", "y", "x1", "y1", "x2", "y2",
    "cx", "cy", "r", "points", "stroke-width", "font-size", "transform",
}
NUMBER = re.compile(r"-?\d+(?:\.\d+)?")


def _default_svg() -> str:
    cluster = build_cluster(VertexRef(HexIndex(0, 0), 0))
    return render_svg(make_report(cluster), cluster)


def _tags(svg: str) -> list[str]:
    root = ET.fromstring(svg)
    return [element.tag.rsplit("}", 1)[-1] for element in root.iter()]


def test_output_is_well_formed_svg11():
    root = ET.fromstring(_default_svg())
    assert root.tag == "{http://www.w3.org/2000/svg}svg"
    assert root.get("version") == "1.1"
    assert len(root.get("viewBox").split()) == 4


def test_element_counts():
    tags = _tags(_default_svg())
    assert tags.count("polygon") == 3
    assert tags.count("circle") == 9
    assert tags.count("rect") == 13
    assert tags.count("text") == 13


def test_segment_lines_and_carriers():
    root = ET.fromstring(_default_svg())
    namespace = "{http://www.w3.org/2000/svg}"
    groups = {g.get("id"): g for g in root.iter(f"{namespace}g") if g.get("id")}
    assert len(groups["phi-segments"].findall(f"{namespace}line")) == 6
    assert len(groups["tangent-lines"].findall(f"{namespace}line")) == 3
    expected_order = [
        "hexagons", "small-circles", "middle-circles", "large-circles",
        "tangent-lines", "phi-segments", "markers", "labels",
    ]
    assert [gid for gid in (g.get("id") for g in root.iter(f"{namespace}g")) if gid] == expected_order


def test_labels_can_be_disabled():
    cluster = build_cluster(VertexRef(HexIndex(0, 0), 0))
    svg = render_svg(make_report(cluster), cluster, RenderOptions(show_labels=False))
    assert _tags(svg).count("text") == 0
    assert _tags(svg).count("rect") == 13


def test_label_texts():
    root = ET.fromstring(_default_svg())
    texts = {t.text for t in root.iter("{http://www.w3.org/2000/svg}text")}
    assert texts == {"O"} | {f"A{k}" for k in range(1, 7)} | {f"B{k}" for k in range(1, 7)}


def test_every_numeric_attribute_has_exact_digits():
    for digits in (3, 12):
        cluster = build_cluster(VertexRef(HexIndex(0, 0), 0))
        svg = render_svg(make_report(cluster), cluster, RenderOptions(frac_digits=digits))
        for element in ET.fromstring(svg).iter():
            for attr, value in element.attrib.items():
                if attr not in NUMERIC_ATTRS:
                    continue
                numbers = NUMBER.findall(value)
                assert numbers, (attr, value)
                for token in numbers:
                    whole, _, frac = token.partition(".")
                    assert len(frac) == digits, (attr, token)


def test_byte_determinism_across_runs():
    assert _default_svg() == _default_svg()
    cluster = build_cluster(VertexRef(HexIndex(1, -1), 2), Fraction(3, 2))
    first = render_svg(make_report(cluster), cluster)
    second = render_svg(make_report(cluster), cluster)
    assert first == second


def test_matches_golden_file():
    assert _default_svg() == GOLDEN.read_text(encoding="utf-8")


def test_view_box_covers_large_circles_with_margin():
    root = ET.fromstring(_default_svg())
    x, y, w, h = (float(v) for v in root.get("viewBox").split())
    # large circles at side 1 span x in [-2, 3.5], y in [-sqrt3/2-2, sqrt3/2+2]
    sqrt3 = 3.0 ** 0.5
    assert x == pytest.approx(-2 - 5.5 / 20)
    assert w == pytest.approx(5.5 * 1.1)
    assert y == pytest.approx(-(sqrt3 / 2 + 2) - (sqrt3 + 4) / 20)
    assert h == pytest.approx((sqrt3 + 4) * 1.1)


def test_mismatched_report_and_cluster_rejected():
    cluster = build_cluster(VertexRef(HexIndex(0, 0), 0))
    other = build_cluster(VertexRef(HexIndex(1, 0), 2))
    with pytest.raises(ValueError):
        render_svg(make_report(other), cluster)


def test_options_validation():
    with pytest.raises(ValueError):
        RenderOptions(frac_digits=0)
    with pytest.raises(ValueError):
        RenderOptions(canvas_scale=Fraction(0))
    with pytest.raises(TypeError):
        RenderOptions(segment_stroke=0.5)
    with pytest.raises(ValueError):
        RenderOptions(tangent_stroke=Fraction(-1, 10))
