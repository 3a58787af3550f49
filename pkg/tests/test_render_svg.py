import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from conftest import SVG_NS, svg_root, svg_texts
from diamondplot.data_io import builtin
from diamondplot.geometry import Orientation, ViewTransform
from diamondplot.render_svg import render
from diamondplot.scene import Circle, PlotConfig, Scene, build_scene

GOLDEN_DIR = Path(__file__).parent / "golden"


def empty_scene():
    return Scene(
        orientation=Orientation.DIAMOND,
        viewport=(100.0, 100.0),
        primitives=(),
        transform=ViewTransform.identity(),
        bounds1=(0.0, 1.0),
        bounds2=(0.0, 1.0),
        data_hash="0" * 64,
    )


def anscombe_scene(orientation=Orientation.DIAMOND):
    viewport = (640.0, 640.0) if orientation is Orientation.DIAMOND else (640.0, 396.0)
    return build_scene(builtin("anscombe1"), PlotConfig(orientation=orientation, viewport=viewport))


def test_empty_scene_minimal_and_deterministic():
    doc_a = render(empty_scene())
    doc_b = render(empty_scene())
    assert doc_a.content == doc_b.content
    root = svg_root(doc_a.content)
    children = list(root)
    assert len(children) == 1 and children[0].tag == f"{SVG_NS}style"


def test_circle_formatting_contract():
    scene = Scene(
        orientation=Orientation.DIAMOND,
        viewport=(100.0, 100.0),
        primitives=(Circle(10.0, 20.0, 3.0, "point"),),
        transform=ViewTransform.identity(),
        bounds1=(0.0, 1.0),
        bounds2=(0.0, 1.0),
        data_hash="0" * 64,
    )
    text = render(scene).text()
    assert 'cx="10.000" cy="20.000" r="3.000"' in text


def test_document_parses_and_viewbox_matches_pixel_size():
    doc = render(anscombe_scene(), pixel_size=(320.0, 320.0))
    root = svg_root(doc.content)  # strict parser
    assert root.get("viewBox") == "0.000 0.000 320.000 320.000"
    assert root.get("width") == "320.000"
    assert (doc.width, doc.height) == (320.0, 320.0)


def test_default_pixel_size_is_scene_viewport():
    doc = render(anscombe_scene())
    assert (doc.width, doc.height) == (640.0, 640.0)


def test_axis_text_carries_no_rotation_attribute():
    doc = render(anscombe_scene())
    for el in svg_texts(doc.content):
        cls = el.get("class", "")
        if cls == "axis-title" or cls.startswith("tick-label"):
            assert el.get("transform") is None


def test_element_order_matches_scene_order():
    scene = anscombe_scene()
    root = svg_root(render(scene).content)
    rendered = [el.tag.removeprefix(SVG_NS) for el in root if el.tag != f"{SVG_NS}style"]
    expected = [type(p).__name__.lower() for p in scene.primitives]
    assert rendered == expected


def test_render_pure_function():
    scene = anscombe_scene()
    assert render(scene).content == render(scene).content


def test_text_content_is_escaped():
    scene = build_scene(
        builtin("anscombe1"),
        PlotConfig(title1="a < b & c", title2="d>e"),
    )
    content = render(scene).content
    assert b"a &lt; b &amp; c" in content
    ET.fromstring(content.decode())  # still well-formed


def test_no_negative_zero_in_output():
    assert b'"-0.000"' not in render(anscombe_scene()).content


GOLDEN_CASES = [
    ("anscombe1_diamond.svg", Orientation.DIAMOND),
    ("anscombe1_scatter.svg", Orientation.SCATTER_V1H),
    ("anscombe1_scatter_swapped.svg", Orientation.SCATTER_V2H),
]


@pytest.mark.parametrize("filename,orientation", GOLDEN_CASES)
def test_golden_files(filename, orientation):
    golden = (GOLDEN_DIR / filename).read_bytes()
    assert render(anscombe_scene(orientation)).content == golden
