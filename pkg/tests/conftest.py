"""Shared test helpers: SVG introspection and numeric comparisons."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET

import pytest

SVG_NS = "{http://www.w3.org/2000/svg}"


def svg_root(doc_bytes: bytes) -> ET.Element:
    """Parse with the strict stdlib XML parser."""
    return ET.fromstring(doc_bytes.decode("utf-8"))


def svg_circles(doc_bytes: bytes) -> list[tuple[float, float]]:
    root = svg_root(doc_bytes)
    return [
        (float(c.get("cx")), float(c.get("cy")))
        for c in root.iter(f"{SVG_NS}circle")
    ]


def svg_lines(doc_bytes: bytes, cls_prefix: str = "") -> list[tuple[float, float, float, float]]:
    root = svg_root(doc_bytes)
    out = []
    for el in root.iter(f"{SVG_NS}line"):
        if el.get("class", "").startswith(cls_prefix):
            out.append(tuple(float(el.get(k)) for k in ("x1", "y1", "x2", "y2")))
    return out


def svg_texts(doc_bytes: bytes, cls_prefix: str = "") -> list[ET.Element]:
    root = svg_root(doc_bytes)
    return [
        el for el in root.iter(f"{SVG_NS}text")
        if el.get("class", "").startswith(cls_prefix)
    ]


def pairwise_distances(points: list[tuple[float, float]]) -> list[float]:
    return [
        math.hypot(points[i][0] - points[j][0], points[i][1] - points[j][1])
        for i in range(len(points))
        for j in range(i + 1, len(points))
    ]


def assert_distances_match(
    pts_a: list[tuple[float, float]],
    pts_b: list[tuple[float, float]],
    rel: float,
    coord_quantum: float = 0.0,
) -> None:
    """Pairwise distances agree up to one global scale factor.

    ``coord_quantum`` is the absolute rounding step of the serialized
    coordinates (0.001 for three-decimal SVG output); it adds the provable
    quantization floor to the comparison: each distance normalized by its
    cloud's maximum carries at most 2 * sqrt(2) * quantum / max of noise.
    """
    da = pairwise_distances(pts_a)
    db = pairwise_distances(pts_b)
    assert len(da) == len(db) and da
    max_a, max_b = max(da), max(db)
    assert max_a > 0 and max_b > 0
    quant = math.sqrt(2.0) * coord_quantum  # per-distance, from 2 endpoints
    floor = 2.0 * quant * (1.0 / max_a + 1.0 / max_b)
    for x, y in zip(da, db):
        na, nb = x / max_a, y / max_b
        assert abs(na - nb) <= rel * max(na, nb) + rel + floor, (x, y, na, nb)
