"""Scene construction: dataset + config -> resolution-independent primitives.

A Scene is an ordered list of lines, circles and text anchors in screen
coordinates, together with the transform and data bounds that produced it.
Axis titles and tick labels are always horizontal (rotation 0), in every
orientation; in the diamond orientation the tick labels hang off the two
lower edges and the titles sit on a shared baseline flanking the bottom
vertex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Iterable, Union

from .data_io import DataSet, dataset_hash
from .errors import InconsistentBundle, InvalidRange
from .geometry import (
    SQRT1_2,
    Margins,
    NormalizedDataSet,
    Orientation,
    Point2,
    ViewTransform,
    format_tick,
    make_transform,
    normalize,
    tick_positions,
)
from .stats import SummaryStats

# Offsets in drawing units; anchor-based placement only (no font metrics).
TICK_LABEL_OFFSET = 14.0
TICK_BASELINE_NUDGE = 4.0
SCATTER_TICK_DY = 16.0
SCATTER_TICK_DX = 8.0
SCATTER_TITLE_DY = 38.0
SCATTER_VTITLE_DY = 12.0
DIAMOND_TITLE_DY = 34.0
DIAMOND_TITLE_GAP = 14.0


@dataclass(frozen=True)
class Line:
    x1: float
    y1: float
    x2: float
    y2: float
    cls: str


@dataclass(frozen=True)
class Circle:
    cx: float
    cy: float
    r: float
    cls: str


@dataclass(frozen=True)
class Text:
    x: float
    y: float
    text: str
    anchor: str  # "start" | "middle" | "end"
    rotation: float
    cls: str


Primitive = Union[Line, Circle, Text]


@dataclass(frozen=True)
class PlotConfig:
    """Layout parameters; None fields resolve per orientation."""

    orientation: Orientation = Orientation.DIAMOND
    viewport: tuple[float, float] = (640.0, 640.0)
    margins: Margins | None = None
    title1: str | None = None  # None -> dataset label
    title2: str | None = None
    grid: bool | None = None  # None -> on for DIAMOND, off for scatter
    tick_target: int = 5
    point_radius: float = 3.0
    padding: float = 0.05

    def grid_enabled(self) -> bool:
        if self.grid is None:
            return self.orientation is Orientation.DIAMOND
        return self.grid


@dataclass(frozen=True)
class Scene:
    orientation: Orientation
    viewport: tuple[float, float]
    primitives: tuple[Primitive, ...]
    transform: ViewTransform
    bounds1: tuple[float, float]  # data units at normalized 0 and 1
    bounds2: tuple[float, float]
    data_hash: str


def _axis_ticks(norm: NormalizedDataSet, axis: int, target: int) -> list[tuple[float, float]]:
    """(data value, normalized coordinate) pairs; empty for a flat axis."""
    lo, hi = norm.padded_bounds(axis)
    if hi <= lo:
        return []
    try:
        ticks = tick_positions(lo, hi, target)
    except InvalidRange:
        return []  # span beyond float tick placement: draw points, skip grid
    span = hi - lo
    # The clamp only ever moves a coordinate by float fuzz; it keeps
    # gridlines inside the drawing region for pathological data scales.
    return [(v, min(1.0, max(0.0, (v - lo) / span))) for v in ticks]


def build_scene(data: DataSet, config: PlotConfig) -> Scene:
    """Lay out one dataset in one orientation."""
    norm = normalize(data, config.padding)
    transform = make_transform(config.orientation, config.viewport, config.margins)
    title1 = config.title1 if config.title1 is not None else data.label1
    title2 = config.title2 if config.title2 is not None else data.label2

    ticks1 = _axis_ticks(norm, 1, config.tick_target)
    ticks2 = _axis_ticks(norm, 2, config.tick_target)

    def at(n1: float, n2: float) -> Point2:
        return transform.apply(Point2(n1, n2))

    prims: list[Primitive] = []

    if config.orientation is Orientation.DIAMOND:
        if config.grid_enabled():
            for _, n1 in ticks1:
                p, q = at(n1, 0.0), at(n1, 1.0)
                prims.append(Line(p.a1, p.a2, q.a1, q.a2, "gridline-a1"))
            for _, n2 in ticks2:
                p, q = at(0.0, n2), at(1.0, n2)
                prims.append(Line(p.a1, p.a2, q.a1, q.a2, "gridline-a2"))
        # Axis borders: the diamond's lower-right edge is the a1 axis,
        # the lower-left edge the a2 axis.
        b, r, l = at(0.0, 0.0), at(1.0, 0.0), at(0.0, 1.0)
        prims.append(Line(b.a1, b.a2, r.a1, r.a2, "axis-line"))
        prims.append(Line(b.a1, b.a2, l.a1, l.a2, "axis-line"))
        # Tick labels outside the lower edges, offset along the outward
        # normal, kept horizontal.
        off = TICK_LABEL_OFFSET * SQRT1_2
        for v, n1 in ticks1:
            p = at(n1, 0.0)
            prims.append(
                Text(p.a1 + off, p.a2 + off + TICK_BASELINE_NUDGE,
                     format_tick(v), "start", 0.0, "tick-label-a1")
            )
        for v, n2 in ticks2:
            p = at(0.0, n2)
            prims.append(
                Text(p.a1 - off, p.a2 + off + TICK_BASELINE_NUDGE,
                     format_tick(v), "end", 0.0, "tick-label-a2")
            )
        # Titles share one baseline under the bottom vertex, variable 1 to
        # the right, variable 2 to the left: the "grounding" platform.
        ty = b.a2 + DIAMOND_TITLE_DY
        prims.append(Text(b.a1 + DIAMOND_TITLE_GAP, ty, title1, "start", 0.0, "axis-title"))
        prims.append(Text(b.a1 - DIAMOND_TITLE_GAP, ty, title2, "end", 0.0, "axis-title"))
    else:
        h_is_a1 = config.orientation is Orientation.SCATTER_V1H
        h_ticks, v_ticks = (ticks1, ticks2) if h_is_a1 else (ticks2, ticks1)
        h_cls, v_cls = ("a1", "a2") if h_is_a1 else ("a2", "a1")
        origin = at(0.0, 0.0)
        corner_h = at(1.0, 0.0) if h_is_a1 else at(0.0, 1.0)  # right end of bottom edge
        corner_v = at(0.0, 1.0) if h_is_a1 else at(1.0, 0.0)  # top end of left edge
        x0, y0 = origin.a1, origin.a2
        x1, y_top = corner_h.a1, corner_v.a2
        if config.grid_enabled():
            for _, nh in h_ticks:
                x = x0 + (x1 - x0) * nh
                prims.append(Line(x, y0, x, y_top, f"gridline-{h_cls}"))
            for _, nv in v_ticks:
                y = y0 + (y_top - y0) * nv
                prims.append(Line(x0, y, x1, y, f"gridline-{v_cls}"))
        prims.append(Line(x0, y0, x1, y0, "axis-line"))
        prims.append(Line(x0, y0, x0, y_top, "axis-line"))
        for v, nh in h_ticks:
            x = x0 + (x1 - x0) * nh
            prims.append(
                Text(x, y0 + SCATTER_TICK_DY, format_tick(v), "middle", 0.0,
                     f"tick-label-{h_cls}")
            )
        for v, nv in v_ticks:
            y = y0 + (y_top - y0) * nv
            prims.append(
                Text(x0 - SCATTER_TICK_DX, y + TICK_BASELINE_NUDGE, format_tick(v),
                     "end", 0.0, f"tick-label-{v_cls}")
            )
        h_title, v_title = (title1, title2) if h_is_a1 else (title2, title1)
        prims.append(
            Text((x0 + x1) / 2.0, y0 + SCATTER_TITLE_DY, h_title, "middle", 0.0, "axis-title")
        )
        prims.append(Text(x0, y_top - SCATTER_VTITLE_DY, v_title, "start", 0.0, "axis-title"))
        if not h_is_a1:
            # Keep primitive order keyed to variable identity: title1 first.
            prims[-1], prims[-2] = prims[-2], prims[-1]

    for p in norm.points:
        sp = transform.apply(p)
        prims.append(Circle(sp.a1, sp.a2, config.point_radius, "point"))

    return Scene(
        orientation=config.orientation,
        viewport=config.viewport,
        primitives=tuple(prims),
        transform=transform,
        bounds1=norm.padded_bounds(1),
        bounds2=norm.padded_bounds(2),
        data_hash=dataset_hash(data),
    )


_SCENE_ORDER = (Orientation.DIAMOND, Orientation.SCATTER_V1H, Orientation.SCATTER_V2H)

BUNDLE_VERSION = 1


@dataclass(frozen=True)
class SceneBundle:
    """Dataset + stats + the three scenes; the viewer's input contract."""

    version: int
    dataset: DataSet
    stats: SummaryStats
    scenes: tuple[Scene, Scene, Scene]  # diamond, scatter_v1h, scatter_v2h

    @property
    def transforms(self) -> tuple[ViewTransform, ViewTransform, ViewTransform]:
        return tuple(s.transform for s in self.scenes)  # type: ignore[return-value]


def scene_bundle(data: DataSet, stats: SummaryStats, scenes: Iterable[Scene]) -> SceneBundle:
    """Assemble and validate a bundle from one scene per orientation."""
    by_orient = {}
    for scene in scenes:
        if scene.orientation in by_orient:
            raise ValueError(f"duplicate scene for {scene.orientation.value}")
        by_orient[scene.orientation] = scene
    missing = [o.value for o in _SCENE_ORDER if o not in by_orient]
    if missing:
        raise ValueError(f"missing scenes: {', '.join(missing)}")
    expected = dataset_hash(data)
    for scene in by_orient.values():
        if scene.data_hash != expected:
            raise InconsistentBundle(
                f"scene for {scene.orientation.value} was built from different data"
            )
    ordered = tuple(by_orient[o] for o in _SCENE_ORDER)
    return SceneBundle(BUNDLE_VERSION, data, stats, ordered)


def _sig6(x: float) -> float:
    """Round to 6 significant decimals; normalizes -0.0 away."""
    v = float(f"{x:.6g}")
    return 0.0 if v == 0.0 else v


def _primitive_dict(p: Primitive) -> dict:
    if isinstance(p, Line):
        return {"type": "line", "x1": _sig6(p.x1), "y1": _sig6(p.y1),
                "x2": _sig6(p.x2), "y2": _sig6(p.y2), "cls": p.cls}
    if isinstance(p, Circle):
        return {"type": "circle", "cx": _sig6(p.cx), "cy": _sig6(p.cy),
                "r": _sig6(p.r), "cls": p.cls}
    return {"type": "text", "x": _sig6(p.x), "y": _sig6(p.y), "text": p.text,
            "anchor": p.anchor, "rotation": _sig6(p.rotation), "cls": p.cls}


def _transform_list(t: ViewTransform) -> list[float]:
    return [_sig6(t.a), _sig6(t.b), _sig6(t.c), _sig6(t.d), _sig6(t.e), _sig6(t.f)]


def _scene_dict(s: Scene) -> dict:
    return {
        "orientation": s.orientation.value,
        "viewport": [_sig6(s.viewport[0]), _sig6(s.viewport[1])],
        "bounds1": [_sig6(s.bounds1[0]), _sig6(s.bounds1[1])],
        "bounds2": [_sig6(s.bounds2[0]), _sig6(s.bounds2[1])],
        "data_hash": s.data_hash,
        "primitives": [_primitive_dict(p) for p in s.primitives],
    }


def bundle_to_json(bundle: SceneBundle) -> bytes:
    """Serialize with fixed field order and 6-significant-digit numbers."""
    stats = bundle.stats.to_dict()
    doc = {
        "version": bundle.version,
        "dataset": {
            "label1": bundle.dataset.label1,
            "label2": bundle.dataset.label2,
            "source": bundle.dataset.source,
            "points": [[_sig6(p.a1), _sig6(p.a2)] for p in bundle.dataset.values],
        },
        "stats": {k: (v if isinstance(v, int) or v is None else _sig6(v))
                  for k, v in stats.items()},
        "scenes": [_scene_dict(s) for s in bundle.scenes],
        "transforms": [_transform_list(t) for t in bundle.transforms],
    }
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False).encode("utf-8")


def _primitive_from(d: dict) -> Primitive:
    kind = d["type"]
    if kind == "line":
        return Line(d["x1"], d["y1"], d["x2"], d["y2"], d["cls"])
    if kind == "circle":
        return Circle(d["cx"], d["cy"], d["r"], d["cls"])
    if kind == "text":
        return Text(d["x"], d["y"], d["text"], d["anchor"], d["rotation"], d["cls"])
    raise ValueError(f"unknown primitive type {kind!r}")


def bundle_from_json(raw: bytes | str) -> SceneBundle:
    """Parse a serialized bundle.

    Stored data hashes are trusted as-is: serialized values are rounded, so
    recomputing the hash from them would never match.
    """
    doc = json.loads(raw)
    version = doc.get("version")
    if version != BUNDLE_VERSION:
        raise InconsistentBundle(f"unsupported bundle version {version!r}")
    ds = doc["dataset"]
    dataset = DataSet(
        ds["label1"], ds["label2"],
        tuple(Point2(a, b) for a, b in ds["points"]),
        ds.get("source", ""),
    )
    stats = SummaryStats(**doc["stats"])
    scenes = []
    for sd, tl in zip(doc["scenes"], doc["transforms"]):
        scenes.append(
            Scene(
                orientation=Orientation(sd["orientation"]),
                viewport=(sd["viewport"][0], sd["viewport"][1]),
                primitives=tuple(_primitive_from(p) for p in sd["primitives"]),
                transform=ViewTransform(*tl),
                bounds1=(sd["bounds1"][0], sd["bounds1"][1]),
                bounds2=(sd["bounds2"][0], sd["bounds2"][1]),
                data_hash=sd["data_hash"],
            )
        )
    if len(scenes) != 3:
        raise InconsistentBundle(f"expected 3 scenes, got {len(scenes)}")
    return SceneBundle(version, dataset, stats, tuple(scenes))
