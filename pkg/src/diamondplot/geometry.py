"""Data normalization, view transforms, and axis tick placement.

Screen coordinates follow the SVG convention: origin at the top-left of the
viewport, y growing downward.  Angles and axis directions are stated in the
"data-up" frame (y growing upward); converting between the two frames is a
sign flip on the y component.

Three orientations are supported.  All three map the normalized unit square
through a similarity (uniform scale, rotation, optional reflection), so the
relative geometry of a point cloud is identical across orientations:

* ``DIAMOND``      -- 45 degree counter-clockwise rotation; the unit square
                      becomes a diamond with (0,0) at the bottom vertex and
                      both axes increasing up the page.
* ``SCATTER_V1H``  -- variable 1 rightward, variable 2 upward.
* ``SCATTER_V2H``  -- variable 2 rightward, variable 1 upward; this is the
                      coordinate swap, i.e. a rotation combined with exactly
                      one reflection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Sequence

from .errors import EmptyData, InvalidRange, InvalidViewport, SingularTransform

if TYPE_CHECKING:  # pragma: no cover
    from .data_io import DataSet

SQRT1_2 = math.sqrt(0.5)  # cos 45 = sin 45, full float precision

#: width:height of the drawing area in the scatter orientations.
GOLDEN_ASPECT = 1.61

#: Allowed tick-step mantissas (step = m * 10**k).
NICE_MANTISSAS = (1.0, 2.0, 2.5, 5.0)


@dataclass(frozen=True, slots=True)
class Point2:
    """An observation pair.

    The fields are named ``a1``/``a2`` rather than x/y on purpose: the engine
    never treats either variable as the independent one.
    """

    a1: float
    a2: float

    def __post_init__(self) -> None:
        # Coerce so ints and floats serialize identically downstream.
        object.__setattr__(self, "a1", float(self.a1))
        object.__setattr__(self, "a2", float(self.a2))
        if not (math.isfinite(self.a1) and math.isfinite(self.a2)):
            raise ValueError(f"non-finite coordinates ({self.a1}, {self.a2})")


class Orientation(Enum):
    DIAMOND = "diamond"
    SCATTER_V1H = "scatter_v1h"
    SCATTER_V2H = "scatter_v2h"


@dataclass(frozen=True, slots=True)
class Margins:
    """Viewport margins in drawing units (top, right, bottom, left)."""

    top: float
    right: float
    bottom: float
    left: float

    @staticmethod
    def default_for(orientation: Orientation) -> "Margins":
        # Diamond labels hang off the two lower edges and the titles sit
        # below the bottom vertex, hence the tall bottom margin.  Scatter
        # needs room left of the vertical axis instead.
        if orientation is Orientation.DIAMOND:
            return Margins(30.0, 30.0, 90.0, 30.0)
        return Margins(30.0, 30.0, 60.0, 60.0)


# Exact (cos, sin) pairs for multiples of 45 degrees, so that the diamond
# rotation is one exact similarity rather than a product of approximations.
_EIGHTH_TURNS = {
    0: (1.0, 0.0),
    45: (SQRT1_2, SQRT1_2),
    90: (0.0, 1.0),
    135: (-SQRT1_2, SQRT1_2),
    180: (-1.0, 0.0),
    225: (-SQRT1_2, -SQRT1_2),
    270: (0.0, -1.0),
    315: (SQRT1_2, -SQRT1_2),
}


@dataclass(frozen=True, slots=True)
class ViewTransform:
    """Six-coefficient 2D affine map.

    Applied as ``x' = a*x + c*y + e`` and ``y' = b*x + d*y + f`` (the SVG
    ``matrix(a b c d e f)`` layout).  The transform itself is frame-agnostic;
    transforms produced by :func:`make_transform` map normalized coordinates
    to screen coordinates (y down).
    """

    a: float
    b: float
    c: float
    d: float
    e: float
    f: float

    @staticmethod
    def identity() -> "ViewTransform":
        return ViewTransform(1.0, 0.0, 0.0, 1.0, 0.0, 0.0)

    @staticmethod
    def rotation(degrees: float) -> "ViewTransform":
        """Counter-clockwise rotation in the data-up frame."""
        key = degrees % 360.0
        if key in _EIGHTH_TURNS:
            cos_t, sin_t = _EIGHTH_TURNS[key]
        else:
            rad = math.radians(degrees)
            cos_t, sin_t = math.cos(rad), math.sin(rad)
        return ViewTransform(cos_t, sin_t, -sin_t, cos_t, 0.0, 0.0)

    @staticmethod
    def scaling(sx: float, sy: float | None = None) -> "ViewTransform":
        sy = sx if sy is None else sy
        return ViewTransform(sx, 0.0, 0.0, sy, 0.0, 0.0)

    @staticmethod
    def translation(tx: float, ty: float) -> "ViewTransform":
        return ViewTransform(1.0, 0.0, 0.0, 1.0, tx, ty)

    def then(self, other: "ViewTransform") -> "ViewTransform":
        """Composition: apply ``self`` first, then ``other``."""
        return ViewTransform(
            other.a * self.a + other.c * self.b,
            other.b * self.a + other.d * self.b,
            other.a * self.c + other.c * self.d,
            other.b * self.c + other.d * self.d,
            other.a * self.e + other.c * self.f + other.e,
            other.b * self.e + other.d * self.f + other.f,
        )

    def determinant(self) -> float:
        return self.a * self.d - self.b * self.c

    def apply(self, p: Point2) -> Point2:
        return Point2(
            self.a * p.a1 + self.c * p.a2 + self.e,
            self.b * p.a1 + self.d * p.a2 + self.f,
        )

    def inverted(self) -> "ViewTransform":
        det = self.determinant()
        scale = max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))
        if det == 0.0 or abs(det) < 1e-12 * scale * scale:
            raise SingularTransform(f"determinant {det} too close to zero")
        ia = self.d / det
        ib = -self.b / det
        ic = -self.c / det
        id_ = self.a / det
        return ViewTransform(
            ia,
            ib,
            ic,
            id_,
            -(ia * self.e + ic * self.f),
            -(ib * self.e + id_ * self.f),
        )


def apply(t: ViewTransform, p: Point2) -> Point2:
    """Evaluate the affine map at a point."""
    return t.apply(p)


def invert(t: ViewTransform) -> ViewTransform:
    """Inverse transform; raises SingularTransform for a degenerate map."""
    return t.inverted()


@dataclass(frozen=True, slots=True)
class NormalizedDataSet:
    """Points rescaled per axis into the unit square.

    ``bounds1``/``bounds2`` hold the raw (min, max) of each variable in data
    units; the affine map actually used pads that interval by ``padding`` of
    its range on each side.  An axis with zero range maps every value to 0.5.
    """

    points: tuple[Point2, ...]
    bounds1: tuple[float, float]
    bounds2: tuple[float, float]
    padding: float

    def padded_bounds(self, axis: int) -> tuple[float, float]:
        """Data-unit values that map to normalized 0 and 1 on an axis."""
        lo, hi = self.bounds1 if axis == 1 else self.bounds2
        pad = (hi - lo) * self.padding
        return lo - pad, hi + pad

    def denormalize(self, p: Point2) -> Point2:
        return Point2(self._denorm(1, p.a1), self._denorm(2, p.a2))

    def _denorm(self, axis: int, value: float) -> float:
        lo, hi = self.padded_bounds(axis)
        if hi == lo:
            return lo
        return lo + value * (hi - lo)


def normalize(data: "DataSet", padding: float = 0.05) -> NormalizedDataSet:
    """Rescale each variable into [0, 1] over its padded data range."""
    if not (0.0 <= padding < 0.5):
        raise ValueError(f"padding must be in [0, 0.5), got {padding}")
    values = tuple(data.values)
    if not values:
        raise EmptyData("cannot normalize an empty dataset")
    min1 = min(p.a1 for p in values)
    max1 = max(p.a1 for p in values)
    min2 = min(p.a2 for p in values)
    max2 = max(p.a2 for p in values)

    def scaler(lo: float, hi: float):
        pad = (hi - lo) * padding
        lo_p, hi_p = lo - pad, hi + pad
        if not (math.isfinite(hi - lo) and math.isfinite(lo_p) and math.isfinite(hi_p)):
            raise InvalidRange(f"axis range [{lo}, {hi}] overflows float arithmetic")
        if hi_p == lo_p:
            return lambda v: 0.5
        span = hi_p - lo_p
        return lambda v: (v - lo_p) / span

    s1 = scaler(min1, max1)
    s2 = scaler(min2, max2)
    points = tuple(Point2(s1(p.a1), s2(p.a2)) for p in values)
    return NormalizedDataSet(points, (min1, max1), (min2, max2), padding)


def make_transform(
    orientation: Orientation,
    viewport: tuple[float, float],
    margins: Margins | None = None,
) -> ViewTransform:
    """Map the normalized unit square into the viewport.

    DIAMOND inscribes a rotated square (the diamond) into the largest square
    that fits the viewport minus margins, centered; its vertices are the
    images of the unit corners, with (0,0) at the bottom.  The scatter
    orientations allocate the largest ``GOLDEN_ASPECT`` rectangle anchored at
    the bottom-left of the margin box and map the unit square onto the
    square of its height, flush left -- a similarity, so point clouds keep
    their shape across orientations.
    """
    vw, vh = viewport
    margins = margins or Margins.default_for(orientation)
    if vw <= 0 or vh <= 0:
        raise InvalidViewport(f"viewport {vw}x{vh} not positive")
    width = vw - margins.left - margins.right
    height = vh - margins.top - margins.bottom
    if width <= 0 or height <= 0:
        raise InvalidViewport(
            f"margins leave no drawing area in a {vw}x{vh} viewport"
        )

    if orientation is Orientation.DIAMOND:
        side = min(width, height)
        cx = margins.left + width / 2.0
        y_bottom = margins.top + (height - side) / 2.0 + side
        half = side / 2.0
        # (0,0) -> bottom vertex, (1,0) -> right, (1,1) -> top, (0,1) -> left
        return ViewTransform(half, -half, -half, -half, cx, y_bottom)

    rect_h = min(height, width / GOLDEN_ASPECT)
    x0 = margins.left
    y_bottom = margins.top + height
    k = rect_h  # data square side = drawing-area height
    if orientation is Orientation.SCATTER_V1H:
        return ViewTransform(k, 0.0, 0.0, -k, x0, y_bottom)
    return ViewTransform(0.0, -k, k, 0.0, x0, y_bottom)


def scatter_rect(
    orientation: Orientation,
    viewport: tuple[float, float],
    margins: Margins | None = None,
) -> tuple[float, float, float, float]:
    """Drawing-area rectangle (x, y, w, h) for the scatter orientations."""
    vw, vh = viewport
    margins = margins or Margins.default_for(orientation)
    width = vw - margins.left - margins.right
    height = vh - margins.top - margins.bottom
    rect_h = min(height, width / GOLDEN_ASPECT)
    return (margins.left, margins.top + height - rect_h, rect_h * GOLDEN_ASPECT, rect_h)


def tick_positions(lo: float, hi: float, target: int = 5) -> list[float]:
    """Nice tick values (multiples of 1, 2, 2.5 or 5 times a power of ten).

    Ticks are clamped inside [lo, hi]; among candidate steps, the one whose
    tick count is nearest ``target`` wins, preferring counts between 3 and
    2*target, breaking ties toward more ticks.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
        raise InvalidRange(f"need lo < hi, got [{lo}, {hi}]")
    if target < 2:
        raise ValueError(f"target must be >= 2, got {target}")
    span = hi - lo
    if not math.isfinite(span):
        raise InvalidRange(f"range [{lo}, {hi}] overflows float arithmetic")
    e0 = math.floor(math.log10(span))
    in_window = None
    fallback = None
    for e in range(e0 - 3, e0 + 2):
        for m in NICE_MANTISSAS:
            step = m * math.pow(10.0, e)
            if step == 0.0 or not math.isfinite(step):
                continue  # exponent out of double range
            q_lo, q_hi = lo / step, hi / step
            if not (math.isfinite(q_lo) and math.isfinite(q_hi)):
                continue
            first = math.ceil(q_lo - 1e-9 - 4e-16 * abs(q_lo))
            last = math.floor(q_hi + 1e-9 + 4e-16 * abs(q_hi))
            count = last - first + 1
            if count < 2 or count > 4 * target + 10:
                continue
            key = (abs(count - target), -count, -step)
            cand = (key, step, first, last, m, e)
            if 3 <= count <= 2 * target:
                if in_window is None or key < in_window[0]:
                    in_window = cand
            if fallback is None or key < fallback[0]:
                fallback = cand
    chosen = in_window or fallback
    if chosen is None:
        raise InvalidRange(f"range [{lo}, {hi}] too extreme for tick placement")
    _, step, first, last, m, e = chosen
    decimals = max(0, -e + (1 if m == 2.5 else 0))
    # Snap each multiple to its exact decimal so labels round-trip.
    values = [round(k * step, decimals) for k in range(first, last + 1)]
    # At extreme offset-to-span ratios the values' own ulp exceeds any
    # span-relative tolerance; drop multiples that landed clearly outside.
    fuzz = 1e-9 * span + 4.0 * math.ulp(max(abs(lo), abs(hi)))
    return [v for v in values if lo - fuzz <= v <= hi + fuzz]


def format_tick(value: float) -> str:
    """Shortest decimal string that parses back to exactly ``value``."""
    if value == 0.0:
        return "0"
    text = repr(value)
    return text[:-2] if text.endswith(".0") else text


def data_bounds(points: Sequence[Point2]) -> tuple[tuple[float, float], tuple[float, float]]:
    """Per-axis (min, max) of a point sequence."""
    if not points:
        raise EmptyData("no points")
    a1 = [p.a1 for p in points]
    a2 = [p.a2 for p in points]
    return (min(a1), max(a1)), (min(a2), max(a2))
