"""Deterministic SVG serialization of a Scene.

Output contract: SVG 1.1, UTF-8, Unix newlines, every numeric attribute
printed with exactly three decimals, elements in scene order, styling from
one fixed class table.  No timestamps, no generated ids -- the same scene
always renders to the same bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .scene import Circle, Line, Scene, Text

# One rule per drawing role; selectors cover both per-axis variants.
_STYLE = """\
.point { fill: #2a6f97; fill-opacity: 0.75; stroke: none; }
.gridline-a1, .gridline-a2 { stroke: #c8c8c8; stroke-width: 1; fill: none; }
.axis-line { stroke: #1a1a1a; stroke-width: 1.5; fill: none; }
.tick-label-a1, .tick-label-a2 { font: 11px Helvetica, Arial, sans-serif; fill: #333333; }
.axis-title { font: 13px Helvetica, Arial, sans-serif; fill: #1a1a1a; }"""


@dataclass(frozen=True)
class SvgDocument:
    content: bytes
    width: float
    height: float

    def text(self) -> str:
        return self.content.decode("utf-8")


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def render(scene: Scene, pixel_size: tuple[float, float] | None = None) -> SvgDocument:
    """Serialize a scene; ``pixel_size`` defaults to the scene viewport.

    When a different pixel size is given, coordinates are rescaled per axis
    onto it (radii by the smaller factor), so the viewBox always matches the
    pixel size.
    """
    vw, vh = scene.viewport
    pw, ph = pixel_size if pixel_size is not None else scene.viewport
    if pw <= 0 or ph <= 0:
        raise ValueError(f"pixel size {pw}x{ph} not positive")
    sx, sy = pw / vw, ph / vh
    sr = min(sx, sy)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(pw)}" '
        f'height="{_fmt(ph)}" viewBox="0.000 0.000 {_fmt(pw)} {_fmt(ph)}">',
        "<style>",
        _STYLE,
        "</style>",
    ]
    for p in scene.primitives:
        if isinstance(p, Line):
            lines.append(
                f'<line x1="{_fmt(p.x1 * sx)}" y1="{_fmt(p.y1 * sy)}" '
                f'x2="{_fmt(p.x2 * sx)}" y2="{_fmt(p.y2 * sy)}" class="{p.cls}"/>'
            )
        elif isinstance(p, Circle):
            lines.append(
                f'<circle cx="{_fmt(p.cx * sx)}" cy="{_fmt(p.cy * sy)}" '
                f'r="{_fmt(p.r * sr)}" class="{p.cls}"/>'
            )
        elif isinstance(p, Text):
            rotation = ""
            if p.rotation != 0.0:
                rotation = (
                    f' transform="rotate({_fmt(p.rotation)} '
                    f'{_fmt(p.x * sx)} {_fmt(p.y * sy)})"'
                )
            lines.append(
                f'<text x="{_fmt(p.x * sx)}" y="{_fmt(p.y * sy)}" '
                f'text-anchor="{p.anchor}" class="{p.cls}"{rotation}>'
                f"{escape(p.text)}</text>"
            )
        else:  # pragma: no cover - scene invariants exclude this
            raise TypeError(f"unknown primitive {type(p).__name__}")
    lines.append("</svg>")
    return SvgDocument(("\n".join(lines) + "\n").encode("utf-8"), pw, ph)
