/**
 * SVG DOM rendering of a viewer state.
 *
 * Static scene layers (gridlines, axes, labels, titles) are built once per
 * orientation and cross-faded during transitions; the data points live on
 * their own layer and are repositioned every frame from the state's
 * transform, so they rotate continuously while the furniture fades.  Text
 * is never rotated, in any state or frame.
 */

import type { Vec2 } from "./affine.js";
import {
  letterboxOffset,
  pointPositions,
  type StateName,
  type ViewerState,
} from "./state.js";
import type { Primitive, SceneDoc } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

const STYLE_RULES = `
.point { fill: #2a6f97; fill-opacity: 0.75; stroke: none; }
.gridline-a1, .gridline-a2 { stroke: #c8c8c8; stroke-width: 1; fill: none; }
.axis-line { stroke: #1a1a1a; stroke-width: 1.5; fill: none; }
.tick-label-a1, .tick-label-a2 { font: 11px Helvetica, Arial, sans-serif; fill: #333333; }
.axis-title { font: 13px Helvetica, Arial, sans-serif; fill: #1a1a1a; }
`;

const LAYER_ORDER: StateName[] = ["diamond", "cw_scatter", "ccw_scatter"];
const SCENE_INDEX: Record<StateName, number> = {
  diamond: 0,
  cw_scatter: 1,
  ccw_scatter: 2,
};

export interface ViewerDom {
  svg: SVGSVGElement;
  layers: Record<StateName, SVGGElement>;
  dots: SVGCircleElement[];
  pointLayer: SVGGElement;
}

function primitiveElement(doc: Document, p: Primitive): SVGElement {
  if (p.type === "line") {
    const el = doc.createElementNS(SVG_NS, "line");
    el.setAttribute("x1", String(p.x1));
    el.setAttribute("y1", String(p.y1));
    el.setAttribute("x2", String(p.x2));
    el.setAttribute("y2", String(p.y2));
    el.setAttribute("class", p.cls);
    return el;
  }
  if (p.type === "circle") {
    const el = doc.createElementNS(SVG_NS, "circle");
    el.setAttribute("cx", String(p.cx));
    el.setAttribute("cy", String(p.cy));
    el.setAttribute("r", String(p.r));
    el.setAttribute("class", p.cls);
    return el;
  }
  const el = doc.createElementNS(SVG_NS, "text");
  el.setAttribute("x", String(p.x));
  el.setAttribute("y", String(p.y));
  el.setAttribute("text-anchor", p.anchor);
  el.setAttribute("class", p.cls);
  el.textContent = p.text;
  return el;
}

function sceneLayer(doc: Document, scene: SceneDoc, offset: Vec2): SVGGElement {
  const group = doc.createElementNS(SVG_NS, "g");
  group.setAttribute("transform", `translate(${offset.x} ${offset.y})`);
  for (const primitive of scene.primitives) {
    if (primitive.type === "circle" && primitive.cls === "point") {
      continue; // points are drawn by the live layer
    }
    group.appendChild(primitiveElement(doc, primitive));
  }
  return group;
}

export function buildViewer(container: HTMLElement, state: ViewerState): ViewerDom {
  const doc = container.ownerDocument;
  const [width, height] = state.bundle.scenes[0].viewport;
  const svg = doc.createElementNS(SVG_NS, "svg") as SVGSVGElement;
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("width", String(width));
  svg.setAttribute("height", String(height));

  const style = doc.createElementNS(SVG_NS, "style");
  style.textContent = STYLE_RULES;
  svg.appendChild(style);

  const layers = {} as Record<StateName, SVGGElement>;
  for (const name of LAYER_ORDER) {
    const scene = state.bundle.scenes[SCENE_INDEX[name]];
    const layer = sceneLayer(doc, scene, letterboxOffset(state, name));
    layers[name] = layer;
    svg.appendChild(layer);
  }

  const pointLayer = doc.createElementNS(SVG_NS, "g") as SVGGElement;
  const radius = pointRadius(state);
  const dots = state.normalizedPoints.map(() => {
    const dot = doc.createElementNS(SVG_NS, "circle") as SVGCircleElement;
    dot.setAttribute("r", String(radius));
    dot.setAttribute("class", "point");
    pointLayer.appendChild(dot);
    return dot;
  });
  svg.appendChild(pointLayer);

  container.appendChild(svg);
  const dom: ViewerDom = { svg, layers, dots, pointLayer };
  updateViewer(dom, state);
  return dom;
}

function pointRadius(state: ViewerState): number {
  const circle = state.bundle.scenes[0].primitives.find(
    (p): p is Extract<Primitive, { type: "circle" }> =>
      p.type === "circle" && p.cls === "point",
  );
  return circle ? circle.r : 3;
}

/** Pre-threshold drag feedback: a small clockwise tilt of the whole view. */
function previewTilt(state: ViewerState): number {
  if (state.transition || state.dragAccumDeg === 0) {
    return 0;
  }
  const capped = Math.max(-20, Math.min(20, state.dragAccumDeg));
  return capped * 0.6; // damped so the rubber band feels stiff
}

export function updateViewer(dom: ViewerDom, state: ViewerState): void {
  const positions = pointPositions(state);
  positions.forEach((p, i) => {
    dom.dots[i].setAttribute("cx", String(p.x));
    dom.dots[i].setAttribute("cy", String(p.y));
  });

  const fade: Record<StateName, number> = {
    diamond: 0,
    cw_scatter: 0,
    ccw_scatter: 0,
  };
  if (state.transition) {
    fade[state.transition.from as StateName] = 1 - state.transition.progress;
    fade[state.transition.to as StateName] = state.transition.progress;
  } else {
    fade[state.current] = 1;
  }
  for (const name of LAYER_ORDER) {
    dom.layers[name].setAttribute("opacity", String(fade[name]));
  }

  const tilt = previewTilt(state);
  if (tilt !== 0) {
    const [w, h] = state.bundle.scenes[0].viewport;
    dom.svg.style.transform = `rotate(${tilt}deg)`;
    dom.svg.style.transformOrigin = `${w / 2}px ${h / 2}px`;
  } else {
    dom.svg.style.transform = "";
  }
}
