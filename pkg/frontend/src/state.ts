/**
 * Viewer state machine.
 *
 * The three settled states form a linear chain
 *
 *     ccw_scatter  <-(ccw)-  diamond  -(cw)->  cw_scatter
 *
 * (cw_scatter shows variable 1 horizontal; ccw_scatter shows variable 2
 * horizontal and carries the mirror flip so both axes still increase
 * right/up).  The view always starts on the diamond; a drag accumulating
 * more than SNAP_THRESHOLD_DEG of rotation commits a transition to the
 * adjacent state in that direction, sub-threshold gestures rubber-band
 * back, and there is never a direct ccw<->cw hop.
 *
 * Gesture sign convention: positive angles are clockwise on screen (what a
 * pointer orbiting the canvas center produces under y-down coordinates).
 */

import {
  applyAffine,
  decompose,
  glerp,
  invertAffine,
  lerp,
  similarityAboutCenter,
  type SimilarityParts,
  type Vec2,
} from "./affine.js";
import type { CirclePrimitive, SceneBundleDoc, TransformList } from "./types.js";
import { parseBundle } from "./types.js";

export type StateName = "ccw_scatter" | "diamond" | "cw_scatter";

export const SNAP_THRESHOLD_DEG = 22.5;
export const TRANSITION_MS = 300;
/** Narrowest horizontal squash during the flip; bounds mid-flip distance
 * distortion at 30%. */
export const FLIP_SQUASH_MIN = 0.7;
/** The flip plays out over the middle 40% of the ccw leg. */
export const FLIP_WINDOW = [0.3, 0.7] as const;

const TRANSFORM_INDEX: Record<StateName, number> = {
  diamond: 0,
  cw_scatter: 1, // scatter_v1h
  ccw_scatter: 2, // scatter_v2h
};

/** Which settled state a past-threshold gesture leads to, if any. */
const NEXT_CW: Partial<Record<StateName, StateName>> = {
  ccw_scatter: "diamond",
  diamond: "cw_scatter",
};
const NEXT_CCW: Partial<Record<StateName, StateName>> = {
  cw_scatter: "diamond",
  diamond: "ccw_scatter",
};

export interface Transition {
  from: StateName;
  to: StateName;
  progress: number; // in [0, 1], advances monotonically
}

export interface ViewerState {
  current: StateName;
  transition: Transition | null;
  bundle: SceneBundleDoc;
  /** Signed accumulated gesture angle of the active drag, degrees. */
  dragAccumDeg: number;
  /** Normalized [0,1]^2 coordinates of the data points, recovered once. */
  normalizedPoints: Vec2[];
}

/** Load a parsed or serialized bundle; the view starts on the diamond. */
export function load(bundle: SceneBundleDoc | string): ViewerState {
  const doc = typeof bundle === "string" ? parseBundle(bundle) : parseBundle(JSON.stringify(bundle));
  const inverse = invertAffine(doc.transforms[0]);
  const normalizedPoints = doc.scenes[0].primitives
    .filter((p): p is CirclePrimitive => p.type === "circle" && p.cls === "point")
    .map((p) => applyAffine(inverse, { x: p.cx, y: p.cy }));
  return {
    current: "diamond",
    transition: null,
    bundle: doc,
    dragAccumDeg: 0,
    normalizedPoints,
  };
}

function startTransition(state: ViewerState, to: StateName): ViewerState {
  return {
    ...state,
    transition: { from: state.current, to, progress: 0 },
    dragAccumDeg: 0,
  };
}

/**
 * Feed a drag increment (degrees, clockwise-positive).  Once the
 * accumulated angle passes the snap threshold and a neighbor exists in
 * that direction, the transition starts; surplus rotation is discarded so
 * a single sweep never skips across the diamond.
 */
export function drag(state: ViewerState, deltaDeg: number): ViewerState {
  if (state.transition) {
    return state; // animation owns the view until it settles
  }
  const accum = state.dragAccumDeg + deltaDeg;
  const table = accum > 0 ? NEXT_CW : NEXT_CCW;
  const target = table[state.current];
  if (Math.abs(accum) >= SNAP_THRESHOLD_DEG && target !== undefined) {
    return startTransition(state, target);
  }
  // At a chain end the accumulator still tracks the gesture so release()
  // rubber-bands back from wherever the user left it.
  return { ...state, dragAccumDeg: accum };
}

/** Pointer released: a sub-threshold gesture animates back to rest. */
export function release(state: ViewerState): ViewerState {
  return state.dragAccumDeg === 0 ? state : { ...state, dragAccumDeg: 0 };
}

/** Keyboard arrows mirror full drag gestures; "right" rotates clockwise. */
export function arrowKey(state: ViewerState, key: "left" | "right"): ViewerState {
  return drag(state, key === "right" ? SNAP_THRESHOLD_DEG : -SNAP_THRESHOLD_DEG);
}

/** Advance the animation clock; settles the state machine at progress 1. */
export function step(state: ViewerState, dtMs: number): ViewerState {
  if (!state.transition) {
    return state;
  }
  const progress = Math.min(1, state.transition.progress + dtMs / TRANSITION_MS);
  if (progress >= 1) {
    return {
      ...state,
      current: state.transition.to,
      transition: null,
    };
  }
  return { ...state, transition: { ...state.transition, progress } };
}

function easeInOut(t: number): number {
  return 0.5 - 0.5 * Math.cos(Math.PI * t);
}

/**
 * Horizontal squash factor along the ccw leg, parametrized by the
 * "distance from diamond" p in [0, 1].  |h| never drops below
 * FLIP_SQUASH_MIN and the sign flips at the window midpoint -- the mirror
 * happens at minimum width.
 */
export function flipSquash(p: number): number {
  const [w0, w1] = FLIP_WINDOW;
  if (p <= w0) return 1;
  if (p >= w1) return -1;
  const u = (p - w0) / (w1 - w0);
  const magnitude = 1 - (1 - FLIP_SQUASH_MIN) * Math.sin(Math.PI * u);
  return u < 0.5 ? magnitude : -magnitude;
}

/**
 * The viewer letterboxes every state onto the diamond's square canvas;
 * settled scatter content is offset to sit centered.
 */
export function letterboxOffset(state: ViewerState, name: StateName): Vec2 {
  const canvas = state.bundle.scenes[0].viewport;
  const viewport = state.bundle.scenes[TRANSFORM_INDEX[name]].viewport;
  return { x: (canvas[0] - viewport[0]) / 2, y: (canvas[1] - viewport[1]) / 2 };
}

function settledParts(state: ViewerState, name: StateName): SimilarityParts {
  const parts = decompose(state.bundle.transforms[TRANSFORM_INDEX[name]]);
  const offset = letterboxOffset(state, name);
  return {
    ...parts,
    center: { x: parts.center.x + offset.x, y: parts.center.y + offset.y },
  };
}

/**
 * The transform mapping normalized coordinates to screen coordinates for
 * the current frame.  Settled states return the bundle's stored transform
 * exactly (letterboxing is a separate additive offset); transitions
 * interpolate through pure-rotation frames on the cw leg and through the
 * squash-and-flip choreography on the ccw leg.
 */
export function frameTransform(state: ViewerState): TransformList {
  if (!state.transition) {
    return state.bundle.transforms[TRANSFORM_INDEX[state.current]];
  }
  const { from, to, progress } = state.transition;
  const eased = easeInOut(progress);
  // p measures how far the frame sits from the diamond along the leg.
  const scatter = from === "diamond" ? to : from;
  const p = from === "diamond" ? eased : 1 - eased;
  const diamond = settledParts(state, "diamond");
  const target = settledParts(state, scatter);
  const scale = glerp(diamond.scale, target.scale, p);
  const angle = lerp(diamond.angleDeg, target.angleDeg, p);
  const center = {
    x: lerp(diamond.center.x, target.center.x, p),
    y: lerp(diamond.center.y, target.center.y, p),
  };
  const squash = scatter === "ccw_scatter" ? flipSquash(p) : 1;
  return similarityAboutCenter(scale, angle, center, squash);
}

/**
 * Screen positions of the data points for the current frame, letterbox
 * included (during a transition the interpolated center already carries
 * the offset).
 */
export function pointPositions(state: ViewerState): Vec2[] {
  const t = frameTransform(state);
  const offset = state.transition
    ? { x: 0, y: 0 }
    : letterboxOffset(state, state.current);
  return state.normalizedPoints.map((p) => {
    const s = applyAffine(t, p);
    return { x: s.x + offset.x, y: s.y + offset.y };
  });
}
