/**
 * 2D affine helpers over the wire format's six-coefficient lists.
 *
 * Coefficients [a,b,c,d,e,f] apply as x' = a·x + c·y + e, y' = b·x + d·y + f
 * (the SVG matrix layout).  Screen coordinates have y growing downward;
 * angles are stated in the data-up frame, so converting a screen linear part
 * to data-up flips the sign of the b/d row.
 */

import type { TransformList } from "./types.js";

export interface Vec2 {
  x: number;
  y: number;
}

export function applyAffine(t: TransformList, p: Vec2): Vec2 {
  const [a, b, c, d, e, f] = t;
  return { x: a * p.x + c * p.y + e, y: b * p.x + d * p.y + f };
}

export function invertAffine(t: TransformList): TransformList {
  const [a, b, c, d, e, f] = t;
  const det = a * d - b * c;
  if (det === 0 || !Number.isFinite(det)) {
    throw new Error(`affine transform is singular (det=${det})`);
  }
  const ia = d / det;
  const ib = -b / det;
  const ic = -c / det;
  const id = a / det;
  return [ia, ib, ic, id, -(ia * e + ic * f), -(ib * e + id * f)];
}

/** other ∘ first: apply ``first``, then ``other``. */
export function composeAffine(other: TransformList, first: TransformList): TransformList {
  const [a2, b2, c2, d2, e2, f2] = other;
  const [a1, b1, c1, d1, e1, f1] = first;
  return [
    a2 * a1 + c2 * b1,
    b2 * a1 + d2 * b1,
    a2 * c1 + c2 * d1,
    b2 * c1 + d2 * d1,
    a2 * e1 + c2 * f1 + e2,
    b2 * e1 + d2 * f1 + f2,
  ];
}

/**
 * Decomposition of the view transforms the core engine emits: a uniform
 * scale, a data-up rotation angle, an optional coordinate swap (the
 * reflection of the second scatter view), and the image of the normalized
 * center (0.5, 0.5).
 */
export interface SimilarityParts {
  scale: number;
  angleDeg: number;
  center: Vec2;
  reflected: boolean;
}

export function decompose(t: TransformList): SimilarityParts {
  const [a, b] = t;
  const det = t[0] * t[3] - t[1] * t[2];
  // Screen determinant is negative for orientation-preserving data-up maps
  // (the y-down flip contributes one reflection); positive means the map
  // carries the extra screen-x mirror of the second scatter view.
  const reflected = det > 0;
  // Undoing that mirror negates the first row before reading the angle.
  const ax = reflected ? -a : a;
  const ay = b;
  const scale = Math.hypot(a, b);
  const angleDeg = (Math.atan2(-ay, ax) * 180) / Math.PI;
  const center = applyAffine(t, { x: 0.5, y: 0.5 });
  return { scale, angleDeg, center, reflected };
}

/**
 * Screen transform of normalized coordinates for a similarity given in
 * data-up terms: rotate by ``angleDeg`` about the unit-square center, scale,
 * place the center at ``center``; ``squashX`` additionally scales the screen
 * x axis about the center (the flip choreography uses it with values in
 * [-1, 1]).
 */
export function similarityAboutCenter(
  scale: number,
  angleDeg: number,
  center: Vec2,
  squashX = 1,
): TransformList {
  const rad = (angleDeg * Math.PI) / 180;
  const cos = Math.cos(rad);
  const sin = Math.sin(rad);
  const a = squashX * scale * cos;
  const c = -squashX * scale * sin;
  const b = -scale * sin;
  const d = -scale * cos;
  return [
    a,
    b,
    c,
    d,
    center.x - 0.5 * a - 0.5 * c,
    center.y - 0.5 * b - 0.5 * d,
  ];
}

export function lerp(a: number, b: number, t: number): number {
  return a + (b - a) * t;
}

/** Geometric interpolation; both endpoints must be positive. */
export function glerp(a: number, b: number, t: number): number {
  return a * Math.pow(b / a, t);
}
