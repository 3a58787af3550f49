/**
 * Scene-bundle wire types, mirroring docs/scenebundle.schema.json from the
 * core engine.  scenes[i] and transforms[i] correspond; the fixed order is
 * [diamond, scatter_v1h, scatter_v2h].
 */

export const SUPPORTED_BUNDLE_VERSION = 1;

export type OrientationName = "diamond" | "scatter_v1h" | "scatter_v2h";

export interface LinePrimitive {
  type: "line";
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  cls: string;
}

export interface CirclePrimitive {
  type: "circle";
  cx: number;
  cy: number;
  r: number;
  cls: string;
}

export interface TextPrimitive {
  type: "text";
  x: number;
  y: number;
  text: string;
  anchor: "start" | "middle" | "end";
  rotation: number;
  cls: string;
}

export type Primitive = LinePrimitive | CirclePrimitive | TextPrimitive;

/** Affine coefficients [a,b,c,d,e,f]: x' = a·x + c·y + e, y' = b·x + d·y + f. */
export type TransformList = [number, number, number, number, number, number];

export interface SceneDoc {
  orientation: OrientationName;
  viewport: [number, number];
  bounds1: [number, number];
  bounds2: [number, number];
  data_hash: string;
  primitives: Primitive[];
}

export interface StatsDoc {
  n: number;
  mean1: number;
  mean2: number;
  var1: number;
  var2: number;
  pearson_r: number | null;
  ols_slope: number | null;
  ols_intercept: number | null;
  deming_slope: number | null;
  deming_intercept: number | null;
}

export interface DatasetDoc {
  label1: string;
  label2: string;
  source: string;
  points: [number, number][];
}

export interface SceneBundleDoc {
  version: number;
  dataset: DatasetDoc;
  stats: StatsDoc;
  scenes: [SceneDoc, SceneDoc, SceneDoc];
  transforms: [TransformList, TransformList, TransformList];
}

export class BundleError extends Error {}

/** Parse and structurally validate a serialized bundle. */
export function parseBundle(raw: string): SceneBundleDoc {
  let doc: unknown;
  try {
    doc = JSON.parse(raw);
  } catch (err) {
    throw new BundleError(`not valid JSON: ${String(err)}`);
  }
  const bundle = doc as SceneBundleDoc;
  if (bundle === null || typeof bundle !== "object") {
    throw new BundleError("bundle must be a JSON object");
  }
  if (bundle.version !== SUPPORTED_BUNDLE_VERSION) {
    throw new BundleError(
      `unsupported bundle version ${String(bundle.version)} ` +
        `(viewer supports ${SUPPORTED_BUNDLE_VERSION})`,
    );
  }
  if (!Array.isArray(bundle.scenes) || bundle.scenes.length !== 3) {
    throw new BundleError("bundle must contain exactly 3 scenes");
  }
  if (!Array.isArray(bundle.transforms) || bundle.transforms.length !== 3) {
    throw new BundleError("bundle must contain exactly 3 transforms");
  }
  const order: OrientationName[] = ["diamond", "scatter_v1h", "scatter_v2h"];
  bundle.scenes.forEach((scene, i) => {
    if (scene.orientation !== order[i]) {
      throw new BundleError(
        `scene ${i} has orientation ${scene.orientation}, expected ${order[i]}`,
      );
    }
  });
  return bundle;
}
