import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { load } from "../src/state.js";
import { BundleError, parseBundle } from "../src/types.js";

const fixturePath = fileURLToPath(
  new URL("./fixtures/anscombe1_bundle.json", import.meta.url),
);
const raw = readFileSync(fixturePath, "utf-8");

describe("bundle loading", () => {
  it("starts on the diamond view with no transition", () => {
    const state = load(raw);
    expect(state.current).toBe("diamond");
    expect(state.transition).toBeNull();
    expect(state.dragAccumDeg).toBe(0);
  });

  it("recovers one normalized point per data point, inside the unit square", () => {
    const state = load(raw);
    expect(state.normalizedPoints).toHaveLength(state.bundle.dataset.points.length);
    for (const p of state.normalizedPoints) {
      expect(p.x).toBeGreaterThanOrEqual(-1e-6);
      expect(p.x).toBeLessThanOrEqual(1 + 1e-6);
      expect(p.y).toBeGreaterThanOrEqual(-1e-6);
      expect(p.y).toBeLessThanOrEqual(1 + 1e-6);
    }
  });

  it("rejects unsupported versions without crashing", () => {
    const doc = JSON.parse(raw);
    doc.version = 999;
    expect(() => load(JSON.stringify(doc))).toThrow(BundleError);
    expect(() => load(JSON.stringify(doc))).toThrow(/version 999/);
  });

  it("rejects structurally broken documents", () => {
    expect(() => parseBundle("not json {{{")).toThrow(BundleError);
    expect(() => parseBundle("[1,2,3]")).toThrow(BundleError);
    const doc = JSON.parse(raw);
    doc.scenes = doc.scenes.slice(0, 2);
    expect(() => parseBundle(JSON.stringify(doc))).toThrow(BundleError);
  });

  it("reloading the same bundle gives an identical initial state", () => {
    const a = load(raw);
    const b = load(raw);
    expect(a.current).toBe(b.current);
    expect(a.normalizedPoints).toEqual(b.normalizedPoints);
    expect(a.bundle).toEqual(b.bundle);
  });

  it("keeps every axis text horizontal in every scene", () => {
    const state = load(raw);
    for (const scene of state.bundle.scenes) {
      for (const p of scene.primitives) {
        if (p.type === "text") {
          expect(p.rotation).toBe(0);
        }
      }
    }
  });
});
