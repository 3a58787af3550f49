import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import {
  arrowKey,
  drag,
  load,
  release,
  SNAP_THRESHOLD_DEG,
  step,
  TRANSITION_MS,
  type StateName,
  type ViewerState,
} from "../src/state.js";

const raw = readFileSync(
  fileURLToPath(new URL("./fixtures/anscombe1_bundle.json", import.meta.url)),
  "utf-8",
);

function fresh(): ViewerState {
  return load(raw);
}

/** Run the 300 ms animation to completion in uneven steps. */
function settle(state: ViewerState): ViewerState {
  let s = state;
  for (const dt of [90, 70, 110, 80, 100]) {
    s = step(s, dt);
    if (!s.transition) break;
  }
  expect(s.transition).toBeNull();
  return s;
}

function swipe(state: ViewerState, totalDeg: number): ViewerState {
  // a gesture arrives as many small pointer deltas
  let s = state;
  const steps = 10;
  for (let i = 0; i < steps; i++) {
    s = drag(s, totalDeg / steps);
  }
  return s;
}

describe("state chain", () => {
  it("cw swipe past threshold: diamond -> cw_scatter (variable 1 horizontal)", () => {
    let s = swipe(fresh(), 30);
    expect(s.transition).toMatchObject({ from: "diamond", to: "cw_scatter" });
    s = settle(s);
    expect(s.current).toBe("cw_scatter");
  });

  it("ccw swipe past threshold: diamond -> ccw_scatter (flipped layout)", () => {
    let s = swipe(fresh(), -30);
    expect(s.transition).toMatchObject({ from: "diamond", to: "ccw_scatter" });
    s = settle(s);
    expect(s.current).toBe("ccw_scatter");
  });

  it("sub-threshold swipe rubber-bands back to diamond", () => {
    let s = swipe(fresh(), 15);
    expect(s.current).toBe("diamond");
    expect(s.transition).toBeNull();
    expect(s.dragAccumDeg).toBeCloseTo(15, 9);
    s = release(s);
    expect(s.current).toBe("diamond");
    expect(s.dragAccumDeg).toBe(0);
  });

  it("further cw drag at the cw end of the chain is a no-op", () => {
    let s = settle(swipe(fresh(), 30));
    expect(s.current).toBe("cw_scatter");
    s = release(swipe(s, 45));
    expect(s.current).toBe("cw_scatter");
    expect(s.transition).toBeNull();
  });

  it("never hops directly between the two scatter states", () => {
    // one enormous ccw sweep from the cw end only reaches the diamond
    let s = settle(swipe(fresh(), 30));
    s = swipe(s, -360);
    expect(s.transition).toMatchObject({ from: "cw_scatter", to: "diamond" });
    s = settle(s);
    expect(s.current).toBe("diamond");
  });

  it("walks the full chain ccw_scatter <-> diamond <-> cw_scatter", () => {
    const visited: StateName[] = [];
    let s = fresh();
    visited.push(s.current);
    for (const direction of [-30, +30, +30, +30, -30, -30]) {
      s = swipe(s, direction);
      if (s.transition) {
        s = settle(s);
      } else {
        s = release(s);
      }
      visited.push(s.current);
    }
    expect(visited).toEqual([
      "diamond",
      "ccw_scatter", // ccw
      "diamond", // cw back
      "cw_scatter", // cw
      "cw_scatter", // cw at chain end: no-op
      "diamond", // ccw back
      "ccw_scatter", // ccw
    ]);
  });

  it("ignores drags while a transition is animating", () => {
    let s = swipe(fresh(), 30);
    const before = s.transition;
    s = drag(s, 90);
    expect(s.transition).toEqual(before);
  });

  it("arrow keys mirror full gestures", () => {
    let s = settle(arrowKey(fresh(), "right"));
    expect(s.current).toBe("cw_scatter");
    s = settle(arrowKey(s, "left"));
    expect(s.current).toBe("diamond");
    s = settle(arrowKey(s, "left"));
    expect(s.current).toBe("ccw_scatter");
    s = arrowKey(s, "left"); // chain end
    expect(s.transition).toBeNull();
    expect(s.current).toBe("ccw_scatter");
  });

  it("advances progress monotonically and settles exactly once", () => {
    let s = swipe(fresh(), 25);
    let last = 0;
    const seen: number[] = [];
    while (s.transition) {
      s = step(s, 60);
      if (s.transition) {
        seen.push(s.transition.progress);
        expect(s.transition.progress).toBeGreaterThan(last);
        last = s.transition.progress;
      }
    }
    expect(seen.length).toBeGreaterThan(0);
    expect(s.current).toBe("cw_scatter");
    // total animation time matches the configured duration
    expect(seen[seen.length - 1]).toBeLessThan(1);
    expect(60 * (seen.length + 1)).toBeGreaterThanOrEqual(TRANSITION_MS);
  });

  it("threshold constant is the documented 22.5 degrees", () => {
    expect(SNAP_THRESHOLD_DEG).toBe(22.5);
    let s = drag(fresh(), 22.4);
    expect(s.transition).toBeNull();
    s = drag(s, 0.2);
    expect(s.transition).not.toBeNull();
  });
});
