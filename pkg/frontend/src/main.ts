/**
 * Page bootstrap: load a scene bundle (``?bundle=`` URL, file picker, or the
 * packaged demo), then wire pointer drags and arrow keys to the state
 * machine and drive the animation with requestAnimationFrame.
 */

import { buildViewer, updateViewer, type ViewerDom } from "./render.js";
import {
  arrowKey,
  drag,
  load,
  release,
  step,
  type ViewerState,
} from "./state.js";
import { BundleError } from "./types.js";

interface App {
  state: ViewerState;
  dom: ViewerDom;
}

let app: App | null = null;
let lastFrame = 0;

function banner(message: string | null): void {
  const el = document.getElementById("banner")!;
  el.textContent = message ?? "";
  el.style.display = message ? "block" : "none";
}

function describe(state: ViewerState): string {
  const names = {
    diamond: "diamond view — no variable owns the horizontal",
    cw_scatter: "scatter view — variable 1 horizontal",
    ccw_scatter: "scatter view — variable 2 horizontal (flipped)",
  } as const;
  const r = state.bundle.stats.pearson_r;
  const rText = r === null ? "undefined" : r.toFixed(3);
  return `${names[state.current]} · r = ${rText}`;
}

function setState(next: ViewerState): void {
  if (!app) return;
  app.state = next;
  updateViewer(app.dom, app.state);
  document.getElementById("status")!.textContent = describe(app.state);
}

function frame(now: number): void {
  if (app) {
    const dt = lastFrame ? now - lastFrame : 0;
    lastFrame = now;
    if (app.state.transition) {
      setState(step(app.state, dt));
    }
  }
  requestAnimationFrame(frame);
}

function angleAt(svg: SVGSVGElement, x: number, y: number): number {
  const rect = svg.getBoundingClientRect();
  const cx = rect.left + rect.width / 2;
  const cy = rect.top + rect.height / 2;
  return (Math.atan2(y - cy, x - cx) * 180) / Math.PI;
}

function wireGestures(dom: ViewerDom): void {
  let dragging = false;
  let lastAngle = 0;

  dom.svg.addEventListener("pointerdown", (ev) => {
    dragging = true;
    lastAngle = angleAt(dom.svg, ev.clientX, ev.clientY);
    dom.svg.setPointerCapture(ev.pointerId);
  });
  dom.svg.addEventListener("pointermove", (ev) => {
    if (!dragging || !app) return;
    const angle = angleAt(dom.svg, ev.clientX, ev.clientY);
    let delta = angle - lastAngle;
    if (delta > 180) delta -= 360;
    if (delta < -180) delta += 360;
    lastAngle = angle;
    // y-down atan2 angles grow clockwise, matching the state machine.
    setState(drag(app.state, delta));
  });
  const stop = () => {
    if (!dragging || !app) return;
    dragging = false;
    setState(release(app.state));
  };
  dom.svg.addEventListener("pointerup", stop);
  dom.svg.addEventListener("pointercancel", stop);

  window.addEventListener("keydown", (ev) => {
    if (!app) return;
    if (ev.key === "ArrowRight") {
      setState(arrowKey(app.state, "right"));
      ev.preventDefault();
    } else if (ev.key === "ArrowLeft") {
      setState(arrowKey(app.state, "left"));
      ev.preventDefault();
    }
  });
}

function boot(raw: string): void {
  try {
    const state = load(raw);
    const host = document.getElementById("viewer")!;
    host.replaceChildren();
    const dom = buildViewer(host, state);
    app = { state, dom };
    banner(null);
    setState(state);
    wireGestures(dom);
  } catch (err) {
    if (err instanceof BundleError) {
      banner(`Could not load bundle: ${err.message}`);
    } else {
      banner(`Unexpected error: ${String(err)}`);
    }
  }
}

async function fetchBundle(url: string): Promise<void> {
  try {
    const response = await fetch(url);
    if (!response.ok) {
      throw new BundleError(`${url}: HTTP ${response.status}`);
    }
    boot(await response.text());
  } catch (err) {
    banner(`Could not load bundle: ${String(err)}`);
  }
}

function init(): void {
  const picker = document.getElementById("picker") as HTMLInputElement;
  picker.addEventListener("change", async () => {
    const file = picker.files?.[0];
    if (file) {
      boot(await file.text());
    }
  });

  const params = new URLSearchParams(window.location.search);
  const url = params.get("bundle") ?? "demo_bundle.json";
  void fetchBundle(url);
  requestAnimationFrame(frame);
}

init();
