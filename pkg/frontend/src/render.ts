// Pure rendering: board state plus layout in, markup strings out.  The same
// state always yields the same string, which is what the tests pin down.

import type { BoardState } from "./api.js";
import type { Layout, Point } from "./geometry.js";
import type { PanelModel } from "./panel.js";

export interface ViewOptions {
  showNumbers: boolean;
}

const COIN_RADIUS = 13;

function fmt(value: number): string {
  return (Math.round(value * 100) / 100).toString();
}

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

// Linear ramp from the heads gold to the tails slate; for m = 2 this lands
// exactly on the two endpoint colours.
function rampColor(label: number, m: number): string {
  const t = m > 1 ? label / (m - 1) : 0;
  const mix = (a: number, b: number) => Math.round(a + (b - a) * t);
  return `rgb(${mix(243, 122)}, ${mix(193, 134)}, ${mix(75, 153)})`;
}

function regionPolygon(region: number[], points: Point[], index: number): string {
  const coords = region
    .map((v) => points[v])
    .filter((p): p is Point => p !== undefined)
    .map((p) => `${fmt(p.x)},${fmt(p.y)}`)
    .join(" ");
  return `<polygon class="region" data-region="${index}" points="${coords}"><title>region ${index}</title></polygon>`;
}

function coin(state: BoardState, points: Point[], v: number, view: ViewOptions): string {
  const p = points[v];
  if (!p) return "";
  const label = state.labels[v] ?? 0;
  const heads = state.heads[v] ?? false;
  const face = heads ? "heads" : "tails";
  const fill = state.m > 2 ? ` style="fill: ${rampColor(label, state.m)}"` : "";
  const circle = `<circle class="coin ${face}" data-vertex="${v}" cx="${fmt(p.x)}" cy="${fmt(p.y)}" r="${COIN_RADIUS}"${fill}/>`;
  if (!view.showNumbers) return circle;
  const text = `<text class="coin-label" x="${fmt(p.x)}" y="${fmt(p.y)}">${label}</text>`;
  return circle + text;
}

export function renderBoard(state: BoardState, layout: Layout, view: ViewOptions): string {
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${fmt(layout.width)} ${fmt(layout.height)}" data-layout="${layout.kind}">`,
  );
  state.regions.forEach((region, index) => {
    parts.push(regionPolygon(region, layout.points, index));
  });
  for (let v = 0; v < state.vertices; v++) {
    parts.push(coin(state, layout.points, v, view));
  }
  parts.push("</svg>");
  return parts.join("");
}

export function renderPanel(model: PanelModel): string {
  const badges: string[] = [];
  if (model.solved) {
    badges.push(`<span class="badge solved">solved</span>`);
  }
  if (model.invariantMismatch) {
    badges.push(`<span class="badge unsolvable">different invariant class</span>`);
  } else if (model.unsolvable) {
    badges.push(`<span class="badge unsolvable">not solvable</span>`);
  }
  if (model.uncolorable) {
    badges.push(`<span class="badge uncolorable">no proper 3-coloring</span>`);
  }
  return [
    `<dl>`,
    `<dt>board</dt><dd data-field="board">${escapeHtml(model.boardLine)}</dd>`,
    `<dt>solvable</dt><dd data-field="solvable">${model.solvableText}</dd>`,
    `<dt>solutions</dt><dd data-field="solution_count">${escapeHtml(model.solutionCountText)}</dd>`,
    `<dt>invariant</dt><dd data-field="invariant">${escapeHtml(model.invariantText)}</dd>`,
    `<dt>target invariant</dt><dd data-field="target_invariant">${escapeHtml(model.targetInvariantText)}</dd>`,
    `<dt>moves</dt><dd data-field="history_len">${model.historyLen}</dd>`,
    `</dl>`,
    badges.join(""),
  ].join("");
}
