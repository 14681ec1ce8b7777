// DOM shell: wires the session controller to the toolbar, the clickable
// board, and the analysis panel.  All game facts on screen come from the
// latest service response.

import { ApiError, BoardApi } from "./api.js";
import type { BoardState, Hint } from "./api.js";
import { layoutFor } from "./geometry.js";
import { panelModel } from "./panel.js";
import { renderBoard, renderPanel } from "./render.js";
import { GameClient } from "./session.js";

const BOARD_CHOICES = [
  "triangular:2",
  "triangular:3",
  "triangular:4",
  "triangular:5",
  "hexagonal:2",
  "hexagonal:3",
];

function option(value: string, label = value): string {
  return `<option value="${value}">${label}</option>`;
}

function shell(): string {
  return [
    `<h1>Push game board</h1>`,
    `<div class="toolbar">`,
    `<label>board <select id="board-choice">${BOARD_CHOICES.map((b) => option(b)).join("")}</select></label>`,
    `<label>m <input id="board-m" type="number" min="2" max="12" value="2" size="3"></label>`,
    `<label>start <select id="board-start">${option("zeros", "all zeros")}${option("random")}</select></label>`,
    `<label>target <select id="board-target">${option("zeros", "all zeros")}${option("ones", "all ones")}</select></label>`,
    `<button id="new-board">new board</button>`,
    `<label><input id="show-numbers" type="checkbox"> numbers</label>`,
    `</div>`,
    `<div class="layout">`,
    `<div class="board-frame" id="board"></div>`,
    `<aside>`,
    `<div class="panel" id="panel">create a board to begin</div>`,
    `<div class="controls">`,
    `<button id="undo" disabled>undo</button>`,
    `<button id="hint" disabled>hint</button>`,
    `</div>`,
    `<div class="hint-offer" id="hint-offer" hidden></div>`,
    `<div class="error-note" id="error-note"></div>`,
    `</aside>`,
    `</div>`,
  ].join("");
}

function randomLabels(vertices: number, m: number): number[] {
  return Array.from({ length: vertices }, () => Math.floor(Math.random() * m));
}

export function mount(root: HTMLElement, api: BoardApi): GameClient {
  root.innerHTML = shell();
  const client = new GameClient(api);

  const boardEl = root.querySelector("#board") as HTMLElement;
  const panelEl = root.querySelector("#panel") as HTMLElement;
  const undoEl = root.querySelector("#undo") as HTMLButtonElement;
  const hintEl = root.querySelector("#hint") as HTMLButtonElement;
  const offerEl = root.querySelector("#hint-offer") as HTMLElement;
  const errorEl = root.querySelector("#error-note") as HTMLElement;
  const numbersEl = root.querySelector("#show-numbers") as HTMLInputElement;

  const redraw = (state: BoardState | null) => {
    if (!state) return;
    const layout = layoutFor(state.vertices, state.regions);
    boardEl.innerHTML = renderBoard(state, layout, { showNumbers: numbersEl.checked });
    panelEl.innerHTML = renderPanel(panelModel(state));
    undoEl.disabled = client.busy || state.history_len === 0;
    hintEl.disabled = client.busy || !client.hintAvailable;
  };
  client.onChange(redraw);

  const showError = (error: unknown) => {
    errorEl.textContent =
      error instanceof ApiError ? `service: ${error.message}` : String(error);
    if (client.state) {
      client.refresh().catch(() => undefined);
    }
  };
  const clearNotes = () => {
    errorEl.textContent = "";
    offerEl.hidden = true;
    offerEl.innerHTML = "";
  };

  const run = (action: Promise<unknown>) => {
    action.then(() => (errorEl.textContent = "")).catch(showError);
  };

  root.querySelector("#new-board")!.addEventListener("click", () => {
    const board = (root.querySelector("#board-choice") as HTMLSelectElement).value;
    const m = Number((root.querySelector("#board-m") as HTMLInputElement).value) || 2;
    const start = (root.querySelector("#board-start") as HTMLSelectElement).value;
    const target = (root.querySelector("#board-target") as HTMLSelectElement).value;
    clearNotes();
    const targetValue = target === "ones" ? 1 : 0;
    if (start === "random") {
      // the vertex count comes back with the first response: create with
      // zeros, read the count, then recreate with random labels
      run(
        client.create({ board, m, target: targetValue }).then((state) => {
          if (!state) return null;
          return client.create({
            board,
            m,
            target: targetValue,
            labels: randomLabels(state.vertices, m),
          });
        }),
      );
    } else {
      run(client.create({ board, m, target: targetValue }));
    }
  });

  boardEl.addEventListener("click", (event) => {
    const polygon = (event.target as Element).closest("[data-region]");
    if (!polygon || !client.state) return;
    const region = Number(polygon.getAttribute("data-region"));
    offerEl.hidden = true;
    run(client.push(region));
  });

  undoEl.addEventListener("click", () => {
    offerEl.hidden = true;
    run(client.undo());
  });

  const offerHint = (hint: Hint) => {
    if (hint.done || hint.region === null) {
      offerEl.innerHTML = "already at the target";
      offerEl.hidden = false;
      return;
    }
    offerEl.innerHTML =
      `push region ${hint.region} (${hint.times}x) ` +
      `<button id="apply-hint">apply</button> <button id="dismiss-hint">dismiss</button>`;
    offerEl.hidden = false;
    offerEl.querySelector("#apply-hint")!.addEventListener("click", () => {
      offerEl.hidden = true;
      run(client.push(hint.region!, hint.times));
    });
    offerEl.querySelector("#dismiss-hint")!.addEventListener("click", () => {
      offerEl.hidden = true;
    });
  };

  hintEl.addEventListener("click", () => {
    client
      .hint()
      .then(offerHint)
      .catch((error) => {
        showError(error);
        if (!client.hintAvailable) hintEl.disabled = true;
      });
  });

  numbersEl.addEventListener("change", () => redraw(client.state));

  return client;
}
