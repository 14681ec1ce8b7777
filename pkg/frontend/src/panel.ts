// Analysis panel contents.  Every value is lifted straight from the service
// response; the client formats but never recomputes.

import type { BoardState } from "./api.js";

export interface PanelModel {
  boardLine: string;
  solvableText: "yes" | "no";
  solutionCountText: string;
  invariantText: string;
  targetInvariantText: string;
  uncolorable: boolean;
  unsolvable: boolean;
  invariantMismatch: boolean;
  solved: boolean;
  historyLen: number;
}

export function formatVector(vector: number[] | null): string {
  if (vector === null) return "undefined (board is not 3-colorable)";
  return "(" + vector.join(", ") + ")";
}

export function isSolved(state: BoardState): boolean {
  return (
    state.labels.length === state.target.length &&
    state.labels.every((value, i) => value === state.target[i])
  );
}

export function panelModel(state: BoardState): PanelModel {
  return {
    boardLine: `${state.vertices} vertices, ${state.regions.length} regions, labels mod ${state.m}`,
    solvableText: state.solvable ? "yes" : "no",
    solutionCountText: String(state.solution_count),
    invariantText: formatVector(state.invariant),
    targetInvariantText: formatVector(state.target_invariant),
    uncolorable: state.invariant === null,
    unsolvable: !state.solvable,
    invariantMismatch: !state.solvable && state.invariant !== null,
    solved: isSolved(state),
    historyLen: state.history_len,
  };
}
