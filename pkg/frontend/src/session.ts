// Session controller: owns the latest server state and serialises mutations
// so at most one push/undo/create is in flight at a time.

import { ApiError, BoardApi } from "./api.js";
import type { BoardState, CreateRequest, Hint } from "./api.js";

export type Listener = (state: BoardState | null) => void;

export class GameClient {
  private api: BoardApi;
  private listeners: Listener[] = [];
  private inFlight = false;
  state: BoardState | null = null;
  hintAvailable = true;

  constructor(api: BoardApi) {
    this.api = api;
  }

  onChange(listener: Listener): void {
    this.listeners.push(listener);
  }

  get busy(): boolean {
    return this.inFlight;
  }

  private publish(state: BoardState): void {
    this.state = state;
    for (const listener of this.listeners) listener(state);
  }

  // Runs one mutation at a time; concurrent calls are rejected with null so
  // a double click cannot fire two pushes.
  private async mutate(op: () => Promise<BoardState>): Promise<BoardState | null> {
    if (this.inFlight) return null;
    this.inFlight = true;
    try {
      const state = await op();
      this.publish(state);
      return state;
    } finally {
      this.inFlight = false;
    }
  }

  create(request: CreateRequest): Promise<BoardState | null> {
    this.hintAvailable = true;
    return this.mutate(() => this.api.createBoard(request));
  }

  refresh(): Promise<BoardState | null> {
    return this.api.getBoard(this.requireId()).then((state) => {
      this.publish(state);
      return state;
    });
  }

  push(region: number, times = 1): Promise<BoardState | null> {
    return this.mutate(() => this.api.push(this.requireId(), region, times));
  }

  undo(): Promise<BoardState | null> {
    return this.mutate(() => this.api.undo(this.requireId()));
  }

  // A 409 here means the service proved no plan exists; remember that so the
  // UI can keep the hint control disabled for this session.
  async hint(): Promise<Hint> {
    const id = this.requireId();
    try {
      return await this.api.hint(id);
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        this.hintAvailable = false;
      }
      throw error;
    }
  }

  // Follows hints until the service reports the target reached.  Returns the
  // number of pushes applied.
  async followHints(maxSteps = 1000): Promise<number> {
    let pushes = 0;
    for (let step = 0; step < maxSteps; step++) {
      const hint = await this.hint();
      if (hint.done || hint.region === null) return pushes;
      await this.push(hint.region, hint.times);
      pushes += 1;
    }
    throw new Error("hint walk did not terminate");
  }

  private requireId(): string {
    if (!this.state) throw new Error("no active board session");
    return this.state.id;
  }
}
