import { describe, expect, it } from "vitest";
import { ApiError, BoardApi } from "../src/api.js";
import type { BoardState, CreateRequest } from "../src/api.js";
import { isSolved, panelModel } from "../src/panel.js";
import { GameClient } from "../src/session.js";
import { fixture, stubFetch, transcriptFetch } from "./helpers.js";
import type { Exchange } from "./helpers.js";

describe("scripted session over the recorded wire transcript", () => {
  it("solves the ten-vertex triangular board by following hints", async () => {
    const walk = fixture<Exchange[]>("t4_walk");
    const createBody = walk[0]!.body as CreateRequest;
    const replay = transcriptFetch(walk);
    const client = new GameClient(new BoardApi("", replay.fetch));

    const created = await client.create(createBody);
    expect(created).not.toBeNull();
    expect(created!.solvable).toBe(true);
    expect(isSolved(created!)).toBe(false);

    const pushes = await client.followHints();

    // every recorded exchange was consumed, in order, byte for byte
    expect(replay.remaining()).toBe(0);
    // the walk stays within one push per region
    expect(pushes).toBeLessThanOrEqual(created!.regions.length);
    expect(client.state!.history_len).toBe(pushes);
    // the service's own labels now equal its target: solved
    expect(client.state!.labels).toEqual(client.state!.target);
    expect(isSolved(client.state!)).toBe(true);
    expect(panelModel(client.state!).solved).toBe(true);
  });
});

describe("session controller", () => {
  it("replays the recorded undo exactly", async () => {
    const trip = fixture<{ created: BoardState; pushed: BoardState; undone: BoardState }>(
      "undo_round_trip",
    );
    const { fetch, calls } = stubFetch([
      { status: 200, response: trip.created },
      { status: 200, response: trip.pushed },
      { status: 200, response: trip.undone },
    ]);
    const client = new GameClient(new BoardApi("", fetch));
    await client.create({ board: "triangular:2", target: 1 });
    await client.push(0);
    expect(client.state!.history_len).toBe(1);
    await client.undo();
    expect(calls[2]).toEqual({
      method: "POST",
      path: `/api/boards/${trip.created.id}/undo`,
      body: {},
    });
    expect(client.state!.labels).toEqual(trip.created.labels);
    expect(client.state!.history_len).toBe(0);
  });

  it("allows only one mutation in flight", async () => {
    const state = fixture<BoardState>("t4_reachable");
    let release: (() => void) | null = null;
    const gate = new Promise<void>((resolve) => {
      release = resolve;
    });
    let requests = 0;
    const slowFetch = async () => {
      requests += 1;
      await gate;
      return new Response(JSON.stringify(state), { status: 200 });
    };
    const client = new GameClient(new BoardApi("", slowFetch));
    const first = client.create({ board: "triangular:4" });
    const second = client.create({ board: "triangular:4" });
    release!();
    expect(await first).toEqual(state);
    // the second mutation was refused, not queued
    expect(await second).toBeNull();
    expect(requests).toBe(1);
  });

  it("keeps hints unavailable after the service reports no solution", async () => {
    const unsolvable = fixture<BoardState>("t4_all_ones");
    const noSolution = fixture<Record<string, Exchange>>("errors")["hint_no_solution"]!;
    const { fetch } = stubFetch([
      { status: 200, response: unsolvable },
      { status: noSolution.status, response: noSolution.response },
    ]);
    const client = new GameClient(new BoardApi("", fetch));
    await client.create({ board: "triangular:4", target: 1 });
    expect(client.hintAvailable).toBe(true);
    const error = await client.hint().then(
      () => null,
      (e: unknown) => e,
    );
    expect(error).toBeInstanceOf(ApiError);
    expect((error as ApiError).status).toBe(409);
    expect((error as ApiError).message).toBe("no_solution");
    expect(client.hintAvailable).toBe(false);
  });
});
