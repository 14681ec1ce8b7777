import { describe, expect, it } from "vitest";
import { ApiError, BoardApi } from "../src/api.js";
import type { BoardState } from "../src/api.js";
import { fixture, stubFetch } from "./helpers.js";

describe("BoardApi", () => {
  it("creates a board with a JSON POST and returns the state verbatim", async () => {
    const recorded = fixture("t4_reachable");
    const { fetch, calls } = stubFetch([{ status: 200, response: recorded }]);
    const api = new BoardApi("http://service", fetch);
    const state = await api.createBoard({ board: "triangular:4", target: recorded.target });
    expect(calls).toEqual([
      {
        method: "POST",
        path: "http://service/api/boards",
        body: { board: "triangular:4", target: recorded.target },
      },
    ]);
    expect(state).toEqual(recorded);
  });

  it("addresses session endpoints by id", async () => {
    const recorded = fixture("t4_reachable");
    const { fetch, calls } = stubFetch([
      { status: 200, response: recorded },
      { status: 200, response: recorded },
      { status: 200, response: recorded },
      { status: 200, response: { region: 0, times: 1, done: false } },
    ]);
    const api = new BoardApi("", fetch);
    await api.getBoard(recorded.id);
    await api.push(recorded.id, 3, 2);
    await api.undo(recorded.id);
    const hint = await api.hint(recorded.id);
    expect(calls.map((c) => [c.method, c.path])).toEqual([
      ["GET", `/api/boards/${recorded.id}`],
      ["POST", `/api/boards/${recorded.id}/push`],
      ["POST", `/api/boards/${recorded.id}/undo`],
      ["GET", `/api/boards/${recorded.id}/hint`],
    ]);
    expect(calls[1]!.body).toEqual({ region: 3, times: 2 });
    expect(calls[2]!.body).toEqual({});
    expect(hint).toEqual({ region: 0, times: 1, done: false });
  });

  it("strips a trailing slash from the base url", async () => {
    const { fetch, calls } = stubFetch([{ status: 200, response: fixture("hex2") }]);
    await new BoardApi("http://service/", fetch).getBoard("abc");
    expect(calls[0]!.path).toBe("http://service/api/boards/abc");
  });

  it("turns recorded error bodies into ApiError with status and message", async () => {
    const errors = fixture<Record<string, { status: number; response: { error: string } }>>(
      "errors",
    );
    for (const name of Object.keys(errors)) {
      const recorded = errors[name]!;
      const { fetch } = stubFetch([{ status: recorded.status, response: recorded.response }]);
      const api = new BoardApi("", fetch);
      const attempt =
        name === "hint_no_solution" || name === "hint_post"
          ? api.hint("feedfeedfeedfeed")
          : name === "unknown_session"
            ? api.getBoard("ffffffffffffffff")
            : name === "undo_nothing"
              ? api.undo("feedfeedfeedfeed")
              : api.push("feedfeedfeedfeed", 99);
      const error = await attempt.then(
        () => null,
        (e: unknown) => e,
      );
      expect(error).toBeInstanceOf(ApiError);
      expect((error as ApiError).status).toBe(recorded.status);
      expect((error as ApiError).message).toBe(recorded.response.error);
    }
  });

  it("reports a malformed body as an ApiError", async () => {
    const fetch = async () => new Response("{not json", { status: 200 });
    const api = new BoardApi("", fetch);
    await expect(api.getBoard("abc")).rejects.toThrow("malformed response body");
  });

  it("parses every field the panel displays", () => {
    for (const name of ["t4_reachable", "t4_all_ones", "t5_all_ones", "k4_uncolorable"]) {
      const state = fixture<BoardState>(name);
      expect(typeof state.id).toBe("string");
      expect(typeof state.solvable).toBe("boolean");
      expect(typeof state.solution_count).toBe("number");
      expect(Array.isArray(state.labels)).toBe(true);
      expect(Array.isArray(state.target)).toBe(true);
      expect(Array.isArray(state.heads)).toBe(true);
      expect(state.invariant === null || Array.isArray(state.invariant)).toBe(true);
    }
  });
});
