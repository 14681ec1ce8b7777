// Shared test plumbing: fixture loading and fetch doubles that replay
// recorded service responses without touching the network.

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import type { BoardState, FetchLike } from "../src/api.js";

const fixturesDir = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

export function fixture<T = BoardState>(name: string): T {
  return JSON.parse(readFileSync(join(fixturesDir, `${name}.json`), "utf-8")) as T;
}

export interface Exchange {
  method: string;
  path: string;
  status: number;
  response: unknown;
  body?: unknown;
}

export interface RecordedCall {
  method: string;
  path: string;
  body: unknown;
}

function jsonResponse(status: number, payload: unknown): Response {
  return new Response(payload === null ? "" : JSON.stringify(payload), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

// Returns one canned response per call, in order, and records what was sent.
export function stubFetch(exchanges: Array<{ status: number; response: unknown }>): {
  fetch: FetchLike;
  calls: RecordedCall[];
} {
  const calls: RecordedCall[] = [];
  let next = 0;
  const fetch: FetchLike = async (url, init) => {
    const exchange = exchanges[next++];
    if (!exchange) throw new Error(`unexpected request #${next}: ${url}`);
    calls.push({
      method: init?.method ?? "GET",
      path: url,
      body: init?.body ? JSON.parse(String(init.body)) : undefined,
    });
    return jsonResponse(exchange.status, exchange.response);
  };
  return { fetch, calls };
}

// Strict replay of a recorded wire transcript: every request must match the
// next recorded exchange exactly, and gets exactly the recorded response.
export function transcriptFetch(exchanges: Exchange[]): {
  fetch: FetchLike;
  remaining: () => number;
} {
  let next = 0;
  const fetch: FetchLike = async (url, init) => {
    const expected = exchanges[next];
    if (!expected) throw new Error(`request beyond end of transcript: ${url}`);
    next += 1;
    const method = init?.method ?? "GET";
    if (method !== expected.method || url !== expected.path) {
      throw new Error(
        `transcript mismatch at #${next}: got ${method} ${url}, ` +
          `recorded ${expected.method} ${expected.path}`,
      );
    }
    const sent = init?.body ? JSON.parse(String(init.body)) : undefined;
    if (JSON.stringify(sent) !== JSON.stringify(expected.body)) {
      throw new Error(
        `transcript body mismatch at #${next}: got ${JSON.stringify(sent)}, ` +
          `recorded ${JSON.stringify(expected.body)}`,
      );
    }
    return jsonResponse(expected.status, expected.response);
  };
  return { fetch, remaining: () => exchanges.length - next };
}
