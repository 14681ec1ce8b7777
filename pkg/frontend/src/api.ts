// Typed client for the push-game HTTP service.  Every number the UI shows
// comes out of these response bodies; the client never recomputes game math.

export interface BoardState {
  id: string;
  n: number;
  m: number;
  vertices: number;
  regions: number[][];
  labels: number[];
  target: number[];
  invariant: number[] | null;
  target_invariant: number[] | null;
  solvable: boolean;
  solution_count: number;
  heads: boolean[];
  history_len: number;
}

export interface Hint {
  region: number | null;
  times: number;
  done: boolean;
}

export interface CreateRequest {
  board: string | Record<string, unknown>;
  m?: number;
  target?: number[] | number;
  labels?: number[];
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  status: number;

  constructor(status: number, message: string) {
    super(message);
    this.name = "ApiError";
    this.status = status;
  }
}

async function readJson(response: Response): Promise<unknown> {
  const text = await response.text();
  try {
    return text ? JSON.parse(text) : null;
  } catch {
    throw new ApiError(response.status, "malformed response body");
  }
}

async function unwrap<T>(response: Response): Promise<T> {
  const body = await readJson(response);
  if (!response.ok) {
    const message =
      body && typeof body === "object" && "error" in body
        ? String((body as { error: unknown }).error)
        : response.statusText;
    throw new ApiError(response.status, message);
  }
  return body as T;
}

export class BoardApi {
  private base: string;
  private fetchImpl: FetchLike;

  constructor(base = "", fetchImpl: FetchLike = (url, init) => fetch(url, init)) {
    this.base = base.replace(/\/$/, "");
    this.fetchImpl = fetchImpl;
  }

  private url(path: string): string {
    return this.base + path;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.fetchImpl(this.url(path), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    }).then((response) => unwrap<T>(response));
  }

  createBoard(request: CreateRequest): Promise<BoardState> {
    return this.post<BoardState>("/api/boards", request);
  }

  getBoard(id: string): Promise<BoardState> {
    return this.fetchImpl(this.url(`/api/boards/${id}`)).then((response) =>
      unwrap<BoardState>(response),
    );
  }

  push(id: string, region: number, times = 1): Promise<BoardState> {
    return this.post<BoardState>(`/api/boards/${id}/push`, { region, times });
  }

  undo(id: string): Promise<BoardState> {
    return this.post<BoardState>(`/api/boards/${id}/undo`, {});
  }

  hint(id: string): Promise<Hint> {
    return this.fetchImpl(this.url(`/api/boards/${id}/hint`)).then((response) =>
      unwrap<Hint>(response),
    );
  }
}
