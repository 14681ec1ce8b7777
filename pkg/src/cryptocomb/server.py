"""Small HTTP service exposing push-game boards as JSON sessions.

Endpoints (all JSON):

    POST /api/boards                 create a session; body names a board
                                     (builder shorthand or explicit JSON),
                                     optional m, labels, target
    GET  /api/boards/{id}            full analysis of the session state
    POST /api/boards/{id}/push       {"region": r, "times": t?} apply a push
    POST /api/boards/{id}/undo       revert the latest push
    GET  /api/boards/{id}/hint       next step of a fresh plan toward the
                                     target; 409 when no plan exists

Unknown sessions give 404, malformed requests 400. Mutations on one
session are serialized by a per-session lock; distinct sessions do not
block each other. If a data directory is configured (CRYPTOCOMB_DATA or
--data), every session is snapshotted to JSON after each mutation and
reloaded on startup. A static frontend bundle directory, when present,
is served at the root path.

Built on the standard library's threading HTTP server: the payloads are
tiny, the dependency surface stays empty, and the locking is explicit.
"""
from __future__ import annotations

import json
import mimetypes
import os
import re
import secrets
import threading
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Sequence

from . import pushgame
from .errors import BadRegion, CryptocombError
from .pushgame import SimplexBoard

DEFAULT_PORT = 8080


@dataclass
class GameSession:
    id: str
    board: SimplexBoard
    initial_labels: tuple[int, ...]
    target: tuple[int, ...]
    history: list[tuple[int, int]] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def state(self) -> dict:
        board = self.board
        coloring = pushgame.proper_coloring(board)
        if coloring is not None:
            invariant = list(pushgame.invariant_vector(board, coloring))
            target_inv = list(
                pushgame.invariant_vector(board.with_labels(self.target), coloring)
            )
        else:
            invariant = None
            target_inv = None
        solvable = pushgame.is_solvable(board, self.target)
        return {
            "id": self.id,
            "n": board.n,
            "m": board.m,
            "vertices": board.num_vertices,
            "regions": [list(r) for r in board.regions],
            "labels": list(board.labels),
            "target": list(self.target),
            "invariant": invariant,
            "target_invariant": target_inv,
            "solvable": solvable,
            "solution_count": pushgame.exact_count(board) if solvable else 0,
            "heads": list(pushgame.heads_view(board)),
            "history_len": len(self.history),
        }

    def snapshot(self) -> dict:
        return {
            "id": self.id,
            "board": self.board.to_json_obj(),
            "initial_labels": list(self.initial_labels),
            "target": list(self.target),
            "history": [list(h) for h in self.history],
        }

    @classmethod
    def from_snapshot(cls, obj: dict) -> GameSession:
        return cls(
            id=str(obj["id"]),
            board=SimplexBoard.from_json_obj(obj["board"]),
            initial_labels=tuple(int(x) for x in obj["initial_labels"]),
            target=tuple(int(x) for x in obj["target"]),
            history=[(int(r), int(t)) for r, t in obj.get("history", [])],
        )


class HttpError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


class BoardStore:
    """Session registry with optional JSON snapshot persistence."""

    def __init__(self, data_dir: str | None = None):
        self._sessions: dict[str, GameSession] = {}
        self._lock = threading.Lock()
        self.data_dir = data_dir
        if data_dir:
            os.makedirs(data_dir, exist_ok=True)
            self._load_all(data_dir)

    def _load_all(self, data_dir: str) -> None:
        for name in sorted(os.listdir(data_dir)):
            if not name.endswith(".json"):
                continue
            path = os.path.join(data_dir, name)
            try:
                with open(path, "r", encoding="utf-8") as fh:
                    session = GameSession.from_snapshot(json.load(fh))
            except (OSError, ValueError, KeyError, CryptocombError):
                continue  # a bad snapshot should not block startup
            self._sessions[session.id] = session

    def _save(self, session: GameSession) -> None:
        if not self.data_dir:
            return
        path = os.path.join(self.data_dir, f"{session.id}.json")
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(session.snapshot(), fh)
        os.replace(tmp, path)

    def create(self, body: dict) -> GameSession:
        board = self._board_from_body(body)
        target = body.get("target")
        if target is None:
            target_labels = (0,) * board.num_vertices
        elif isinstance(target, int):
            target_labels = (target % board.m,) * board.num_vertices
        elif isinstance(target, list):
            if len(target) != board.num_vertices:
                raise HttpError(400, "target length must match vertex count")
            target_labels = tuple(int(x) % board.m for x in target)
        else:
            raise HttpError(400, "target must be a list or an integer")
        session = GameSession(
            id=secrets.token_hex(8),
            board=board,
            initial_labels=board.labels,
            target=target_labels,
        )
        with self._lock:
            self._sessions[session.id] = session
        self._save(session)
        return session

    @staticmethod
    def _board_from_body(body: dict) -> SimplexBoard:
        spec = body.get("board")
        if spec is None:
            raise HttpError(400, "body needs a 'board' field")
        m = body.get("m")
        labels = body.get("labels")
        try:
            if isinstance(spec, str):
                board = pushgame.build_board(spec, int(m) if m else 2, labels)
            elif isinstance(spec, dict):
                if "m" not in spec:
                    spec = {**spec, "m": int(m) if m else 2}
                board = SimplexBoard.from_json_obj(spec)
                if labels is not None:
                    board = board.with_labels([int(x) for x in labels])
            else:
                raise ValueError("board must be a builder string or an object")
        except (CryptocombError, ValueError, TypeError) as exc:
            raise HttpError(400, str(exc)) from exc
        return board

    def get(self, session_id: str) -> GameSession:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise HttpError(404, "unknown_session")
        return session

    def push(self, session_id: str, body: dict) -> GameSession:
        session = self.get(session_id)
        region = body.get("region")
        times = body.get("times", 1)
        if not isinstance(region, int) or isinstance(region, bool):
            raise HttpError(400, "push body needs an integer 'region'")
        if not isinstance(times, int) or isinstance(times, bool) or times < 1:
            raise HttpError(400, "'times' must be a positive integer")
        with session.lock:
            try:
                session.board = pushgame.push(session.board, region, times)
            except BadRegion as exc:
                raise HttpError(400, str(exc)) from exc
            session.history.append((region, times))
            self._save(session)
        return session

    def undo(self, session_id: str) -> GameSession:
        session = self.get(session_id)
        with session.lock:
            if not session.history:
                raise HttpError(409, "nothing_to_undo")
            region, times = session.history.pop()
            # pushing m - times more completes a full cycle, i.e. undoes
            back = (-times) % session.board.m
            if back:
                session.board = pushgame.push(session.board, region, back)
            self._save(session)
        return session

    def hint(self, session_id: str) -> dict:
        session = self.get(session_id)
        with session.lock:
            board = session.board
            target = session.target
        plan = pushgame.solve(board, target)
        if plan is None:
            raise HttpError(409, "no_solution")
        for region, times in enumerate(plan):
            if times:
                return {"region": region, "times": times, "done": False}
        return {"region": None, "times": 0, "done": True}


# HTTP plumbing

_SESSION_RE = re.compile(r"^/api/boards/([0-9a-f]+)$")
_ACTION_RE = re.compile(r"^/api/boards/([0-9a-f]+)/(push|undo|hint)$")


def _make_handler(store: BoardStore, frontend_dir: str | None):
    class Handler(BaseHTTPRequestHandler):
        server_version = "cryptocomb"

        def log_message(self, fmt, *args):  # quiet by default
            if os.environ.get("CRYPTOCOMB_HTTP_LOG"):
                super().log_message(fmt, *args)

        def _json(self, status: int, obj: dict) -> None:
            body = json.dumps(obj).encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def _body(self) -> dict:
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length) if length else b""
            if not raw:
                return {}
            try:
                obj = json.loads(raw.decode("utf-8"))
            except (UnicodeDecodeError, json.JSONDecodeError) as exc:
                raise HttpError(400, f"malformed JSON body: {exc}") from exc
            if not isinstance(obj, dict):
                raise HttpError(400, "body must be a JSON object")
            return obj

        def do_GET(self):
            try:
                m = _SESSION_RE.match(self.path)
                if m:
                    session = store.get(m.group(1))
                    with session.lock:
                        state = session.state()
                    self._json(200, state)
                    return
                m = _ACTION_RE.match(self.path)
                if m and m.group(2) == "hint":
                    self._json(200, store.hint(m.group(1)))
                    return
                if self.path.startswith("/api/"):
                    raise HttpError(404, "no such endpoint")
                self._static()
            except HttpError as exc:
                self._json(exc.status, {"error": exc.message})

        def do_POST(self):
            try:
                if self.path == "/api/boards":
                    session = store.create(self._body())
                    with session.lock:
                        self._json(200, session.state())
                    return
                m = _ACTION_RE.match(self.path)
                if m:
                    sid, action = m.group(1), m.group(2)
                    if action == "push":
                        session = store.push(sid, self._body())
                    elif action == "undo":
                        session = store.undo(sid)
                    else:
                        raise HttpError(405, "hint is a GET endpoint")
                    with session.lock:
                        self._json(200, session.state())
                    return
                raise HttpError(404, "no such endpoint")
            except HttpError as exc:
                self._json(exc.status, {"error": exc.message})

        def _static(self):
            if not frontend_dir:
                raise HttpError(404, "no frontend bundle configured")
            rel = self.path.split("?", 1)[0]
            if rel in ("", "/"):
                rel = "/index.html"
            path = os.path.normpath(os.path.join(frontend_dir, rel.lstrip("/")))
            if not path.startswith(os.path.abspath(frontend_dir) + os.sep) and path != os.path.abspath(frontend_dir):
                raise HttpError(404, "not found")
            if not os.path.isfile(path):
                raise HttpError(404, "not found")
            ctype = mimetypes.guess_type(path)[0] or "application/octet-stream"
            with open(path, "rb") as fh:
                data = fh.read()
            self.send_response(200)
            self.send_header("Content-Type", ctype)
            self.send_header("Content-Length", str(len(data)))
            self.end_headers()
            self.wfile.write(data)

    return Handler


def make_server(
    port: int = 0,
    data_dir: str | None = None,
    frontend_dir: str | None = None,
) -> ThreadingHTTPServer:
    """Build (but do not start) the HTTP server; port 0 picks a free port."""
    if frontend_dir is None:
        default_bundle = os.path.join(os.getcwd(), "frontend", "dist")
        if os.path.isdir(default_bundle):
            frontend_dir = default_bundle
    if frontend_dir is not None:
        frontend_dir = os.path.abspath(frontend_dir)
    store = BoardStore(data_dir)
    server = ThreadingHTTPServer(("", port), _make_handler(store, frontend_dir))
    server.daemon_threads = True
    return server


def serve(
    port: int | None = None,
    data_dir: str | None = None,
    frontend_dir: str | None = None,
) -> None:
    """Run the service until interrupted; honors CRYPTOCOMB_PORT and _DATA."""
    if port is None:
        port = int(os.environ.get("CRYPTOCOMB_PORT") or DEFAULT_PORT)
    if data_dir is None:
        data_dir = os.environ.get("CRYPTOCOMB_DATA") or None
    server = make_server(port, data_dir, frontend_dir)
    host, actual_port = server.server_address[0], server.server_address[1]
    print(f"cryptocomb board service on http://{host or '0.0.0.0'}:{actual_port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
