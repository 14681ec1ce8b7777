"""HTTP board service: endpoints, errors, persistence, concurrency."""
import threading

import httpx
import pytest

from cryptocomb.server import make_server


@pytest.fixture
def service(tmp_path):
    """A running server on an ephemeral port, with snapshot persistence."""
    data_dir = tmp_path / "data"
    server = make_server(port=0, data_dir=str(data_dir))
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    base = f"http://127.0.0.1:{server.server_address[1]}"
    client = httpx.Client(base_url=base, timeout=10.0)
    try:
        yield client, str(data_dir)
    finally:
        client.close()
        server.shutdown()
        server.server_close()


def make_session(client, body=None):
    resp = client.post("/api/boards", json=body or {"board": "triangular:4"})
    assert resp.status_code == 200
    return resp.json()


def test_create_builder_session(service):
    client, _ = service
    state = make_session(client)
    assert state["n"] == 2 and state["m"] == 2
    assert state["vertices"] == 10 and len(state["regions"]) == 9
    assert state["labels"] == [0] * 10
    assert state["target"] == [0] * 10
    assert state["solvable"] is True
    assert state["solution_count"] == 2
    assert state["invariant"] == [0, 0]
    assert state["target_invariant"] == [0, 0]
    assert state["heads"] == [True] * 10
    assert state["history_len"] == 0
    assert len(state["id"]) == 16


def test_create_explicit_board_with_target(service):
    client, _ = service
    body = {
        "board": {
            "n": 2,
            "vertices": 3,
            "regions": [[0, 1, 2]],
        },
        "m": 3,
        "labels": [1, 2, 0],
        "target": 1,
    }
    state = make_session(client, body)
    assert state["m"] == 3
    assert state["labels"] == [1, 2, 0]
    assert state["target"] == [1, 1, 1]
    assert state["heads"] == [True, False, True]


def test_create_rejects_bad_bodies(service):
    client, _ = service
    assert client.post("/api/boards", json={}).status_code == 400
    assert (
        client.post("/api/boards", json={"board": "square:3"}).status_code == 400
    )
    assert (
        client.post(
            "/api/boards", json={"board": "triangular:3", "target": [0, 1]}
        ).status_code
        == 400
    )
    assert (
        client.post(
            "/api/boards", json={"board": "triangular:3", "target": "zeros"}
        ).status_code
        == 400
    )
    resp = client.post(
        "/api/boards", content=b"{not json", headers={"Content-Type": "application/json"}
    )
    assert resp.status_code == 400


def test_unknown_session_404(service):
    client, _ = service
    resp = client.get("/api/boards/00112233aabbccdd")
    assert resp.status_code == 404
    assert resp.json() == {"error": "unknown_session"}
    assert client.post("/api/boards/00112233aabbccdd/push", json={"region": 0}).status_code == 404
    assert client.get("/api/nonsense").status_code == 404


def test_push_updates_labels_and_history(service):
    client, _ = service
    state = make_session(client)
    sid = state["id"]
    resp = client.post(f"/api/boards/{sid}/push", json={"region": 0})
    assert resp.status_code == 200
    after = resp.json()
    assert after["history_len"] == 1
    flipped = [a != b for a, b in zip(after["labels"], state["labels"])]
    assert sum(flipped) == 3  # one region has n + 1 = 3 vertices
    assert after["invariant"] == [0, 0]  # pushes never move the invariant
    again = client.post(f"/api/boards/{sid}/push", json={"region": 0}).json()
    assert again["labels"] == state["labels"]
    assert again["history_len"] == 2


def test_push_validation(service):
    client, _ = service
    sid = make_session(client)["id"]
    url = f"/api/boards/{sid}/push"
    assert client.post(url, json={}).status_code == 400
    assert client.post(url, json={"region": "0"}).status_code == 400
    assert client.post(url, json={"region": True}).status_code == 400
    assert client.post(url, json={"region": 99}).status_code == 400
    assert client.post(url, json={"region": 0, "times": 0}).status_code == 400
    assert client.post(url, json={"region": 0, "times": -2}).status_code == 400


def test_undo_reverts_and_409_when_empty(service):
    client, _ = service
    state = make_session(client, {"board": "triangular:3", "m": 3})
    sid = state["id"]
    resp = client.post(f"/api/boards/{sid}/undo")
    assert resp.status_code == 409
    assert resp.json() == {"error": "nothing_to_undo"}
    client.post(f"/api/boards/{sid}/push", json={"region": 1, "times": 2})
    after = client.post(f"/api/boards/{sid}/undo").json()
    assert after["labels"] == state["labels"]
    assert after["history_len"] == 0


def test_hint_walks_to_the_target(service):
    client, _ = service
    # target = push region 0, then region 4, applied to all zeros
    target = [1, 1, 1, 1, 0, 0, 1, 1, 0, 0]
    state = make_session(client, {"board": "triangular:4", "target": target})
    assert state["solvable"] is True
    sid = state["id"]
    for _ in range(20):
        resp = client.get(f"/api/boards/{sid}/hint")
        assert resp.status_code == 200
        hint = resp.json()
        if hint["done"]:
            assert hint == {"region": None, "times": 0, "done": True}
            break
        assert hint["times"] >= 1
        push = client.post(
            f"/api/boards/{sid}/push",
            json={"region": hint["region"], "times": hint["times"]},
        )
        assert push.status_code == 200
    else:
        pytest.fail("hint loop did not converge")
    final = client.get(f"/api/boards/{sid}").json()
    assert final["labels"] == final["target"] == target


def test_hint_409_when_unsolvable(service):
    client, _ = service
    target = [1] + [0] * 9
    state = make_session(client, {"board": "triangular:4", "target": target})
    assert state["solvable"] is False
    assert state["solution_count"] == 0
    assert state["invariant"] != state["target_invariant"]
    resp = client.get(f"/api/boards/{state['id']}/hint")
    assert resp.status_code == 409
    assert resp.json() == {"error": "no_solution"}


def test_hint_is_a_get_endpoint(service):
    client, _ = service
    sid = make_session(client)["id"]
    assert client.post(f"/api/boards/{sid}/hint").status_code == 405


def test_state_reports_uncolorable_board(service):
    client, _ = service
    body = {
        "board": {
            "n": 2,
            "vertices": 4,
            "regions": [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]],
        }
    }
    state = make_session(client, body)
    assert state["invariant"] is None
    assert state["target_invariant"] is None
    assert state["solvable"] is True  # all-zero target from all-zero labels


def test_persistence_across_restart(service, tmp_path):
    client, data_dir = service
    state = make_session(client, {"board": "hexagonal:2", "target": 1})
    sid = state["id"]
    client.post(f"/api/boards/{sid}/push", json={"region": 2})
    before = client.get(f"/api/boards/{sid}").json()

    revived = make_server(port=0, data_dir=data_dir)
    thread = threading.Thread(target=revived.serve_forever, daemon=True)
    thread.start()
    try:
        base = f"http://127.0.0.1:{revived.server_address[1]}"
        with httpx.Client(base_url=base, timeout=10.0) as fresh:
            after = fresh.get(f"/api/boards/{sid}").json()
            assert after == before
            # history survives, so undo still works after the restart
            undone = fresh.post(f"/api/boards/{sid}/undo").json()
            assert undone["history_len"] == 0
    finally:
        revived.shutdown()
        revived.server_close()


def test_concurrent_pushes_serialize(service):
    client, _ = service
    sid = make_session(client, {"board": "triangular:3", "m": 5})["id"]
    errors = []

    def hammer():
        try:
            with httpx.Client(
                base_url=str(client.base_url), timeout=10.0
            ) as own:
                for _ in range(10):
                    resp = own.post(f"/api/boards/{sid}/push", json={"region": 0})
                    assert resp.status_code == 200
        except Exception as exc:  # noqa: BLE001 - collected for the main thread
            errors.append(exc)

    threads = [threading.Thread(target=hammer) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    state = client.get(f"/api/boards/{sid}").json()
    assert state["history_len"] == 40
    # 40 pushes of region 0 mod 5: every vertex of that region gained 40 % 5 = 0
    assert state["labels"] == [0] * 6


def test_static_frontend_serving(tmp_path):
    bundle = tmp_path / "dist"
    bundle.mkdir()
    (bundle / "index.html").write_text("<html>board</html>")
    (bundle / "app.js").write_text("console.log('x')")
    server = make_server(port=0, frontend_dir=str(bundle))
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    base = f"http://127.0.0.1:{server.server_address[1]}"
    try:
        with httpx.Client(base_url=base, timeout=10.0) as client:
            root = client.get("/")
            assert root.status_code == 200
            assert "board" in root.text
            assert root.headers["content-type"].startswith("text/html")
            js = client.get("/app.js")
            assert js.status_code == 200
            assert client.get("/../secret").status_code == 404
            assert client.get("/missing.css").status_code == 404
    finally:
        server.shutdown()
        server.server_close()


def test_no_frontend_configured(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)  # no frontend/dist below the cwd
    server = make_server(port=0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    base = f"http://127.0.0.1:{server.server_address[1]}"
    try:
        with httpx.Client(base_url=base, timeout=10.0) as client:
            resp = client.get("/")
            assert resp.status_code == 404
    finally:
        server.shutdown()
        server.server_close()
