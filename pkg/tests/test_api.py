import threading

import pytest
from fastapi.testclient import TestClient

from server import app
from turan.core.cache import CacheCounters


@pytest.fixture(scope="module")
def client():
    # 不进入 lifespan：测试中不启动后台预热
    return TestClient(app)


def _data(response):
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "ok", body.get("message")
    return body["data"]


def test_health(client):
    body = client.get("/api/health").json()
    assert body["status"] == "ok"
    assert body["service"] == "X-Turan"
    assert "connected" in body["cache"]


def test_cache_stats(client):
    assert client.get("/api/cache/stats").status_code == 200


def test_cache_counters_under_concurrent_updates():
    counters = CacheCounters()

    def bump():
        for _ in range(2000):
            counters.record("hits")
            counters.record("misses")

    threads = [threading.Thread(target=bump) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert counters.snapshot() == {"hits": 16000, "misses": 16000, "writes": 0}
    assert counters.hit_rate == "50.0%"
    assert CacheCounters().hit_rate == "0%"


def test_families(client):
    rows = _data(client.get("/families"))
    assert {"K5_3", "F7", "FF6", "star"} <= {row["name"] for row in rows}

    fano = _data(client.get("/families/F7"))
    assert len(fano["members"]) == 7
    assert fano["intersecting"] and fano["covers_pairs"]
    assert fano["expected"] == "1/27"

    star = _data(client.get("/families/star", params={"n": 5}))
    assert star["vertices"] == 5
    assert len(star["members"]) == 6


def test_lagrangian(client):
    data = _data(client.get("/lagrangian/K5_3"))
    assert data["value"] == pytest.approx(0.08, abs=1e-9)
    assert data["certified"] and data["matches_expected"]


def test_census(client):
    rows = _data(client.get("/classify/5"))
    assert len(rows) == 1


def test_shift(client):
    data = _data(client.get("/shift/F7"))
    assert data["policy"] == "deterministic"
    assert len(data["traces"]) == 1


def test_symmetrize(client):
    data = _data(client.get("/symmetrize/turan/10", params={"alpha": 0.02}))
    assert data["ratio"] == 1.0
    assert data["audit"]["passed"]


@pytest.mark.parametrize(
    "path",
    ["/families/nope", "/lagrangian/nope", "/classify/9", "/shift/T6", "/symmetrize/turan/41"],
)
def test_errors_use_envelope(client, path):
    response = client.get(path)
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "error"
    assert body["message"]


def test_alpha_is_validated(client):
    assert client.get("/symmetrize/turan/10", params={"alpha": 0.5}).status_code == 422
