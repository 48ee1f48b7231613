from fastapi.testclient import TestClient

from newtonmaps.service import app

client = TestClient(app)


def test_analyze_endpoint():
    res = client.post("/analyze", json={"spec": "z^2-1"})
    assert res.status_code == 200
    body = res.json()
    assert body["schema"] == "1"
    assert body["degree"] == 2


def test_analyze_parse_error_422():
    res = client.post("/analyze", json={"spec": "z z"})
    assert res.status_code == 422


def test_classify_endpoint():
    res = client.post("/classify", json={"d": 3})
    assert res.status_code == 200
    assert res.json()["count"] == 3


def test_classify_validation():
    res = client.post("/classify", json={"d": 7})
    assert res.status_code == 422


def test_render_endpoint():
    res = client.post(
        "/render",
        json={"spec": "z^3-1", "width": 32, "height": 32},
    )
    assert res.status_code == 200
    body = res.json()
    assert body["resolution"] == [32, 32]
    assert "image_rgb_base64" in body


def test_render_no_attractor_400():
    res = client.post(
        "/render",
        json={"spec": "(z^2+1)/z", "already_newton": True, "width": 32, "height": 32},
    )
    assert res.status_code == 400


def test_verify_endpoint():
    res = client.post("/verify", json={"suite": "tables"})
    assert res.status_code == 200
    assert res.json()["passed"]
