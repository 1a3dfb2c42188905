"""Endpoint tests for the FastAPI service."""

import pytest
from fastapi.testclient import TestClient

from factorcover import __version__
from factorcover.graphs import complete, graph6_encode
from factorcover.service import app

client = TestClient(app)

K2_K1K3_G6 = "E}vW"  # K_2 v (K_1 u K_3)


def test_healthz():
    resp = client.get("/healthz")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok", "version": __version__}


# ---------------------------------------------------------------------------
# /spectrum


def test_spectrum_graph6():
    resp = client.post("/spectrum", json={"graph6": graph6_encode(complete(4))})
    assert resp.status_code == 200
    data = resp.json()
    assert data["n"] == 4
    values = {v["alpha"]: v["value"] for v in data["values"]}
    assert values[0] == pytest.approx(3.0, abs=1e-9)
    assert values[1] == pytest.approx(6.0, abs=1e-9)
    assert data["quotient"] == []


def test_spectrum_family():
    resp = client.post(
        "/spectrum",
        json={"family": {"family": "H", "n": 6, "k": 0, "s": 2}},
    )
    assert resp.status_code == 200
    data = resp.json()
    assert data["graph6"] == K2_K1K3_G6
    quot = {q["kind"]: q["value"] for q in data["quotient"]}
    assert quot["A"] == pytest.approx(4.20147233821924, abs=1e-8)
    assert quot["Q"] == pytest.approx(8.605551275463988, abs=1e-8)
    values = {v["alpha"]: v["value"] for v in data["values"]}
    assert values[0] == pytest.approx(quot["A"], abs=1e-8)
    assert values[1] == pytest.approx(quot["Q"], abs=1e-8)


def test_spectrum_requires_one_input():
    assert client.post("/spectrum", json={}).status_code == 422
    assert (
        client.post(
            "/spectrum",
            json={"graph6": "C~", "family": {"family": "H", "n": 6, "k": 0, "s": 2}},
        ).status_code
        == 422
    )


def test_spectrum_bad_graph6():
    resp = client.post("/spectrum", json={"graph6": "E"})
    assert resp.status_code == 422
    assert "length mismatch" in resp.json()["detail"]


def test_spectrum_bad_family_params():
    resp = client.post("/spectrum", json={"family": {"family": "H", "n": 3, "k": 0, "s": 2}})
    assert resp.status_code == 422


# ---------------------------------------------------------------------------
# /check


def test_check_matching_cover_fails_on_extremal():
    resp = client.post(
        "/check", json={"graph6": K2_K1K3_G6, "property": "matching-cover", "k": 0}
    )
    assert resp.status_code == 200
    data = resp.json()
    assert data["holds"] is False
    assert data["witness"]["edge"] == [0, 1]


def test_check_matching_cover_lemma_criterion():
    resp = client.post(
        "/check",
        json={"graph6": K2_K1K3_G6, "property": "matching-cover", "k": 0, "criterion": "lemma"},
    )
    data = resp.json()
    assert data["holds"] is False
    assert data["witness"]["vertices"] == [0, 1]


def test_check_holds_with_certificate():
    resp = client.post(
        "/check", json={"graph6": graph6_encode(complete(6)), "property": "matching-cover", "k": 0}
    )
    data = resp.json()
    assert data["holds"] is True
    assert data["certificate"]["kind"] == "matching"
    assert len(data["certificate"]["edges"]) == 3


def test_check_star_cover():
    resp = client.post(
        "/check", json={"graph6": graph6_encode(complete(6)), "property": "star-cover", "k": 2}
    )
    data = resp.json()
    assert data["holds"] is True
    assert data["certificate"]["kind"] == "star-forest"


def test_check_parity_error():
    resp = client.post(
        "/check", json={"graph6": graph6_encode(complete(6)), "property": "matching-cover", "k": 1}
    )
    assert resp.status_code == 422
    assert "parity" in resp.json()["detail"]


# ---------------------------------------------------------------------------
# /sweep and /scan


def test_sweep_endpoint():
    resp = client.post("/sweep", json={"target": "thm1", "n": 6, "k": 0})
    assert resp.status_code == 200
    data = resp.json()
    assert data["passed"] is True
    assert data["graphs_checked"] == 156
    assert data["extremal_confirmed"] is True


def test_sweep_bad_target():
    resp = client.post("/sweep", json={"target": "thm9"})
    assert resp.status_code == 422


def test_scan_endpoint():
    resp = client.post("/scan", json={"which": "h3", "n": 20, "k": 2})
    assert resp.status_code == 200
    data = resp.json()
    assert data["maximizer"] == 1
    assert data["confirmed"] is True
    assert data["s_values"] == [1, 2, 3, 4, 5, 6]


def test_scan_below_bound():
    resp = client.post("/scan", json={"which": "h1", "n": 10, "k": 2})
    assert resp.status_code == 422
