import json
import math

import pytest

import linkscreen as ls


def test_bounds_and_caustic():
    b = ls.screen_bounds(30, 45, 60, 55)
    assert b["x_min"] == 15 and b["x_max"] == 75
    assert b["y_min"] == 25 and b["y_max"] == 85
    assert b["square_assumption_holds"] is True

    lo, hi = ls.caustic_y(30, 45, 60, 55, 75.0)
    assert lo == pytest.approx(hi)
    assert hi == pytest.approx(math.sqrt(1905.0))
    assert ls.ridge_y(30, 45, 60, 55, 50.0) == pytest.approx(
        math.sqrt(33956250.0) / 100.0, rel=1e-12
    )


def test_classification():
    rv = ls.regge_variables(100, 110, 130, 140)
    assert (rv["s"], rv["r"], rv["u"], rv["v"]) == (240, -10, -30, 0)
    cr = ls.classify_case(100, 110, 130, 140)
    assert cr["case"] == "8"
    assert cr["signs"] == (-1, -1, 0)
    assert ls.regge_conjugate(30, 45, 60, 55) == (65, 50, 35, 40)
    g = ls.grashof_test(100, 110, 130, 140)
    assert g["boundary"] and g["satisfied"]
    law = ls.conjugation_sign_law(30, 45, 60, 55)
    assert law["negated"] is True


def test_canonicalize():
    assert ls.canonicalize(65, 50, 35, 40)[:4] == (35, 40, 65, 50)


def test_kinematics():
    mv = ls.movement_types(30, 45, 60, 55, "b")
    assert mv["input"] == "crank"
    assert mv["matches_case_table"] is True

    rep = ls.trace_cycle(30, 45, 60, 55, "b", samples_per_turn=180)
    assert rep["closed"] is True
    assert rep["caustic_loops"] == 1
    assert rep["chirality"] == 1
    assert {e["gate"] for e in rep["gate_events"]} == {"N", "S", "E", "W"}

    cfg = ls.solve_position(30, 45, 60, 55, "b", math.pi)
    assert cfg["x"] == pytest.approx(75.0)
    assert cfg["y"] == pytest.approx(math.sqrt(1905.0))


def test_orbit():
    orbit = ls.symmetry_orbit([30, 45, 44.25, 60, 55, 47.6875])
    assert len(orbit) == 144
    assert ls.symmetry_orbit([1, 1, 1, 1, 1, 1])[0]["symbol"] == (1,) * 6
    assert len(ls.symmetry_orbit([1, 1, 1, 1, 1, 1])) == 1
    assert ls.triad_feasible([30, 45, 44.25, 60, 55, 47.6875]) is True


def test_rendering():
    text = ls.screen_csv(30, 45, 60, 55, resolution=16)
    assert text.startswith("curve,x,y")
    doc = json.loads(ls.screen_json(30, 45, 60, 55, resolution=16))
    assert doc["schema"] == 1
    assert len(doc["caustic_upper"]) == 16
    assert doc["bounds"]["square_assumption_holds"] is True


def test_errors():
    with pytest.raises(ValueError):
        ls.screen_bounds(1, 1, 1, 3)
    with pytest.raises(ValueError):
        ls.solve_position(65, 50, 35, 40, "a", math.pi)
