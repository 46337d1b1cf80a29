import math

import numpy as np
import pytest

import opburgers as ob


def test_special_functions():
    assert ob.mittag_leffler(1.0, 1.0) == pytest.approx(math.e, rel=1e-14)
    assert ob.mittag_leffler(0.5, 0.5) == pytest.approx(1.9523604891825570933, rel=1e-13)
    values = ob.mittag_leffler(1.0, np.array([0.0, 1.0, -1.0]))
    assert np.allclose(values, np.exp([0.0, 1.0, -1.0]), rtol=1e-14)
    assert ob.hermite(3, 2.0, 1.0) == 20.0
    assert ob.gamma(5.0) == pytest.approx(24.0)
    assert ob.heat_kernel(1.0, 1.0) == pytest.approx(0.2606967974212739207, rel=1e-9)
    assert ob.brownian_solution(1.0, 1.0) == pytest.approx(-1.526591601894094802, rel=1e-9)


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        ob.mittag_leffler(1.5, 1.0)
    with pytest.raises(ob.OpBurgersError):
        ob.hermite(21, 0.5, 0.5)
    with pytest.raises(ValueError):
        ob.describe("no-such-id")


def test_catalog():
    ids = ob.scenario_ids()
    assert len(ids) == 9
    assert "schwarzschild" in ids
    info = ob.describe("schwarzschild")
    assert info["equation"] == "4.25"
    assert len(info["axes"]) == 4
    assert "invariant" in info["candidates"]


def test_residuals():
    exact = ob.residual("euclid-classic", "invariant", step_fraction=0.01)
    control = ob.residual("euclid-classic", "invariant", step_fraction=0.01, perturb=0.1)
    assert exact["max_abs"] < 1e-8
    assert control["max_abs"] > 10 * exact["max_abs"]
    assert set(exact["per_term"]) == {"time", "nonlinear[x]", "diffusion", "source"}
    sweep = ob.sweep("hyp-frac", "invariant")
    assert 1.1 <= sweep["order"] <= 1.9
    assert sweep["monotone"]


def test_coefficients_and_transform():
    assert ob.riccati(0.1, -1.0, 1.0) == pytest.approx(1.0 / 3.0, rel=1e-15)
    assert ob.eigen_check(1.0, 0.8) < 1e-8
    assert ob.forward_heat("euclid-classic", 2, 1.0, 1.0) == pytest.approx(4.0 / 3.0, rel=1e-9)
    x, t = 0.4, 1.1
    b = ob.riccati(0.1, -1.0, t)
    raw = ob.backward("euclid-classic", "invariant", x, t, gauge=False)
    # Anchored at x0 = -1: exp(A b ((x + 1)^2 / 2)).
    assert raw == pytest.approx(math.exp(b / (t + 1.0) * (x + 1.0) ** 2 / 2), rel=1e-10)
