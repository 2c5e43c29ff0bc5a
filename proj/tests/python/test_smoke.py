"""Smoke tests for the python bindings: imports, one solve per scenario,
a few stream-primitive values and determinism."""

import math

import pytest

import h2dri


def test_stream_primitives():
    # gamma/(gamma-1) * R * dT for one mole of hydrogen
    assert h2dri.gas_physical_energy("H2", 1.0, 298.0) == pytest.approx(0.0)
    assert h2dri.gas_physical_energy("H2", 1.0, 398.0) == pytest.approx(
        1.41 / 0.41 * 8.314 * 100.0
    )
    assert h2dri.gas_chemical_energy("H2", 1.0) == pytest.approx(241.8e3)
    ex = h2dri.gas_physical_exergy("H2", 1.0, 398.0)
    assert 0.0 < ex < h2dri.gas_physical_energy("H2", 1.0, 398.0)


def test_carbon_equivalent_branches():
    m_energy = 0.5 / 3.6e6
    ce = h2dri.carbon_equivalent(1.3 * 1.6, 1.6, 120.0, m_energy, 1.2, 1.5)
    assert ce["CE"] == pytest.approx(1.95)
    ce0 = h2dri.carbon_equivalent(0.0, 1.6, 120.0, m_energy, 1.2, 1.5)
    assert ce0["CET"] == 0.0


@pytest.mark.parametrize("scenario", h2dri.SCENARIOS)
def test_scenarios_solve(scenario):
    r = h2dri.solve_scenario(scenario, 1273.0)
    assert 0.0 < r["EE"] < 1.0
    assert 0.0 < r["EXE"] < r["EE"]
    assert r["n1_mol"] > 0 and r["n2_mol"] > 0
    assert r["closure_residual"] < 1e-6
    if scenario == "zero-carbon":
        assert r["CO2_t"] == 0.0
        assert r["EC"] == r["EE"]
    if scenario == "grid":
        assert r["CO2_t"] > 0.0
        assert r["EC"] < r["EE"]


def test_determinism():
    a = h2dri.solve_scenario("zero-carbon", 1148.0)
    b = h2dri.solve_scenario("zero-carbon", 1148.0)
    assert a["n2_mol"] == b["n2_mol"]
    assert a["EE"] == b["EE"]


def test_sweep_and_trends():
    temps = [1023.0, 1148.0, 1273.0]
    rows = h2dri.run_sweep("zero-carbon", temps)
    gas = [r["n1_mol"] + r["n2_mol"] for r in rows]
    assert gas[0] > gas[1] > gas[2]
    ee = [r["EE"] for r in rows]
    assert ee[0] > ee[2]


def test_overrides_and_errors():
    r = h2dri.solve_scenario("zero-carbon", 1273.0, overrides={"furnace.c_dri": "500"})
    base = h2dri.solve_scenario("zero-carbon", 1273.0)
    assert r["n2_mol"] != base["n2_mol"]
    with pytest.raises(ValueError):
        h2dri.solve_scenario("zero-carbon", 1273.0, overrides={"furnace.w_fe": "1.5"})
    with pytest.raises(ValueError):
        h2dri.solve_scenario("not-a-scenario", 1273.0)
