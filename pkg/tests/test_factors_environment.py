"""Greenhouse-gas savings arithmetic."""
from __future__ import annotations

import pytest

from aamcba.factors.environment import (
    blended_non_co2_cost,
    demand_factor,
    fleet_gallons,
    ghg_savings,
    ground_emissions,
    local_ground_trips,
    non_co2_tons_per_gallon,
    social_cost_forward,
)

from oracles import compound_bruteforce


def test_social_cost_compounding():
    assert social_cost_forward(51.0, 2022, 2020, 0.03) == pytest.approx(
        54.1059, abs=1e-4
    )
    assert social_cost_forward(51.0, 2030, 2020, 0.03) == pytest.approx(
        compound_bruteforce(51.0, 0.03, 10), rel=1e-12
    )
    assert social_cost_forward(51.0, 2020, 2020, 0.03) == 51.0


def test_blended_non_co2_cost():
    got = blended_non_co2_cost(1200.0, 1500.0, 2022, 2020, 0.03)
    assert got == pytest.approx(1350.0 * 1.03**2, rel=1e-12)


def test_non_co2_tons_per_gallon():
    got = non_co2_tons_per_gallon(8.89e-3, 0.993)
    assert got == pytest.approx(6.266868076535731e-05, rel=1e-9)
    with pytest.raises(ValueError, match="CO2 share of GHG"):
        non_co2_tons_per_gallon(8.89e-3, 0.0)
    with pytest.raises(ValueError, match="CO2 share of GHG"):
        non_co2_tons_per_gallon(8.89e-3, 1.2)


def test_emission_split_reproduces_the_share():
    co2, other = ground_emissions(1e9, 22.5, 8.89e-3, 0.993)
    assert co2 / (co2 + other) == pytest.approx(0.993, abs=1e-9)
    assert fleet_gallons(1e9, 22.5) == pytest.approx(1e9 / 22.5, rel=1e-15)
    with pytest.raises(ValueError, match="fleet mpg"):
        fleet_gallons(1e9, 0.0)


def test_trip_attribution_and_demand():
    trips = local_ground_trips(4.11e11, 3.33e8, 3.9e6)
    assert trips == pytest.approx(3.9e6 / 3.33e8 * 4.11e11, rel=1e-15)
    share = demand_factor(2500.0, 8.0e6, 15000.0, trips)
    assert share == pytest.approx((2500.0 + 8.0e6 + 15000.0) / trips, rel=1e-15)
    with pytest.raises(ValueError, match="national population"):
        local_ground_trips(4.11e11, 0.0, 3.9e6)
    with pytest.raises(ValueError, match="ground trip count"):
        demand_factor(2500.0, 8.0e6, 15000.0, 0.0)


def test_ghg_savings_anchor():
    got = ghg_savings(
        2022, 3.2e12, 3.33e8, 3.9e6, 2500.0, 8.0e6, 15000.0,
        51.0, 1200.0, 1500.0, 2020, 0.03, 22.5, 8.89e-3, 0.993,
        4.11e11, 0.35,
    )
    assert got == pytest.approx(554221.6651525829, rel=1e-12)


def test_ghg_savings_scales_with_replaced_trips():
    base_args = (
        2022, 3.2e12, 3.33e8, 3.9e6,
    )
    tail_args = (
        51.0, 1200.0, 1500.0, 2020, 0.03, 22.5, 8.89e-3, 0.993, 4.11e11, 0.35,
    )
    one = ghg_savings(*base_args, 1000.0, 0.0, 0.0, *tail_args)
    two = ghg_savings(*base_args, 2000.0, 0.0, 0.0, *tail_args)
    assert two == pytest.approx(2.0 * one, rel=1e-12)
