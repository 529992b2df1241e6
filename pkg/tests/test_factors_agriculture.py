"""Crop and livestock farming arithmetic."""
from __future__ import annotations

import pytest

from aamcba.factors.agriculture import (
    CropInputs,
    adoption_share,
    agriculture_value,
    crop_cost_savings,
    crop_production_value,
    livestock_savings,
    livestock_savings_per_head,
)


def test_adoption_share_anchor():
    assert adoption_share(13893.0, 77805.0) == pytest.approx(
        0.17856178908810488, rel=1e-12
    )
    with pytest.raises(ValueError, match="total farm count"):
        adoption_share(13893.0, 0.0)


def test_crop_production_modes():
    printed = crop_production_value(50.0, 0.025, 1000.0, 9.5, 0.5)
    assert printed == pytest.approx(50.0 * 1.025 * 1000.0 * 9.5 * 0.5, rel=1e-15)
    increment = crop_production_value(
        50.0, 0.025, 1000.0, 9.5, 0.5, incremental_only=True
    )
    assert increment == pytest.approx(50.0 * 0.025 * 1000.0 * 9.5 * 0.5, rel=1e-15)
    # the printed form values the whole uplifted harvest: 41x the increment here
    assert printed / increment == pytest.approx(1.025 / 0.025, rel=1e-12)


def test_crop_cost_savings():
    assert crop_cost_savings(1000.0, 2.28, 0.5) == pytest.approx(1140.0, rel=1e-15)


def test_livestock_per_head_anchor():
    per_head = livestock_savings_per_head(26.0, 104.0, 13.93, 980.0)
    assert per_head == pytest.approx(1.8478571428571426, rel=1e-12)
    assert livestock_savings(per_head, 1.45e6, 0.2) == pytest.approx(
        per_head * 1.45e6 * 0.2, rel=1e-15
    )
    with pytest.raises(ValueError, match="herd size"):
        livestock_savings_per_head(26.0, 104.0, 13.93, 0.0)


def test_cost_area_override_redirects_the_cost_line():
    corn = CropInputs(
        name="corn", area_acres=3.3e6, yield_per_acre=170.0, price=5.0,
        uplift=0.025, savings_per_acre=11.58, cost_area_acres=4.8e6,
    )
    production, cost, _ = agriculture_value(
        (corn,), livestock_count=0.0, hours_saved_hill=26.0,
        hours_saved_grassland=104.0, labor_rate=13.93, herd_size=980.0,
        share=1.0,
    )
    # production runs on the corn acreage, the cost line on the override
    assert production == pytest.approx(170.0 * 1.025 * 3.3e6 * 5.0, rel=1e-12)
    assert cost == pytest.approx(4.8e6 * 11.58, rel=1e-12)


def test_agriculture_value_sums_crops():
    soy = CropInputs(
        name="soybeans", area_acres=1000.0, yield_per_acre=50.0, price=9.5,
        uplift=0.025, savings_per_acre=2.28,
    )
    wheat = CropInputs(
        name="wheat", area_acres=500.0, yield_per_acre=70.0, price=6.0,
        uplift=0.033, savings_per_acre=2.57,
    )
    production, cost, animals = agriculture_value(
        (soy, wheat), livestock_count=1000.0, hours_saved_hill=26.0,
        hours_saved_grassland=104.0, labor_rate=13.93, herd_size=980.0,
        share=0.5,
    )
    want_production = (
        crop_production_value(50.0, 0.025, 1000.0, 9.5, 0.5)
        + crop_production_value(70.0, 0.033, 500.0, 6.0, 0.5)
    )
    want_cost = crop_cost_savings(1000.0, 2.28, 0.5) + crop_cost_savings(
        500.0, 2.57, 0.5
    )
    assert production == pytest.approx(want_production, rel=1e-12)
    assert cost == pytest.approx(want_cost, rel=1e-12)
    assert animals == pytest.approx(
        livestock_savings_per_head(26.0, 104.0, 13.93, 980.0) * 1000.0 * 0.5,
        rel=1e-12,
    )


def test_incremental_flag_shrinks_production_only():
    soy = CropInputs(
        name="soybeans", area_acres=1000.0, yield_per_acre=50.0, price=9.5,
        uplift=0.025, savings_per_acre=2.28,
    )
    args = dict(
        livestock_count=100.0, hours_saved_hill=26.0, hours_saved_grassland=104.0,
        labor_rate=13.93, herd_size=980.0, share=0.5,
    )
    printed = agriculture_value((soy,), **args)
    lean = agriculture_value((soy,), incremental_only=True, **args)
    assert lean[0] < printed[0] / 40.0
    assert lean[1] == printed[1]
    assert lean[2] == printed[2]
