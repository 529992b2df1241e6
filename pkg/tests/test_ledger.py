"""Band arithmetic, the annual ledger, and its serialization.

The randomized block drives a few hundred ledgers through the additivity,
ordering, permutation, and determinism properties end to end.
"""
from __future__ import annotations

import json

import numpy as np
import pytest

from aamcba.ingest import FACTOR_IDS
from aamcba.ledger import (
    FACTOR_LABELS,
    AnnualResult,
    BandValue,
    band_sum,
    cagr,
    compute_npi,
    results_rows,
    summary_dict,
    tax_passthrough,
    write_band_csv,
    write_npi_csv,
    write_results_csv,
    write_summary_json,
)


def test_labels_cover_every_factor():
    assert set(FACTOR_LABELS) == set(FACTOR_IDS)


def test_band_ordering_and_normalization():
    band = BandValue(1.0, 2.0, 3.0)
    assert (band.lower, band.mean, band.upper) == (1.0, 2.0, 3.0)
    assert band.width == 2.0

    # rounding-level inversions are normalized instead of rejected
    eps = 1e-12
    tightened = BandValue(2.0 + eps, 2.0, 2.0 - eps)
    assert tightened.lower == 2.0
    assert tightened.upper == 2.0

    with pytest.raises(ValueError, match="out of order"):
        BandValue(3.0, 2.0, 4.0)
    with pytest.raises(ValueError, match="must be finite"):
        BandValue(0.0, float("nan"), 1.0)


def test_band_arithmetic():
    a = BandValue(1.0, 2.0, 3.0)
    b = BandValue(10.0, 20.0, 30.0)
    s = a + b
    assert (s.lower, s.mean, s.upper) == (11.0, 22.0, 33.0)
    assert (a.shift(5.0).lower, a.shift(5.0).upper) == (6.0, 8.0)
    doubled = a.scale(2.0)
    assert (doubled.lower, doubled.mean, doubled.upper) == (2.0, 4.0, 6.0)
    flipped = a.scale(-1.0)
    assert (flipped.lower, flipped.mean, flipped.upper) == (-3.0, -2.0, -1.0)
    assert BandValue.point(7.0).width == 0.0


def test_band_sum_and_passthrough():
    total = band_sum([BandValue(0.0, 1.0, 2.0), BandValue(1.0, 1.0, 1.0)])
    assert (total.lower, total.mean, total.upper) == (1.0, 2.0, 3.0)
    assert band_sum([]).mean == 0.0
    tax = tax_passthrough(1234.5)
    assert tax.lower == tax.mean == tax.upper == 1234.5


def test_compute_npi_subtracts_cost_from_every_channel():
    benefits = {"BF1": BandValue(10.0, 20.0, 30.0), "BF8": BandValue.point(5.0)}
    npi = compute_npi(benefits, capex=4.0, opex=1.0)
    assert (npi.lower, npi.mean, npi.upper) == (10.0, 20.0, 30.0)


def test_annual_result_validation_and_views():
    result = AnnualResult(
        year=2022,
        benefits={"BF1": BandValue(1.0, 2.0, 3.0), "BF8": BandValue.point(4.0)},
        capex=1.5,
        opex=0.5,
    )
    assert result.cost == 2.0
    assert result.total_benefits.mean == 6.0
    assert result.npi.mean == 4.0
    with pytest.raises(ValueError, match="unknown benefit factor ids"):
        AnnualResult(year=2022, benefits={"BF10": BandValue.point(1.0)},
                     capex=0.0, opex=0.0)


def test_cagr():
    assert cagr(100.0, 121.0, 2) == pytest.approx(0.1, rel=1e-12)
    with pytest.raises(ValueError, match="periods must be positive"):
        cagr(100.0, 121.0, 0)
    with pytest.raises(ValueError, match="positive endpoints"):
        cagr(-1.0, 121.0, 2)


def _tiny_results() -> list[AnnualResult]:
    return [
        AnnualResult(
            year=2022,
            benefits={"BF1": BandValue(1.0, 2.0, 3.0), "BF8": BandValue.point(1.0)},
            capex=1.0, opex=0.5,
        ),
        AnnualResult(
            year=2023,
            benefits={"BF1": BandValue(2.0, 4.0, 6.0), "BF8": BandValue.point(1.0)},
            capex=0.5, opex=0.5,
        ),
    ]


def test_results_rows_order_and_content():
    rows = results_rows(_tiny_results())
    items_2022 = [r[1] for r in rows if r[0] == 2022]
    assert items_2022 == ["BF1", "BF8", "capex", "opex", "npi"]
    npi_row = [r for r in rows if r[0] == 2022 and r[1] == "npi"][0]
    assert npi_row[2:] == (0.5, 1.5, 2.5)
    capex_row = [r for r in rows if r[0] == 2022 and r[1] == "capex"][0]
    assert capex_row[2] == capex_row[3] == capex_row[4] == 1.0


def test_csv_writers(tmp_path):
    results = _tiny_results()
    results_path = tmp_path / "results.csv"
    write_results_csv(results_path, results)
    lines = results_path.read_text().splitlines()
    assert lines[0] == "year,item,lower,mean,upper"
    assert lines[1] == "2022,BF1,1.0,2.0,3.0"

    npi_path = tmp_path / "npi.csv"
    write_npi_csv(npi_path, results)
    npi_lines = npi_path.read_text().splitlines()
    assert npi_lines[0] == "year,lower,mean,upper"
    assert npi_lines[1] == "2022,0.5,1.5,2.5"
    assert npi_lines[2] == "2023,2.0,4.0,6.0"

    with pytest.raises(ValueError, match="got 2 years but 1 band values"):
        write_band_csv(tmp_path / "bad.csv", [2022, 2023], [BandValue.point(1.0)])


def test_float_formatting_round_trips():
    results = [
        AnnualResult(
            year=2022,
            benefits={"BF1": BandValue(0.1, 0.2, 1.0 / 3.0)},
            capex=0.0, opex=0.0,
        )
    ]
    rows = results_rows(results)
    # repr() formatting means the CSV cell parses back to the exact double
    assert float(repr(rows[0][4])) == 1.0 / 3.0


def test_summary_dict_contents():
    summary = summary_dict(_tiny_results())
    assert summary["first_year"] == 2022
    assert summary["last_year"] == 2023
    assert summary["benefit_totals_mean"] == {"BF1": 6.0, "BF8": 2.0}
    assert summary["capex_total"] == 1.5
    assert summary["opex_total"] == 1.0
    assert summary["npi_mean_by_year"] == {"2022": 1.5, "2023": 4.0}
    assert summary["npi_total_mean"] == 5.5
    assert summary["npi_mean_cagr"] == pytest.approx(4.0 / 1.5 - 1.0, rel=1e-12)


def test_summary_cagr_omitted_when_undefined():
    losing = [
        AnnualResult(
            year=2022, benefits={"BF1": BandValue(-3.0, -2.0, -1.0)},
            capex=0.0, opex=0.0,
        ),
        AnnualResult(
            year=2023, benefits={"BF1": BandValue(1.0, 2.0, 3.0)},
            capex=0.0, opex=0.0,
        ),
    ]
    assert "npi_mean_cagr" not in summary_dict(losing)
    with pytest.raises(ValueError, match="no annual results"):
        summary_dict([])


def test_summary_json_is_stable(tmp_path):
    path_a = tmp_path / "a.json"
    path_b = tmp_path / "b.json"
    write_summary_json(path_a, _tiny_results())
    write_summary_json(path_b, _tiny_results())
    assert path_a.read_bytes() == path_b.read_bytes()
    payload = json.loads(path_a.read_text())
    assert payload["npi_total_mean"] == 5.5


def _random_ledger(rng: np.random.Generator) -> list[AnnualResult]:
    factors = rng.choice(FACTOR_IDS, size=rng.integers(1, 10), replace=False)
    years = range(2022, 2022 + int(rng.integers(2, 6)))
    results = []
    for year in years:
        benefits = {}
        for factor_id in factors:
            mean = float(rng.normal(0.0, 1e6))
            spread = abs(float(rng.normal(0.0, 1e5)))
            benefits[factor_id] = BandValue(mean - spread, mean, mean + spread)
        results.append(
            AnnualResult(
                year=year,
                benefits=benefits,
                capex=float(rng.uniform(0.0, 1e6)),
                opex=float(rng.uniform(0.0, 1e5)),
            )
        )
    return results


def test_randomized_ledger_properties():
    rng = np.random.default_rng(20260818)
    for _ in range(200):
        results = _random_ledger(rng)
        for result in results:
            npi = result.npi
            # additivity: NPI mean is the benefit means less the cost
            want = sum(b.mean for b in result.benefits.values()) - result.cost
            assert npi.mean == pytest.approx(want, rel=1e-9, abs=1e-6)
            # ordering survives the arithmetic
            assert npi.lower <= npi.mean <= npi.upper
            # dropping one factor moves the NPI by exactly that band
            if len(result.benefits) > 1:
                dropped_id = sorted(result.benefits)[0]
                kept = {
                    k: v for k, v in result.benefits.items() if k != dropped_id
                }
                reduced = compute_npi(kept, result.capex, result.opex)
                delta = result.benefits[dropped_id]
                assert npi.mean - reduced.mean == pytest.approx(
                    delta.mean, rel=1e-9, abs=1e-6
                )
                assert npi.lower - reduced.lower == pytest.approx(
                    delta.lower, rel=1e-9, abs=1e-6
                )
            # permutation invariance: summation order cannot matter
            forward = band_sum([result.benefits[k] for k in sorted(result.benefits)])
            backward = band_sum(
                [result.benefits[k] for k in sorted(result.benefits, reverse=True)]
            )
            assert forward.mean == pytest.approx(backward.mean, rel=1e-12)
            assert forward.lower == pytest.approx(backward.lower, rel=1e-12)
            assert forward.upper == pytest.approx(backward.upper, rel=1e-12)


def test_randomized_ledger_serialization_is_deterministic(tmp_path):
    rng = np.random.default_rng(20260818)
    results = _random_ledger(rng)
    first = tmp_path / "first.csv"
    second = tmp_path / "second.csv"
    write_results_csv(first, results)
    write_results_csv(second, results)
    assert first.read_bytes() == second.read_bytes()
    json_first = tmp_path / "first.json"
    json_second = tmp_path / "second.json"
    write_summary_json(json_first, results)
    write_summary_json(json_second, results)
    assert json_first.read_bytes() == json_second.read_bytes()
