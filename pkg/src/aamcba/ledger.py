"""Yearly benefit/cost ledger and net-positive-gain arithmetic.

Benefit factors arrive as three-channel bands (lower, mean, upper) carried
through from the forecast confidence intervals. Costs are point values.
The net positive gain for a year is the band sum of all benefit factors
shifted down by that year's capital and operating spend.
"""
from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .ingest import FACTOR_IDS

FACTOR_LABELS = {
    "BF1": "passenger trip time savings",
    "BF2": "traffic safety improvement",
    "BF3": "package delivery savings",
    "BF4": "air cargo savings",
    "BF5": "bridge inspection savings",
    "BF6": "farming productivity",
    "BF7": "emergency medical response",
    "BF8": "tax revenue",
    "BF9": "greenhouse gas reduction",
}

# Channel ordering can slip by a rounding error when three nearly equal
# inputs run through the same formula; anything past this is a real bug.
_ORDER_SLACK = 1e-9


@dataclass(frozen=True)
class BandValue:
    """A value with its 95% band: lower bound, mean, upper bound."""

    lower: float
    mean: float
    upper: float

    def __post_init__(self) -> None:
        for channel in (self.lower, self.mean, self.upper):
            if not math.isfinite(channel):
                raise ValueError(f"band channels must be finite, got {channel}")
        slack = _ORDER_SLACK * max(1.0, abs(self.mean))
        if self.mean < self.lower - slack or self.upper < self.mean - slack:
            raise ValueError(
                "band channels out of order: "
                f"lower={self.lower}, mean={self.mean}, upper={self.upper}"
            )
        object.__setattr__(self, "lower", min(self.lower, self.mean))
        object.__setattr__(self, "upper", max(self.upper, self.mean))

    @classmethod
    def point(cls, value: float) -> "BandValue":
        return cls(value, value, value)

    def __add__(self, other: "BandValue") -> "BandValue":
        if not isinstance(other, BandValue):
            return NotImplemented
        return BandValue(
            self.lower + other.lower,
            self.mean + other.mean,
            self.upper + other.upper,
        )

    def shift(self, delta: float) -> "BandValue":
        return BandValue(self.lower + delta, self.mean + delta, self.upper + delta)

    def scale(self, factor: float) -> "BandValue":
        if factor < 0:
            return BandValue(
                self.upper * factor, self.mean * factor, self.lower * factor
            )
        return BandValue(
            self.lower * factor, self.mean * factor, self.upper * factor
        )

    @property
    def width(self) -> float:
        return self.upper - self.lower


def band_sum(bands: Iterable[BandValue]) -> BandValue:
    total = BandValue.point(0.0)
    for band in bands:
        total = total + band
    return total


def tax_passthrough(tax_income: float) -> BandValue:
    """Tax revenue enters the ledger as given, with no forecast spread."""
    return BandValue.point(tax_income)


def compute_npi(
    benefits: Mapping[str, BandValue], capex: float, opex: float
) -> BandValue:
    """Net positive gain: all benefit bands less the year's spend."""
    return band_sum(benefits.values()).shift(-(capex + opex))


@dataclass(frozen=True)
class AnnualResult:
    """One horizon year: per-factor benefit bands and the cost lines."""

    year: int
    benefits: dict[str, BandValue]
    capex: float
    opex: float

    def __post_init__(self) -> None:
        unknown = set(self.benefits) - set(FACTOR_IDS)
        if unknown:
            raise ValueError(f"unknown benefit factor ids: {sorted(unknown)}")

    @property
    def total_benefits(self) -> BandValue:
        return band_sum(self.benefits.values())

    @property
    def cost(self) -> float:
        return self.capex + self.opex

    @property
    def npi(self) -> BandValue:
        return compute_npi(self.benefits, self.capex, self.opex)


def cagr(first: float, last: float, periods: int) -> float:
    """Compound annual growth rate over the given number of year steps."""
    if periods <= 0:
        raise ValueError(f"periods must be positive, got {periods}")
    if first <= 0 or last <= 0:
        raise ValueError(
            f"growth rate needs positive endpoints, got {first} and {last}"
        )
    return (last / first) ** (1.0 / periods) - 1.0


def _fmt(value: float) -> str:
    return repr(float(value))


def results_rows(results: Sequence[AnnualResult]) -> list[tuple]:
    """Long-form (year, item, lower, mean, upper) rows, costs as points."""
    rows: list[tuple] = []
    for result in results:
        for factor_id in FACTOR_IDS:
            if factor_id not in result.benefits:
                continue
            band = result.benefits[factor_id]
            rows.append((result.year, factor_id, band.lower, band.mean, band.upper))
        rows.append((result.year, "capex", result.capex, result.capex, result.capex))
        rows.append((result.year, "opex", result.opex, result.opex, result.opex))
        npi = result.npi
        rows.append((result.year, "npi", npi.lower, npi.mean, npi.upper))
    return rows


def write_results_csv(path: Path, results: Sequence[AnnualResult]) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["year", "item", "lower", "mean", "upper"])
        for year, item, lower, mean, upper in results_rows(results):
            writer.writerow([year, item, _fmt(lower), _fmt(mean), _fmt(upper)])


def write_band_csv(
    path: Path, years: Sequence[int], bands: Sequence[BandValue]
) -> None:
    if len(years) != len(bands):
        raise ValueError(
            f"got {len(years)} years but {len(bands)} band values"
        )
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["year", "lower", "mean", "upper"])
        for year, band in zip(years, bands):
            writer.writerow([year, _fmt(band.lower), _fmt(band.mean), _fmt(band.upper)])


def write_factor_csv(
    path: Path, factor_id: str, results: Sequence[AnnualResult]
) -> None:
    rows = [r for r in results if factor_id in r.benefits]
    write_band_csv(
        path, [r.year for r in rows], [r.benefits[factor_id] for r in rows]
    )


def write_npi_csv(path: Path, results: Sequence[AnnualResult]) -> None:
    write_band_csv(path, [r.year for r in results], [r.npi for r in results])


def summary_dict(results: Sequence[AnnualResult]) -> dict:
    """Horizon roll-up: totals per factor, cost totals, NPI trajectory."""
    if not results:
        raise ValueError("no annual results to summarize")
    years = [r.year for r in results]
    factor_totals = {}
    for factor_id in FACTOR_IDS:
        bands = [r.benefits[factor_id] for r in results if factor_id in r.benefits]
        if bands:
            factor_totals[factor_id] = band_sum(bands).mean
    npi_means = [r.npi.mean for r in results]
    summary = {
        "first_year": years[0],
        "last_year": years[-1],
        "benefit_totals_mean": factor_totals,
        "capex_total": sum(r.capex for r in results),
        "opex_total": sum(r.opex for r in results),
        "npi_mean_by_year": dict(zip(map(str, years), npi_means)),
        "npi_total_mean": sum(npi_means),
    }
    if len(years) > 1 and npi_means[0] > 0 and npi_means[-1] > 0:
        summary["npi_mean_cagr"] = cagr(
            npi_means[0], npi_means[-1], years[-1] - years[0]
        )
    return summary


def write_summary_json(path: Path, results: Sequence[AnnualResult]) -> None:
    payload = json.dumps(
        summary_dict(results), sort_keys=True, separators=(",", ": "), indent=2
    )
    Path(path).write_text(payload + "\n")
