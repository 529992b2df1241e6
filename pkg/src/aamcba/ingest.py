"""Scenario and series ingestion for the cost-benefit engine.

Input series are two-column (year, value) CSV files or inline entries in a
scenario document. Scenario documents are YAML or JSON with four sections:
``constants``, ``series`` (split into ``exogenous`` and ``historical``),
``orders``, and ``toggles``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Iterable, Mapping

import numpy as np
import yaml


class ScenarioError(ValueError):
    """A series or scenario document failed validation."""


FACTOR_IDS = ("BF1", "BF2", "BF3", "BF4", "BF5", "BF6", "BF7", "BF8", "BF9")

#: Constants stored as vectors rather than scalars.
VECTOR_CONSTANTS = ("DSN", "survival_rates", "CAS")

#: Toggle defaults. Every toggle is scenario-overridable; unknown toggle
#: names are rejected so typos do not silently fall back to defaults.
TOGGLE_DEFAULTS: dict[str, Any] = {
    "bf2_use_trip_miles": False,
    "bf3_single_ratio": False,
    "bf4_ci_sign": "as_printed",
    "bf6_incremental": False,
    "bf6_matching_area": True,
    "bf7_case": 5,
    "amortize_capex_years": None,
    "include_mean_when_differenced": False,
}

_REQUIRED_CONSTANTS: dict[str, tuple[str, ...]] = {
    "BF1": ("VTTS_2015", "MHI_2015", "trip_time_saved_min"),
    "BF2": (
        "trip_distance_miles",
        "ground_fatality_per_100m_miles",
        "air_fatality_per_100m_miles",
    ),
    "BF3": (
        "market_value_2019",
        "market_cagr",
        "us_market_2019",
        "annual_parcels",
        "parcel_fraction",
        "operational_days",
        "round_trip_min",
        "reserve_fraction",
        "driver_hours_per_day",
        "packages_per_driver_day",
        "truck_cost_per_hour",
        "drone_capital_cost",
        "drone_operating_cost",
        "ATS_min",
        "VDTS",
    ),
    "BF4": (
        "trip_time_saved_min",
        "trip_distance_miles",
        "warehouse_rent_psf_month",
        "warehouse_nnn_psf_month",
        "warehouse_size_sf",
        "warehouse_wage_year",
        "warehouse_area_per_worker_sf",
        "truck_cost_per_mile",
        "truck_payload_lb",
        "evtol_cost_per_mile",
        "evtol_payload_lb",
        "evtol_cost_share",
        "VDTS",
    ),
    "BF5": (
        "VTTS_2015",
        "MHI_2015",
        "heavy_inspections_per_year",
        "drone_capable_inspections",
        "core_hours_share",
        "lane_closure_hours_traditional",
        "lane_closure_hours_drone",
        "traffic_per_lane_hour",
        "delay_min_per_vehicle",
    ),
    "BF6": (
        "farms_total",
        "farms_adopting",
        "soybean_yield_uplift",
        "corn_yield_uplift",
        "wheat_yield_uplift",
        "cost_savings_per_acre_soybean",
        "cost_savings_per_acre_corn",
        "cost_savings_per_acre_wheat",
        "livestock_hours_saved_hill",
        "livestock_hours_saved_grassland",
        "farm_labor_rate",
        "herd_size_case_study",
    ),
    "BF7": ("ohca_per_100k", "DSN", "survival_rates", "CAS"),
    "BF8": (),
    # The replaced-trip count folds in package deliveries, so the GHG factor
    # carries the package-market constants as well.
    "BF9": (
        "scc_2020",
        "scm_2020",
        "scn_2020",
        "scghg_discount",
        "scghg_base_year",
        "mpg_fleet",
        "co2_share_of_ghg",
        "co2_tons_per_gallon",
        "evtol_emission_ratio",
        "us_annual_trips",
        "seats_per_evtol",
        "trip_distance_miles",
        "market_value_2019",
        "market_cagr",
        "us_market_2019",
        "annual_parcels",
        "parcel_fraction",
    ),
}

_REQUIRED_EXOGENOUS: dict[str, tuple[str, ...]] = {
    "BF1": ("passenger_trips",),
    "BF2": ("passenger_trips", "us_population"),
    "BF3": ("us_population",),
    "BF4": ("cargo_trips",),
    "BF5": (),
    "BF6": (),
    "BF7": (),
    "BF8": ("tax_income",),
    "BF9": ("passenger_trips", "cargo_trips", "us_population"),
}

_REQUIRED_HISTORICAL: dict[str, tuple[str, ...]] = {
    "BF1": ("mhi",),
    "BF2": ("vmt_us", "population", "vsl"),
    "BF3": ("population",),
    "BF4": (),
    "BF5": ("mhi",),
    "BF6": (
        "soybean_area",
        "corn_area",
        "wheat_area",
        "soybean_yield",
        "corn_yield",
        "wheat_yield",
        "soybean_price",
        "corn_price",
        "wheat_price",
        "livestock",
    ),
    "BF7": ("population", "vsl"),
    "BF8": (),
    "BF9": ("vmt_us", "population"),
}

#: Sanity brackets for warnings only; values outside are suspicious, not fatal.
_MAGNITUDE_BRACKETS: dict[str, tuple[float, float]] = {
    "VTTS_2015": (2.0, 100.0),
    "market_cagr": (0.0, 1.5),
    "parcel_fraction": (0.0, 1.0),
    "mpg_fleet": (5.0, 100.0),
    "co2_share_of_ghg": (0.9, 1.0),
    "evtol_cost_share": (0.0, 1.0),
    "core_hours_share": (0.0, 1.0),
    "reserve_fraction": (0.0, 1.0),
}


@dataclass(frozen=True)
class TimeSeries:
    """A named annual series: consecutive integer years, finite values."""

    name: str
    years: tuple[int, ...]
    values: tuple[float, ...]
    unit: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "years", tuple(int(y) for y in self.years))
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if not self.years:
            raise ScenarioError(f"series '{self.name}' is empty")
        if len(self.years) != len(self.values):
            raise ScenarioError(
                f"series '{self.name}' has {len(self.years)} years "
                f"but {len(self.values)} values"
            )
        for a, b in zip(self.years, self.years[1:]):
            if b != a + 1:
                raise ScenarioError(
                    f"series '{self.name}' years must step by 1, "
                    f"got {a} followed by {b}"
                )
        for y, v in zip(self.years, self.values):
            if not np.isfinite(v):
                raise ScenarioError(
                    f"series '{self.name}' has non-finite value at year {y}"
                )

    @property
    def first_year(self) -> int:
        return self.years[0]

    @property
    def last_year(self) -> int:
        return self.years[-1]

    def array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def value_at(self, year: int) -> float:
        try:
            return self.values[self.years.index(year)]
        except ValueError:
            raise ScenarioError(
                f"series '{self.name}' has no value for year {year} "
                f"(covers {self.first_year}-{self.last_year})"
            ) from None


@dataclass(frozen=True)
class Scenario:
    """A complete analysis setup: constants, series, pinned orders, toggles."""

    name: str
    horizon_start: int
    horizon_end: int
    constants: dict[str, Any] = field(default_factory=dict)
    input_series: dict[str, TimeSeries] = field(default_factory=dict)
    historical_series: dict[str, TimeSeries] = field(default_factory=dict)
    orders: dict[str, tuple[int, int, int]] = field(default_factory=dict)
    toggles: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.horizon_end < self.horizon_start:
            raise ScenarioError(
                f"horizon end {self.horizon_end} precedes start {self.horizon_start}"
            )
        unknown = set(self.toggles) - set(TOGGLE_DEFAULTS)
        if unknown:
            raise ScenarioError(f"unknown toggles: {sorted(unknown)}")

    @property
    def horizon_years(self) -> tuple[int, ...]:
        return tuple(range(self.horizon_start, self.horizon_end + 1))

    def constant(self, key: str) -> Any:
        if key not in self.constants:
            raise ScenarioError(f"scenario constant '{key}' is missing")
        return self.constants[key]

    def toggle(self, key: str) -> Any:
        if key not in TOGGLE_DEFAULTS:
            raise ScenarioError(f"unknown toggle '{key}'")
        return self.toggles.get(key, TOGGLE_DEFAULTS[key])

    def exogenous(self, name: str) -> TimeSeries:
        if name not in self.input_series:
            raise ScenarioError(f"exogenous series '{name}' is missing")
        return self.input_series[name]

    def historical(self, name: str) -> TimeSeries:
        if name not in self.historical_series:
            raise ScenarioError(f"historical series '{name}' is missing")
        return self.historical_series[name]

    def with_overrides(
        self,
        constants: Mapping[str, Any] | None = None,
        toggles: Mapping[str, Any] | None = None,
    ) -> "Scenario":
        """A copy with constants/toggles overridden (used by CLI flags)."""
        new_constants = dict(self.constants)
        new_constants.update(constants or {})
        new_toggles = dict(self.toggles)
        new_toggles.update(toggles or {})
        return replace(self, constants=new_constants, toggles=new_toggles)


def load_series(path: str | Path, name: str | None = None) -> TimeSeries:
    """Read a two-column (year, value) CSV into a TimeSeries.

    A non-numeric first row is treated as a header; its second cell becomes
    the unit unless it is just 'value'. Duplicate years and year gaps are
    rejected with row-level messages.
    """
    path = Path(path)
    if not path.is_file():
        raise ScenarioError(f"series file not found: {path}")
    label = name or path.stem
    years: list[int] = []
    values: list[float] = []
    unit = ""
    lines = path.read_text(encoding="utf-8").splitlines()
    for row_no, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        cells = [c.strip() for c in line.split(",")]
        if len(cells) != 2:
            raise ScenarioError(
                f"{path}:{row_no}: expected 2 columns, got {len(cells)}"
            )
        if not years and not _is_number(cells[0]):
            if cells[1].lower() not in ("value", "values", ""):
                unit = cells[1]
            continue
        if not _is_number(cells[0]) or not _is_number(cells[1]):
            raise ScenarioError(
                f"{path}:{row_no}: non-numeric cell in row {cells!r}"
            )
        year = int(float(cells[0]))
        if year in years:
            raise ScenarioError(f"{path}:{row_no}: duplicate year {year}")
        if years and year != years[-1] + 1:
            raise ScenarioError(
                f"{path}:{row_no}: year gap between {years[-1]} and {year}"
            )
        years.append(year)
        values.append(float(cells[1]))
    if not years:
        raise ScenarioError(f"{path}: no data rows")
    return TimeSeries(name=label, years=tuple(years), values=tuple(values), unit=unit)


def _is_number(text: str) -> bool:
    try:
        float(text)
    except ValueError:
        return False
    return True


def _series_from_spec(name: str, spec: Any, base_dir: Path) -> TimeSeries:
    """Build a TimeSeries from one of the three inline forms.

    Accepted forms: a {year: value} mapping, {start, values[, unit]},
    or {file[, unit]} pointing at a CSV relative to the scenario file.
    """
    if not isinstance(spec, Mapping):
        raise ScenarioError(f"series '{name}' must be a mapping, got {type(spec).__name__}")
    if "file" in spec:
        ts = load_series(base_dir / str(spec["file"]), name=name)
        if spec.get("unit"):
            ts = replace(ts, unit=str(spec["unit"]))
        return ts
    if "values" in spec:
        if "start" not in spec:
            raise ScenarioError(f"series '{name}' with 'values' needs 'start'")
        start = int(spec["start"])
        vals = list(spec["values"])
        years = tuple(range(start, start + len(vals)))
        return TimeSeries(name, years, tuple(float(v) for v in vals),
                          unit=str(spec.get("unit", "")))
    # {year: value} mapping
    try:
        items = sorted((int(k), float(v)) for k, v in spec.items())
    except (TypeError, ValueError):
        raise ScenarioError(
            f"series '{name}' must map years to numbers, "
            f"use 'start'/'values', or reference a 'file'"
        ) from None
    years = tuple(y for y, _ in items)
    return TimeSeries(name, years, tuple(v for _, v in items))


def load_scenario(path: str | Path) -> Scenario:
    """Parse a YAML or JSON scenario document."""
    path = Path(path)
    if not path.is_file():
        raise ScenarioError(f"scenario file not found: {path}")
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        doc = json.loads(text)
    else:
        doc = yaml.safe_load(text)
    if not isinstance(doc, Mapping):
        raise ScenarioError(f"{path}: scenario document must be a mapping")
    return scenario_from_dict(doc, base_dir=path.parent,
                              fallback_name=path.stem)


def scenario_from_dict(
    doc: Mapping[str, Any],
    base_dir: str | Path = ".",
    fallback_name: str = "scenario",
) -> Scenario:
    base_dir = Path(base_dir)
    horizon = doc.get("horizon")
    if not isinstance(horizon, Mapping) or "start" not in horizon or "end" not in horizon:
        raise ScenarioError("scenario needs horizon: {start: <year>, end: <year>}")

    constants: dict[str, Any] = {}
    for key, val in (doc.get("constants") or {}).items():
        if key in VECTOR_CONSTANTS:
            constants[key] = tuple(float(v) for v in val)
        else:
            constants[key] = float(val)

    series = doc.get("series") or {}
    if not isinstance(series, Mapping):
        raise ScenarioError("'series' section must be a mapping")
    extra = set(series) - {"exogenous", "historical"}
    if extra:
        raise ScenarioError(
            f"'series' subsections must be 'exogenous'/'historical', got {sorted(extra)}"
        )
    input_series = {
        str(k): _series_from_spec(str(k), v, base_dir)
        for k, v in (series.get("exogenous") or {}).items()
    }
    historical_series = {
        str(k): _series_from_spec(str(k), v, base_dir)
        for k, v in (series.get("historical") or {}).items()
    }

    orders: dict[str, tuple[int, int, int]] = {}
    for key, val in (doc.get("orders") or {}).items():
        try:
            p, d, q = (int(v) for v in val)
        except (TypeError, ValueError):
            raise ScenarioError(f"order for '{key}' must be a [p, d, q] triple") from None
        orders[str(key)] = (p, d, q)

    return Scenario(
        name=str(doc.get("name", fallback_name)),
        horizon_start=int(horizon["start"]),
        horizon_end=int(horizon["end"]),
        constants=constants,
        input_series=input_series,
        historical_series=historical_series,
        orders=orders,
        toggles=dict(doc.get("toggles") or {}),
    )


def scenario_to_dict(s: Scenario) -> dict[str, Any]:
    """Inverse of scenario_from_dict; series in start/values form."""

    def dump_series(ts: TimeSeries) -> dict[str, Any]:
        out: dict[str, Any] = {"start": ts.first_year, "values": list(ts.values)}
        if ts.unit:
            out["unit"] = ts.unit
        return out

    return {
        "name": s.name,
        "horizon": {"start": s.horizon_start, "end": s.horizon_end},
        "constants": {
            k: (list(v) if k in VECTOR_CONSTANTS else v)
            for k, v in s.constants.items()
        },
        "series": {
            "exogenous": {k: dump_series(v) for k, v in s.input_series.items()},
            "historical": {k: dump_series(v) for k, v in s.historical_series.items()},
        },
        "orders": {k: list(v) for k, v in s.orders.items()},
        "toggles": dict(s.toggles),
    }


def save_scenario(s: Scenario, path: str | Path) -> None:
    """Write a scenario back out; load_scenario(save) round-trips equal."""
    path = Path(path)
    doc = scenario_to_dict(s)
    if path.suffix.lower() == ".json":
        path.write_text(json.dumps(doc, indent=2, sort_keys=False) + "\n",
                        encoding="utf-8")
    else:
        path.write_text(yaml.safe_dump(doc, sort_keys=False), encoding="utf-8")


def validate_scenario(
    s: Scenario, factors: Iterable[str] | None = None
) -> list[str]:
    """Check a scenario against the requirements of the enabled factors.

    Hard failures raise ScenarioError naming the offending key, series, or
    year. Suspicious-but-legal values come back as warning strings.
    """
    enabled = tuple(factors) if factors is not None else FACTOR_IDS
    for f in enabled:
        if f not in FACTOR_IDS:
            raise ScenarioError(f"unknown benefit factor '{f}'")

    horizon = s.horizon_years
    warnings: list[str] = []

    needed_constants: list[tuple[str, str]] = []
    needed_exo: list[tuple[str, str]] = []
    needed_hist: list[tuple[str, str]] = []
    for f in enabled:
        needed_constants += [(f, k) for k in _REQUIRED_CONSTANTS[f]]
        needed_exo += [(f, k) for k in _REQUIRED_EXOGENOUS[f]]
        needed_hist += [(f, k) for k in _REQUIRED_HISTORICAL[f]]
    if ("BF2" in enabled and s.toggle("bf2_use_trip_miles")) or "BF9" in enabled:
        needed_constants.append(("BF2", "seats_per_evtol"))
    # the cost ledger always runs
    needed_exo += [("costs", "capex"), ("costs", "opex")]

    for f, key in needed_constants:
        if key not in s.constants:
            raise ScenarioError(
                f"scenario constant '{key}' is required by {f} but missing"
            )
    for f, name in needed_exo:
        if name not in s.input_series:
            raise ScenarioError(
                f"exogenous series '{name}' is required by {f} but missing"
            )
        ts = s.input_series[name]
        missing = [y for y in horizon if not ts.first_year <= y <= ts.last_year]
        if missing:
            raise ScenarioError(
                f"exogenous series '{name}' does not cover year {missing[0]} "
                f"(covers {ts.first_year}-{ts.last_year})"
            )
    for f, name in needed_hist:
        if name not in s.historical_series:
            raise ScenarioError(
                f"historical series '{name}' is required by {f} but missing"
            )
        ts = s.historical_series[name]
        if ts.last_year >= s.horizon_start:
            raise ScenarioError(
                f"historical series '{name}' extends to {ts.last_year}, "
                f"into the forecast horizon starting {s.horizon_start}"
            )
        if len(ts.values) < 8:
            raise ScenarioError(
                f"historical series '{name}' has {len(ts.values)} points; "
                f"at least 8 are needed for forecasting"
            )

    if "BF7" in enabled:
        dsn = s.constant("DSN")
        surv = s.constant("survival_rates")
        cas = s.constant("CAS")
        if not (len(dsn) == len(surv) == len(cas)):
            raise ScenarioError(
                f"DSN/survival_rates/CAS lengths differ: "
                f"{len(dsn)}/{len(surv)}/{len(cas)}"
            )
        if len(dsn) < 2:
            raise ScenarioError("DSN/survival_rates/CAS need at least 2 entries")
        if dsn[0] != 0:
            raise ScenarioError(f"DSN must start at 0 (no-drone case), got {dsn[0]}")
        case = s.toggle("bf7_case")
        if not isinstance(case, int) or not 1 <= case <= len(dsn) - 1:
            raise ScenarioError(
                f"bf7_case must be an integer in 1..{len(dsn) - 1}, got {case!r}"
            )
        if any(b < a for a, b in zip(surv, surv[1:])):
            warnings.append("survival_rates are not non-decreasing across DSN cases")
        if any(b < a for a, b in zip(dsn, dsn[1:])):
            warnings.append("DSN station counts are not non-decreasing")

    if s.toggle("bf4_ci_sign") not in ("as_printed", "positive_extra_cost"):
        raise ScenarioError(
            "toggle bf4_ci_sign must be 'as_printed' or 'positive_extra_cost', "
            f"got {s.toggle('bf4_ci_sign')!r}"
        )
    amortize = s.toggle("amortize_capex_years")
    if amortize is not None and (not isinstance(amortize, int) or amortize < 1):
        raise ScenarioError(
            f"toggle amortize_capex_years must be a positive integer or null, "
            f"got {amortize!r}"
        )

    if "BF2" in enabled:
        a_g = s.constant("ground_fatality_per_100m_miles")
        a_a = s.constant("air_fatality_per_100m_miles")
        if a_a >= a_g:
            warnings.append(
                f"air fatality rate ({a_a}) is not below ground rate ({a_g}); "
                "safety benefit will be non-positive"
            )
    for name in ("capex", "opex"):
        ts = s.input_series.get(name)
        if ts and any(v < 0 for v in ts.values):
            warnings.append(f"'{name}' has negative entries")
    for key, (lo, hi) in _MAGNITUDE_BRACKETS.items():
        if key in s.constants:
            v = s.constants[key]
            if not lo <= v <= hi:
                warnings.append(
                    f"constant '{key}'={v} is outside the expected range [{lo}, {hi}]"
                )
    return warnings


def required_inputs(
    factors: Iterable[str] | None = None,
) -> tuple[set[str], set[str], set[str]]:
    """Constant, exogenous, and historical names the given factors need."""
    enabled = tuple(factors) if factors is not None else FACTOR_IDS
    constants: set[str] = set()
    exogenous: set[str] = {"capex", "opex"}
    historical: set[str] = set()
    for f in enabled:
        if f not in FACTOR_IDS:
            raise ScenarioError(f"unknown benefit factor '{f}'")
        constants.update(_REQUIRED_CONSTANTS[f])
        exogenous.update(_REQUIRED_EXOGENOUS[f])
        historical.update(_REQUIRED_HISTORICAL[f])
    return constants, exogenous, historical


def cargo_trips_from_tonnage(
    total_tons: float,
    payload_lb: float,
    shares: Iterable[float],
    start_year: int,
    name: str = "cargo_trips",
    lb_per_ton: float = 2000.0,
) -> TimeSeries:
    """Spread a multi-year cargo tonnage forecast into annual trip counts.

    Total tonnage is converted to pounds, divided by the per-trip payload,
    and distributed across consecutive years by the share vector (which must
    sum to 1).
    """
    shares = [float(x) for x in shares]
    if not shares:
        raise ScenarioError("share vector is empty")
    if any(x < 0 for x in shares):
        raise ScenarioError("share vector has negative entries")
    total_share = sum(shares)
    if abs(total_share - 1.0) > 1e-9:
        raise ScenarioError(f"share vector sums to {total_share}, expected 1")
    if payload_lb <= 0:
        raise ScenarioError(f"payload must be positive, got {payload_lb}")
    total_trips = total_tons * lb_per_ton / payload_lb
    years = tuple(range(start_year, start_year + len(shares)))
    return TimeSeries(name, years, tuple(total_trips * x for x in shares),
                      unit="trips")


def default_scenario_path() -> Path:
    """Path of the bundled default scenario."""
    return Path(__file__).parent / "data" / "default_scenario.yaml"
