"""Bridge inspection by drone (BF-5): traffic delay savings and cost savings.

The per-inspection cost rates come from a published operational breakdown.
Its per-line labor figures do not reproduce their own printed subtotals
(the source table is internally inconsistent), so the printed payroll and
equipment subtotals are canonical here and the raw line items are kept only
for audit.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class LaborLine:
    """One crew line from the published cost table (audit only)."""

    role: str
    crew: int
    hours: float
    hourly_rate: float
    fringe: float
    printed_total: float

    def computed_total(self) -> float:
        """Crew cost with fringe; does not equal printed_total in the source."""
        return self.crew * self.hours * self.hourly_rate * (1.0 + self.fringe)


SNOOPER_LABOR = (
    LaborLine("bridge specialist", 3, 8.0, 37.0, 0.45, 854.0),
    LaborLine("highway technician", 3, 8.0, 21.0, 0.45, 727.0),
)
DRONE_LABOR = (LaborLine("bridge specialist", 2, 4.0, 37.0, 0.45, 427.0),)

SNOOPER_PAYROLL = 2018.0
SNOOPER_EQUIPMENT = 1125.0
SNOOPER_RATE_OFFHOURS = 4152.0
DRONE_PAYROLL = 427.0
DRONE_EQUIPMENT = 95.0
DRONE_RATE_OFFHOURS = 735.0


def core_rate(payroll: float, equipment: float) -> float:
    """Core-hours cost rate per inspection: payroll plus equipment."""
    return payroll + equipment


def snooper_rate_core() -> float:
    return core_rate(SNOOPER_PAYROLL, SNOOPER_EQUIPMENT)


def drone_rate_core() -> float:
    return core_rate(DRONE_PAYROLL, DRONE_EQUIPMENT)


def vehicles_delayed(
    inspections: float, closure_hours: float, traffic_per_lane_hour: float
) -> float:
    """Vehicles caught by lane closures across a year of inspections."""
    return inspections * closure_hours * traffic_per_lane_hour


def delay_hours_saved(
    inspections: float,
    closure_hours_traditional: float,
    closure_hours_drone: float,
    traffic_per_lane_hour: float,
    delay_min_per_vehicle: float,
) -> float:
    """Hours of traffic delay avoided by the shorter drone closures."""
    slow = vehicles_delayed(inspections, closure_hours_traditional, traffic_per_lane_hour)
    fast = vehicles_delayed(inspections, closure_hours_drone, traffic_per_lane_hour)
    return (slow - fast) * delay_min_per_vehicle / 60.0


def delay_time_value(
    inspections: float,
    closure_hours_traditional: float,
    closure_hours_drone: float,
    traffic_per_lane_hour: float,
    delay_min_per_vehicle: float,
    vtts: float,
    occupants_per_vehicle: float = 1.0,
) -> float:
    """BF-5 delay branch: avoided delay hours priced at the travel-time value."""
    hours = delay_hours_saved(
        inspections,
        closure_hours_traditional,
        closure_hours_drone,
        traffic_per_lane_hour,
        delay_min_per_vehicle,
    )
    return hours * occupants_per_vehicle * vtts


def blended_inspection_cost(
    count: float, core_share: float, rate_core: float, rate_offhours: float
) -> float:
    """Annual cost of ``count`` inspections split across core and off hours."""
    core_count = count * core_share
    return core_count * rate_core + (count - core_count) * rate_offhours


@dataclass(frozen=True)
class InspectionCostSavings:
    """The three annual cost lines and the savings they net to."""

    all_snooper: float        # every inspection by snooper truck
    drone_share: float        # the drone-capable half done by drone
    snooper_share: float      # the remaining half still by snooper
    savings: float


def inspection_cost_savings(
    inspections: float,
    drone_capable: float,
    core_share: float,
    snooper_core: float | None = None,
    snooper_offhours: float | None = None,
    drone_core: float | None = None,
    drone_offhours: float | None = None,
) -> InspectionCostSavings:
    """BF-5 cost branch: status-quo cost minus the mixed drone/snooper cost."""
    if drone_capable > inspections:
        raise ValueError(
            f"drone-capable count {drone_capable} exceeds total inspections "
            f"{inspections}"
        )
    sc = snooper_rate_core() if snooper_core is None else snooper_core
    so = SNOOPER_RATE_OFFHOURS if snooper_offhours is None else snooper_offhours
    dc = drone_rate_core() if drone_core is None else drone_core
    do = DRONE_RATE_OFFHOURS if drone_offhours is None else drone_offhours
    all_snooper = blended_inspection_cost(inspections, core_share, sc, so)
    by_drone = blended_inspection_cost(drone_capable, core_share, dc, do)
    remaining = blended_inspection_cost(inspections - drone_capable, core_share, sc, so)
    return InspectionCostSavings(
        all_snooper=all_snooper,
        drone_share=by_drone,
        snooper_share=remaining,
        savings=all_snooper - (by_drone + remaining),
    )
