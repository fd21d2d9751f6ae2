"""Device-level CLEAR: operating frequency against length, energy, area, cost.

At this level the latency factor is the critical scaling length of the
device (gate length, ring diameter, active-layer side), which is deliberately
independent of the footprint: length measures how compactly the device
delivers its function, footprint measures the silicon it occupies.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .limits import LimitSet, axis_limits
from .metric import (
    AxisFloors,
    ClearFactors,
    ClearValue,
    Level,
    RadarScores,
    Technology,
    clear_value,
    default_floors,
    radar_scores,
)

__all__ = ["DeviceSpec", "device_clear", "device_factors", "radar_normalize", "default_device_floors"]


@dataclass(frozen=True)
class DeviceSpec:
    """Declarative parameter sheet for a single device."""

    name: str
    technology: Technology
    capability_hz: float
    critical_length_m: float
    energy_j_per_bit: float
    footprint_m2: float
    unit_cost_usd: float

    def __post_init__(self):
        object.__setattr__(self, "technology", Technology(self.technology))
        for field_name in ("capability_hz", "critical_length_m", "energy_j_per_bit",
                           "footprint_m2", "unit_cost_usd"):
            if getattr(self, field_name) <= 0:
                raise DomainError(f"DeviceSpec.{field_name} must be strictly positive")

    def limit_violations(self, limits: LimitSet) -> list[str]:
        """Report factors that claim to beat a physical ceiling; never clamps."""
        problems = []
        if self.energy_j_per_bit < limits.min_energy_j_per_bit:
            problems.append("energy_j_per_bit below the minimum switching energy")
        if self.critical_length_m < limits.min_length_m:
            problems.append("critical_length_m below the minimum localization length")
        if self.footprint_m2 < limits.min_area_m2:
            problems.append("footprint_m2 below the minimum device area")
        if self.capability_hz > limits.max_rate_hz:
            problems.append("capability_hz above the maximum transition rate")
        return problems


def device_factors(spec: DeviceSpec) -> ClearFactors:
    return ClearFactors(
        capability=spec.capability_hz,
        latency=spec.critical_length_m,
        energy=spec.energy_j_per_bit,
        amount=spec.footprint_m2,
        resistance=spec.unit_cost_usd,
    )


def device_clear(spec: DeviceSpec) -> ClearValue:
    """Composite device CLEAR: frequency / (length * energy * area * cost)."""
    return clear_value(device_factors(spec), Level.DEVICE)


def radar_normalize(spec: DeviceSpec, limits: LimitSet, floors: AxisFloors) -> RadarScores:
    """Limit-normalized radar scores for one device."""
    if limits.level is not Level.DEVICE:
        raise DomainError("device radar requires a device-level LimitSet")
    return radar_scores(device_factors(spec), axis_limits(limits), floors)


def default_device_floors(specs, margin: float = 10.0) -> AxisFloors:
    """Floors spanning a set of devices under comparison."""
    return default_floors((device_factors(s) for s in specs), margin=margin)
