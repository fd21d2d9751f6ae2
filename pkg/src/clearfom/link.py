"""Point-to-point interconnect models and link-level CLEAR.

A link is a transmission line between a sender and a receiver plus the
active devices hanging off it (source, modulator, detector, drivers, serdes,
repeaters). Capacity is a min-of-constraints model rather than a
capacity-achieving SNR integral: device bandwidth caps the symbol rate,
an optional per-channel cap reflects modulation limits, and the optical
power budget is a hard feasibility gate per repeater-to-repeater span.
Binary modulation (1 bit/symbol) is assumed throughout.

Crosstalk and device insertion loss are folded into ``loss_db_per_m`` by
config convention; the span budget check uses propagation loss only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from .economics import ExperienceCurve, relative_cost
from .errors import ConfigurationError, DomainError, InfeasibleLinkError
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

__all__ = [
    "ComponentRole",
    "LinkComponent",
    "ElectricalTransport",
    "OpticalTransport",
    "LinkSpec",
    "CapacityResult",
    "SpanBudget",
    "LinkClearResult",
    "repeater_count",
    "span_lengths",
    "link_capacity",
    "p2p_latency",
    "link_energy_per_bit",
    "link_area",
    "link_cost",
    "link_clear",
    "link_factors",
]

# Distributed-RC coefficients: 0.38*R'*C'*L^2 wire delay, and the matching
# rise-time-limited bandwidth 1/(2*pi*0.35*R'*C'*L^2).
RC_DELAY_COEFF = 0.38
RC_BANDWIDTH_COEFF = 0.35


class ComponentRole(str, Enum):
    SOURCE = "source"
    MODULATOR = "modulator"
    DETECTOR = "detector"
    DRIVER = "driver"
    SERDES = "serdes"
    REPEATER = "repeater"
    AMPLIFIER = "amplifier"


@dataclass(frozen=True)
class LinkComponent:
    """One device on the link; repeaters are templates multiplied by count."""

    name: str
    role: ComponentRole
    bandwidth_hz: float = 0.0  # 0 means "not rate-limiting"
    energy_j_per_bit: float = 0.0
    area_m2: float = 0.0
    cost_usd: float = 0.0
    delay_s: float = 0.0
    insertion_loss_db: float | None = None
    output_swing_v: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "role", ComponentRole(self.role))
        for name in ("bandwidth_hz", "energy_j_per_bit", "area_m2", "cost_usd", "delay_s"):
            if getattr(self, name) < 0:
                raise DomainError(f"LinkComponent.{name} must be non-negative")
        if self.insertion_loss_db is not None and self.insertion_loss_db < 0:
            raise DomainError("insertion_loss_db must be non-negative")


@dataclass(frozen=True)
class ElectricalTransport:
    """Distributed-RC wire bundle; ``lanes`` parallel wires carry one bit each."""

    capacitance_f_per_m: float
    resistance_ohm_per_m: float
    voltage_swing_v: float
    lanes: int = 1

    def __post_init__(self):
        if self.capacitance_f_per_m < 0 or self.resistance_ohm_per_m < 0:
            raise DomainError("wire R' and C' must be non-negative")
        if self.voltage_swing_v <= 0:
            raise DomainError("voltage swing must be strictly positive")
        if self.lanes < 1:
            raise DomainError("lanes must be at least 1")


@dataclass(frozen=True)
class OpticalTransport:
    """Guided optical channel, possibly wavelength-multiplexed."""

    loss_db_per_m: float
    group_index: float
    launch_power_w: float
    detector_sensitivity_w: float
    wdm_channels: int = 1
    per_channel_rate_cap_bps: float | None = None

    def __post_init__(self):
        if self.loss_db_per_m < 0:
            raise DomainError("loss_db_per_m must be non-negative")
        if self.group_index < 1:
            raise DomainError("group index must be at least 1")
        if self.launch_power_w <= 0 or self.detector_sensitivity_w <= 0:
            raise DomainError("launch power and sensitivity must be strictly positive")
        if self.wdm_channels < 1:
            raise DomainError("wdm_channels must be at least 1")
        if self.per_channel_rate_cap_bps is not None and self.per_channel_rate_cap_bps <= 0:
            raise DomainError("per_channel_rate_cap_bps must be strictly positive")


@dataclass(frozen=True)
class LinkSpec:
    """Full parameter sheet for one point-to-point link."""

    name: str
    technology: Technology
    length_m: float
    components: tuple[LinkComponent, ...]
    transport: ElectricalTransport | OpticalTransport
    cross_section_width_m: float
    repeater_spacing_m: float | None = None
    cost_curve: ExperienceCurve | None = None

    def __post_init__(self):
        object.__setattr__(self, "technology", Technology(self.technology))
        object.__setattr__(self, "components", tuple(self.components))
        if self.length_m <= 0:
            raise DomainError("length_m must be strictly positive")
        if self.cross_section_width_m < 0:
            raise DomainError("cross_section_width_m must be non-negative")
        if self.repeater_spacing_m is not None:
            if self.repeater_spacing_m <= 0:
                raise DomainError("repeater_spacing_m must be strictly positive")
            if not any(c.role is ComponentRole.REPEATER for c in self.components):
                raise DomainError(
                    "repeater_spacing_m requires a repeater component template")

    @property
    def is_optical(self) -> bool:
        return isinstance(self.transport, OpticalTransport)

    def at_length(self, length_m: float) -> "LinkSpec":
        return replace(self, length_m=length_m)


@dataclass(frozen=True)
class SpanBudget:
    """Power accounting for one repeater-to-repeater span."""

    index: int
    length_m: float
    loss_db: float
    budget_db: float

    @property
    def margin_db(self) -> float:
        return self.budget_db - self.loss_db


@dataclass(frozen=True)
class CapacityResult:
    """Link capacity; zero with a failing span when the budget cannot close."""

    bps: float
    feasible: bool = True
    failing_span: SpanBudget | None = None


def _span_count(length: float, spacing: float) -> int:
    ratio = length / spacing
    nearest = round(ratio)
    # Snap exact multiples that drifted by float rounding, so a 1 mm link
    # repeated every 100 um yields 10 spans, not 11.
    if nearest >= 1 and abs(ratio - nearest) <= 1e-9 * max(1.0, abs(ratio)):
        ratio = float(nearest)
    return max(1, math.ceil(ratio))


def repeater_count(link: LinkSpec) -> int:
    """Intermediate repeaters: ceil(length / spacing) - 1; endpoints excluded."""
    if link.repeater_spacing_m is None:
        return 0
    return _span_count(link.length_m, link.repeater_spacing_m) - 1


def span_lengths(link: LinkSpec) -> list[float]:
    """Unrepeated span lengths, source to sink; the tail span may be shorter."""
    if link.repeater_spacing_m is None:
        return [link.length_m]
    spacing = link.repeater_spacing_m
    n = _span_count(link.length_m, spacing)
    tail = link.length_m - spacing * (n - 1)
    return [spacing] * (n - 1) + [tail]


def _component_multiplicity(link: LinkSpec, component: LinkComponent) -> int:
    if component.role is ComponentRole.REPEATER:
        return repeater_count(link)
    return 1


def _min_positive_bandwidth(link: LinkSpec) -> float:
    bandwidths = [c.bandwidth_hz for c in link.components if c.bandwidth_hz > 0]
    return min(bandwidths) if bandwidths else math.inf


def link_capacity(link: LinkSpec) -> CapacityResult:
    """Deliverable bit rate under the min-of-constraints model.

    Optical: per-channel rate = min(2 * slowest device bandwidth, channel
    cap), times the WDM channel count, gated on the span power budget.
    Electrical: lanes * min(slowest device bandwidth, RC-limited bandwidth
    of the longest unrepeated span).
    """
    device_bw = _min_positive_bandwidth(link)
    if link.is_optical:
        t = link.transport
        budget_db = 10.0 * math.log10(t.launch_power_w / t.detector_sensitivity_w)
        for index, span in enumerate(span_lengths(link)):
            loss_db = t.loss_db_per_m * span
            if loss_db > budget_db:
                return CapacityResult(
                    bps=0.0, feasible=False,
                    failing_span=SpanBudget(index=index, length_m=span,
                                            loss_db=loss_db, budget_db=budget_db))
        per_channel = 2.0 * device_bw
        if t.per_channel_rate_cap_bps is not None:
            per_channel = min(per_channel, t.per_channel_rate_cap_bps)
        if math.isinf(per_channel):
            raise DomainError(
                "optical link needs a device bandwidth or per-channel rate cap")
        return CapacityResult(bps=per_channel * t.wdm_channels)

    t = link.transport
    rc = t.resistance_ohm_per_m * t.capacitance_f_per_m
    if rc > 0:
        longest = max(span_lengths(link))
        rc_bw = 1.0 / (2.0 * math.pi * RC_BANDWIDTH_COEFF * rc * longest ** 2)
    else:
        rc_bw = math.inf
    lane_rate = min(device_bw, rc_bw)
    if math.isinf(lane_rate):
        raise DomainError("electrical link needs a device bandwidth or RC constraint")
    return CapacityResult(bps=t.lanes * lane_rate)


def p2p_latency(link: LinkSpec) -> float:
    """Source-to-detector time of flight for one bit, in seconds."""
    from .constants import CODATA_2018

    delay = sum(c.delay_s * _component_multiplicity(link, c) for c in link.components)
    if link.is_optical:
        return delay + link.transport.group_index * link.length_m / CODATA_2018.light_speed_vacuum
    rc = link.transport.resistance_ohm_per_m * link.transport.capacitance_f_per_m
    return delay + sum(RC_DELAY_COEFF * rc * span ** 2 for span in span_lengths(link))


def link_energy_per_bit(link: LinkSpec) -> float:
    """Energy drawn per transported bit by all devices plus the transport term.

    Electrical transport charges the wire: 0.5 * C' * L * V^2 per bit.
    Optical transport amortizes the continuous launch power over the link
    capacity; repeater re-launch energy belongs to the repeater component.
    """
    energy = sum(c.energy_j_per_bit * _component_multiplicity(link, c)
                 for c in link.components)
    if link.is_optical:
        capacity = link_capacity(link)
        if not capacity.feasible or capacity.bps <= 0:
            raise InfeasibleLinkError(
                f"link '{link.name}' cannot close its power budget",
                failing_span=capacity.failing_span)
        return energy + link.transport.launch_power_w / capacity.bps
    t = link.transport
    return energy + 0.5 * t.capacitance_f_per_m * link.length_m * t.voltage_swing_v ** 2


def link_area(link: LinkSpec) -> float:
    """Device footprints plus the transport strip (per-lane for wires)."""
    area = sum(c.area_m2 * _component_multiplicity(link, c) for c in link.components)
    lanes = 1 if link.is_optical else link.transport.lanes
    return area + link.cross_section_width_m * link.length_m * lanes


def link_cost(link: LinkSpec, eval_year: float | None = None) -> float:
    """Total component cost in USD, optionally scaled to the evaluation year."""
    cost = sum(c.cost_usd * _component_multiplicity(link, c) for c in link.components)
    if cost <= 0:
        raise DomainError(f"link '{link.name}' has no positive component cost")
    if eval_year is not None and link.cost_curve is not None:
        cost *= relative_cost(link.cost_curve, eval_year)
    return cost


def link_factors(link: LinkSpec, eval_year: float | None = None) -> ClearFactors:
    capacity = link_capacity(link)
    if not capacity.feasible or capacity.bps <= 0:
        raise InfeasibleLinkError(
            f"link '{link.name}' cannot close its power budget",
            failing_span=capacity.failing_span)
    return ClearFactors(
        capability=capacity.bps,
        latency=p2p_latency(link),
        energy=link_energy_per_bit(link),
        amount=link_area(link),
        resistance=link_cost(link, eval_year),
    )


@dataclass(frozen=True)
class LinkClearResult:
    clear: ClearValue
    radar: RadarScores


def link_clear(link: LinkSpec, limits: LimitSet,
               eval_year: float | None = None,
               floors: AxisFloors | None = None) -> LinkClearResult:
    """Composite link CLEAR plus limit-normalized radar scores.

    ``floors`` should be shared across a comparison set; when omitted they
    default to this link's own factors with the standard margin.
    """
    if limits.level is not Level.LINK:
        raise ConfigurationError("link radar requires a link-level LimitSet")
    factors = link_factors(link, eval_year)
    if floors is None:
        floors = default_floors([factors])
    return LinkClearResult(
        clear=clear_value(factors, Level.LINK),
        radar=radar_scores(factors, axis_limits(limits), floors),
    )
