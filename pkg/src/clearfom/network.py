"""Analytical mesh-NoC evaluation: routing, activity, latency, energy, cost.

The evaluation is rate-based, not cycle-accurate: flows are offered loads in
bit/s, each flow's full rate is charged to every directed link on its route,
and latency is the traffic-weighted mean of per-hop clock costs. Queueing
and contention are out of scope.

Routing is X-first dimension order. Express links (long horizontal links
added every ``hop_span`` columns) are taken greedily whenever the far
endpoint does not overshoot the destination column; this rule is the
normative one for all shipped results.

Physical links are undirected full-duplex channels: activity and utilization
are tracked per direction, while area, cost, and the aggregate-capacity
numerator count each channel pair once.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, replace
from enum import Enum
from typing import Mapping, Sequence

import numpy as np

from .errors import ConfigurationError, DomainError
from .link import (
    ComponentRole,
    ElectricalTransport,
    LinkSpec,
    link_area,
    link_energy_per_bit,
)
from .metric import ClearFactors, ClearValue, Level, Technology, clear_value

__all__ = [
    "MeshLink",
    "MeshTopology",
    "NocLinkTemplate",
    "RouterModel",
    "WaferCost",
    "NocConfig",
    "TrafficPattern",
    "TrafficParams",
    "TrafficMatrix",
    "LinkActivity",
    "NetworkAreaCost",
    "NetworkClearResult",
    "NetworkCase",
    "FlitSweepRow",
    "FlitSweepResult",
    "build_mesh",
    "add_express_links",
    "route",
    "generate_traffic",
    "link_activity",
    "avg_latency_clks",
    "network_energy_per_bit",
    "network_area_and_cost",
    "network_clear",
    "flit_sweep",
    "find_crossover",
    "shortest_path_hops",
]

ELECTRONIC_DIE = "electronic"
PHOTONIC_DIE = "photonic"


@dataclass(frozen=True)
class MeshLink:
    """Undirected physical link between two node ids (a < b)."""

    a: int
    b: int
    technology: Technology
    hop_span: int = 1

    def __post_init__(self):
        object.__setattr__(self, "technology", Technology(self.technology))
        if self.a == self.b:
            raise DomainError("a link cannot connect a node to itself")
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)
        if self.hop_span < 1:
            raise DomainError("hop_span must be at least 1")

    @property
    def express(self) -> bool:
        return self.hop_span > 1


@dataclass(frozen=True)
class MeshTopology:
    rows: int
    cols: int
    spacing_m: float
    base_links: tuple[MeshLink, ...]
    express_links: tuple[MeshLink, ...] = ()

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DomainError("mesh dimensions must be at least 1x1")
        if self.spacing_m <= 0:
            raise DomainError("spacing_m must be strictly positive")
        expected = self.rows * (self.cols - 1) + self.cols * (self.rows - 1)
        if len(self.base_links) != expected:
            raise DomainError(f"a {self.rows}x{self.cols} mesh needs {expected} base links")

    @property
    def node_count(self) -> int:
        return self.rows * self.cols

    def node_id(self, row: int, col: int) -> int:
        return row * self.cols + col

    def node_rc(self, node: int) -> tuple[int, int]:
        return divmod(node, self.cols)

    def all_links(self) -> tuple[MeshLink, ...]:
        return self.base_links + self.express_links

    def link_length_m(self, link: MeshLink) -> float:
        return link.hop_span * self.spacing_m


def build_mesh(rows: int, cols: int, spacing_m: float,
               technology: Technology | str) -> MeshTopology:
    """Grid of neighbor links only, all tagged with one technology."""
    if rows < 1 or cols < 1:
        raise DomainError("mesh dimensions must be at least 1x1")
    technology = Technology(technology)
    links = []
    for r in range(rows):
        for c in range(cols):
            node = r * cols + c
            if c + 1 < cols:
                links.append(MeshLink(node, node + 1, technology))
            if r + 1 < rows:
                links.append(MeshLink(node, node + cols, technology))
    return MeshTopology(rows=rows, cols=cols, spacing_m=spacing_m,
                        base_links=tuple(links))


def add_express_links(topology: MeshTopology, hop_span: int,
                      technology: Technology | str) -> MeshTopology:
    """Add horizontal express links every ``hop_span`` columns in each row."""
    if hop_span < 2:
        raise DomainError("an express link must span at least 2 hops")
    technology = Technology(technology)
    added = []
    for r in range(topology.rows):
        col = 0
        while col + hop_span <= topology.cols - 1:
            added.append(MeshLink(topology.node_id(r, col),
                                  topology.node_id(r, col + hop_span),
                                  technology, hop_span=hop_span))
            col += hop_span
    return replace(topology, express_links=topology.express_links + tuple(added))


class _RouteIndex:
    """Per-topology lookup tables shared across many route computations."""

    def __init__(self, topology: MeshTopology):
        self.topology = topology
        self.links: dict[tuple[int, int], MeshLink] = {}
        for link in topology.all_links():
            self.links[(link.a, link.b)] = link
            self.links[(link.b, link.a)] = link
        # Rightward/leftward express spans keyed by the node they start from.
        self.express_right: dict[int, int] = {}
        self.express_left: dict[int, int] = {}
        for link in topology.express_links:
            self.express_right[link.a] = link.hop_span
            self.express_left[link.b] = link.hop_span

    def walk(self, src: int, dst: int):
        """Yield (from, to) node pairs along the X-then-Y path."""
        cols = self.topology.cols
        r1, c1 = divmod(src, cols)
        r2, c2 = divmod(dst, cols)
        node, col = src, c1
        express_right = self.express_right
        express_left = self.express_left
        while col != c2:
            if c2 > col:
                span = express_right.get(node, 0)
                span = span if 0 < span <= c2 - col else 1
            else:
                span = express_left.get(node, 0)
                span = -(span if 0 < span <= col - c2 else 1)
            nxt = node + span
            yield node, nxt
            node, col = nxt, col + span
        step = cols if r2 > r1 else -cols
        while node != dst:
            nxt = node + step
            yield node, nxt
            node = nxt

    def route(self, src: int, dst: int) -> list[tuple[int, int, MeshLink]]:
        return [(u, v, self.links[(u, v)]) for u, v in self.walk(src, dst)]


def route(topology: MeshTopology, src: int, dst: int) -> list[tuple[int, int, MeshLink]]:
    """Deterministic X-then-Y path as (from, to, link) hops; empty if src == dst."""
    n = topology.node_count
    if not (0 <= src < n and 0 <= dst < n):
        raise DomainError("src and dst must be valid node ids")
    return _RouteIndex(topology).route(src, dst)


class TrafficPattern(str, Enum):
    UNIFORM = "uniform"
    HOTSPOT = "hotspot"
    EXPONENTIAL_LOCALITY = "exponential_locality"


@dataclass(frozen=True)
class TrafficParams:
    """Knobs for the synthetic generators; only the relevant ones are read."""

    injection_bps_per_node: float
    hotspot_fraction: float = 0.5
    hotspot_nodes: tuple[int, ...] | None = None
    hotspot_count: int = 1
    locality_scale_hops: float = 4.0

    def __post_init__(self):
        if self.injection_bps_per_node < 0:
            raise DomainError("injection rate must be non-negative")
        if not 0.0 <= self.hotspot_fraction <= 1.0:
            raise DomainError("hotspot_fraction must lie in [0, 1]")
        if self.hotspot_count < 1:
            raise DomainError("hotspot_count must be at least 1")
        if self.locality_scale_hops <= 0:
            raise DomainError("locality_scale_hops must be strictly positive")


@dataclass(eq=False)
class TrafficMatrix:
    """Offered load in bit/s per ordered (source, destination) pair."""

    rates: np.ndarray

    def __post_init__(self):
        rates = np.asarray(self.rates, dtype=float)
        if rates.ndim != 2 or rates.shape[0] != rates.shape[1]:
            raise DomainError("traffic matrix must be square")
        if not np.all(np.isfinite(rates)) or np.any(rates < 0):
            raise DomainError("traffic rates must be finite and non-negative")
        if np.any(np.diagonal(rates) != 0):
            raise DomainError("self-traffic is not allowed")
        self.rates = rates

    @property
    def node_count(self) -> int:
        return self.rates.shape[0]

    @property
    def total_bps(self) -> float:
        return float(self.rates.sum())


def _manhattan(topology: MeshTopology, src: int, dst: int) -> int:
    r1, c1 = topology.node_rc(src)
    r2, c2 = topology.node_rc(dst)
    return abs(r1 - r2) + abs(c1 - c2)


def generate_traffic(pattern: TrafficPattern | str, params: TrafficParams,
                     topology: MeshTopology, seed: int) -> TrafficMatrix:
    """Synthetic offered-load matrix; identical seeds give identical matrices."""
    pattern = TrafficPattern(pattern)
    n = topology.node_count
    if n < 2:
        raise DomainError("traffic generation needs at least two nodes")
    rng = np.random.default_rng(seed)
    rates = np.zeros((n, n))
    inj = params.injection_bps_per_node

    if pattern is TrafficPattern.UNIFORM:
        rates[:] = inj / (n - 1)
        np.fill_diagonal(rates, 0.0)
    elif pattern is TrafficPattern.HOTSPOT:
        if params.hotspot_nodes is not None:
            hotspots = sorted(set(params.hotspot_nodes))
            if not all(0 <= h < n for h in hotspots):
                raise DomainError("hotspot node id out of range")
            if not hotspots:
                raise DomainError("hotspot_nodes must not be empty")
        else:
            hotspots = sorted(rng.choice(n, size=min(params.hotspot_count, n),
                                         replace=False).tolist())
        hot = set(hotspots)
        for src in range(n):
            hot_targets = [h for h in hotspots if h != src]
            others = [d for d in range(n) if d != src and d not in hot]
            if hot_targets:
                share = inj * params.hotspot_fraction / len(hot_targets)
                for dst in hot_targets:
                    rates[src, dst] = share
            if others:
                share = inj * (1.0 - params.hotspot_fraction) / len(others)
                for dst in others:
                    rates[src, dst] += share
            # A source with no valid targets in a class simply injects less.
    else:
        scale = params.locality_scale_hops
        for src in range(n):
            weights = np.array([
                0.0 if dst == src else math.exp(-_manhattan(topology, src, dst) / scale)
                for dst in range(n)])
            rates[src] = inj * weights / weights.sum()
    return TrafficMatrix(rates=rates)


@dataclass(frozen=True)
class LinkActivity:
    """Carried load per directed link plus flow aggregates for accounting."""

    loads: Mapping[tuple[int, int], float]
    injected_bps: float
    flow_hop_bps: float        # sum over flows of rate * hop count
    router_traversal_bps: float  # sum over flows of rate * (hops + 1)

    def utilization(self, topology: MeshTopology,
                    rated_bps: Mapping[Technology, float]) -> dict[tuple[int, int], float]:
        lookup = _link_lookup(topology)
        out = {}
        for key, load in self.loads.items():
            link = lookup[key]
            if link.technology not in rated_bps:
                raise ConfigurationError(f"no rated capacity for {link.technology.value}")
            out[key] = load / rated_bps[link.technology]
        return out


def link_activity(topology: MeshTopology, traffic: TrafficMatrix) -> LinkActivity:
    """Charge each flow's full rate to every directed link on its route."""
    if traffic.node_count != topology.node_count:
        raise DomainError("traffic matrix size does not match the topology")
    index = _RouteIndex(topology)
    n = topology.node_count
    walk = index.walk
    loads_by_key: dict[int, float] = {}
    injected = 0.0
    flow_hops = 0.0
    traversals = 0.0
    rates = traffic.rates
    for src in range(n):
        row = rates[src]
        for dst in np.nonzero(row)[0]:
            rate = float(row[dst])
            hops = 0
            for u, v in walk(src, int(dst)):
                key = u * n + v
                loads_by_key[key] = loads_by_key.get(key, 0.0) + rate
                hops += 1
            injected += rate
            flow_hops += rate * hops
            traversals += rate * (hops + 1)
    loads = {(key // n, key % n): load for key, load in sorted(loads_by_key.items())}
    return LinkActivity(loads=loads, injected_bps=injected,
                        flow_hop_bps=flow_hops, router_traversal_bps=traversals)


@dataclass(frozen=True)
class RouterModel:
    dynamic_j_per_bit: float
    area_m2: float
    die: str = ELECTRONIC_DIE

    def __post_init__(self):
        if self.dynamic_j_per_bit < 0 or self.area_m2 < 0:
            raise DomainError("router energy and area must be non-negative")


@dataclass(frozen=True)
class WaferCost:
    """Per-die wafer rate, optionally riding a cost halving curve."""

    usd_per_m2: float
    halving_period_years: float | None = None
    reference_year: float | None = None

    def __post_init__(self):
        if self.usd_per_m2 <= 0:
            raise DomainError("wafer cost must be strictly positive")
        if (self.halving_period_years is None) != (self.reference_year is None):
            raise ConfigurationError(
                "wafer cost curves need both halving_period_years and reference_year")
        if self.halving_period_years is not None and self.halving_period_years <= 0:
            raise DomainError("halving_period_years must be strictly positive")

    def rate_at(self, year: float | None) -> float:
        if year is None or self.halving_period_years is None:
            return self.usd_per_m2
        return self.usd_per_m2 * 2.0 ** (-(year - self.reference_year) / self.halving_period_years)


@dataclass(frozen=True)
class NocLinkTemplate:
    """Length-free link description instantiated per mesh link."""

    technology: Technology
    components: tuple
    transport: object
    cross_section_width_m: float
    repeater_spacing_m: float | None = None

    def at_length(self, length_m: float) -> LinkSpec:
        return LinkSpec(
            name=f"{self.technology.value}-noc-link",
            technology=self.technology,
            length_m=length_m,
            components=self.components,
            transport=self.transport,
            cross_section_width_m=self.cross_section_width_m,
            repeater_spacing_m=self.repeater_spacing_m,
        )


@dataclass(frozen=True)
class NocConfig:
    """DSENT-replacement parameter tables for one NoC evaluation.

    Flit resizing conventions (used by :func:`flit_sweep`): electronic links
    are ``flit_bits`` lanes wide and each lane clocks at rate/lanes; router
    energy-per-bit and area scale linearly with flit width, as do the area
    and cost of serdes/driver components (their per-bit energy does not).
    """

    flit_bits: int
    router_clock_hz: float
    router_pipeline_clks: int
    link_latency_clks: Mapping[Technology, int]
    link_rate_bps: Mapping[Technology, float]
    router: RouterModel
    link_templates: Mapping[Technology, NocLinkTemplate]
    wafer_cost: Mapping[str, WaferCost]

    def __post_init__(self):
        if self.flit_bits < 1:
            raise DomainError("flit_bits must be at least 1")
        if self.router_pipeline_clks < 1:
            raise DomainError("router pipeline must be at least 1 clock")
        if self.router_clock_hz <= 0:
            raise DomainError("router clock must be strictly positive")
        for tech, clks in self.link_latency_clks.items():
            if clks < 1:
                raise DomainError(f"link latency for {Technology(tech).value} must be >= 1 clk")
        for tech, rate in self.link_rate_bps.items():
            if rate <= 0:
                raise DomainError(f"rated capacity for {Technology(tech).value} must be > 0")

    def require_technology(self, technology: Technology):
        for table, label in ((self.link_latency_clks, "link_latency_clks"),
                             (self.link_rate_bps, "link_rate_bps"),
                             (self.link_templates, "link_templates")):
            if technology not in table:
                raise ConfigurationError(
                    f"{label} has no entry for technology '{technology.value}'")

    def with_flit_bits(self, flit_bits: int) -> "NocConfig":
        """Re-derive width-dependent parameters for a new flit size."""
        if flit_bits < 1:
            raise DomainError("flit_bits must be at least 1")
        scale = flit_bits / self.flit_bits
        router = replace(self.router,
                         dynamic_j_per_bit=self.router.dynamic_j_per_bit * scale,
                         area_m2=self.router.area_m2 * scale)
        templates = {}
        for tech, template in self.link_templates.items():
            components = []
            for comp in template.components:
                if comp.role in (ComponentRole.SERDES, ComponentRole.DRIVER):
                    comp = replace(comp, area_m2=comp.area_m2 * scale,
                                   cost_usd=comp.cost_usd * scale)
                components.append(comp)
            transport = template.transport
            if tech is Technology.ELECTRONIC and isinstance(transport, ElectricalTransport):
                transport = replace(transport, lanes=flit_bits)
                lane_rate = self.link_rate_bps[tech] / flit_bits
                components = [
                    replace(c, bandwidth_hz=lane_rate) if c.bandwidth_hz > 0 else c
                    for c in components]
            templates[tech] = replace(template, components=tuple(components),
                                      transport=transport)
        clock = self.router_clock_hz
        if Technology.ELECTRONIC in self.link_rate_bps:
            clock = self.link_rate_bps[Technology.ELECTRONIC] / flit_bits
        return replace(self, flit_bits=flit_bits, router_clock_hz=clock,
                       router=router, link_templates=templates)


def _latency_from_activity(topology: MeshTopology, activity: LinkActivity,
                           config: NocConfig) -> float:
    """Derive the traffic-weighted mean clock cost from link loads.

    Per flow, the clock cost is pipeline * hops plus the per-hop technology
    latencies; summed over flows that is pipeline * (rate-weighted hops)
    plus each link's carried load times its technology latency.
    """
    if activity.injected_bps <= 0:
        raise DomainError("average latency is undefined for zero traffic")
    lookup = _link_lookup(topology)
    weighted = config.router_pipeline_clks * activity.flow_hop_bps
    for key, load in activity.loads.items():
        link = lookup[key]
        if link.technology not in config.link_latency_clks:
            raise ConfigurationError(
                f"link_latency_clks has no entry for '{link.technology.value}'")
        weighted += load * config.link_latency_clks[link.technology]
    return weighted / activity.injected_bps


def avg_latency_clks(topology: MeshTopology, traffic: TrafficMatrix,
                     config: NocConfig) -> float:
    """Traffic-weighted mean clock cost over all loaded flows.

    Each hop charges one router pipeline plus the link's technology latency;
    ejection at the destination adds nothing, so a 1-hop electronic flow
    costs pipeline + 1.
    """
    return _latency_from_activity(topology, link_activity(topology, traffic), config)


def _link_lookup(topology: MeshTopology) -> dict[tuple[int, int], MeshLink]:
    lookup: dict[tuple[int, int], MeshLink] = {}
    for link in topology.all_links():
        lookup[(link.a, link.b)] = link
        lookup[(link.b, link.a)] = link
    return lookup


def network_energy_per_bit(topology: MeshTopology, activity: LinkActivity,
                           config: NocConfig) -> float:
    """Total dynamic energy rate divided by the injected bit rate.

    Optical link energies include the throttled laser: the launch power is
    amortized over the link capacity, so lasers burn energy only for
    transmitted bits.
    """
    if activity.injected_bps <= 0:
        raise DomainError("energy per bit is undefined for zero traffic")
    lookup = _link_lookup(topology)
    energy_cache: dict[tuple[Technology, float], float] = {}
    link_term = 0.0
    for key, load in activity.loads.items():
        link = lookup[key]
        length = topology.link_length_m(link)
        cache_key = (link.technology, length)
        if cache_key not in energy_cache:
            config.require_technology(link.technology)
            spec = config.link_templates[link.technology].at_length(length)
            energy_cache[cache_key] = link_energy_per_bit(spec)
        link_term += load * energy_cache[cache_key]
    router_term = activity.router_traversal_bps * config.router.dynamic_j_per_bit
    return (link_term + router_term) / activity.injected_bps


@dataclass(frozen=True)
class NetworkAreaCost:
    area_m2: float
    cost_usd: float
    area_by_die: Mapping[str, float]


def _link_area_by_die(spec: LinkSpec, native_die: str) -> dict[str, float]:
    """Split a link's footprint across dies by component role.

    Serdes and drivers are electronic circuitry regardless of the link
    technology; everything else, including the transport strip, sits on the
    technology's native die.
    """
    total = link_area(spec)
    if native_die == ELECTRONIC_DIE:
        return {ELECTRONIC_DIE: total}
    electronic = sum(c.area_m2 for c in spec.components
                     if c.role in (ComponentRole.SERDES, ComponentRole.DRIVER))
    return {ELECTRONIC_DIE: electronic, native_die: total - electronic}


def _native_die(technology: Technology) -> str:
    return ELECTRONIC_DIE if technology is Technology.ELECTRONIC else PHOTONIC_DIE


def network_area_and_cost(topology: MeshTopology, config: NocConfig,
                          eval_year: float | None = None) -> NetworkAreaCost:
    """Sum component areas per die and price them at the wafer rates."""
    area_by_die: dict[str, float] = {}

    def add(die: str, area: float):
        area_by_die[die] = area_by_die.get(die, 0.0) + area

    add(config.router.die, config.router.area_m2 * topology.node_count)
    for link in topology.all_links():
        config.require_technology(link.technology)
        spec = config.link_templates[link.technology].at_length(topology.link_length_m(link))
        for die, area in _link_area_by_die(spec, _native_die(link.technology)).items():
            add(die, area)

    cost = 0.0
    for die, area in sorted(area_by_die.items()):
        if die not in config.wafer_cost:
            raise ConfigurationError(f"wafer_cost has no entry for die '{die}'")
        cost += area * config.wafer_cost[die].rate_at(eval_year)
    return NetworkAreaCost(area_m2=sum(area_by_die.values()), cost_usd=cost,
                           area_by_die=area_by_die)


@dataclass(frozen=True)
class NetworkClearResult:
    clear: ClearValue
    capacity_bps_per_node: float
    latency_clks: float
    energy_j_per_bit: float
    area_m2: float
    cost_usd: float


def _aggregate_capacity_per_node(topology: MeshTopology, config: NocConfig) -> float:
    total = 0.0
    for link in topology.all_links():
        if link.technology not in config.link_rate_bps:
            raise ConfigurationError(
                f"link_rate_bps has no entry for '{link.technology.value}'")
        total += config.link_rate_bps[link.technology]
    return total / topology.node_count


def network_clear(topology: MeshTopology, traffic: TrafficMatrix, config: NocConfig,
                  eval_year: float | None = None,
                  activity: LinkActivity | None = None) -> NetworkClearResult:
    """Aggregate capacity per node over latency, energy, area, and cost.

    ``activity`` may carry a precomputed routing pass for this exact
    (topology, traffic) pair; callers evaluating many variants reuse it.
    """
    if activity is None:
        activity = link_activity(topology, traffic)
    latency = _latency_from_activity(topology, activity, config)
    energy = network_energy_per_bit(topology, activity, config)
    area_cost = network_area_and_cost(topology, config, eval_year)
    capability = _aggregate_capacity_per_node(topology, config)
    factors = ClearFactors(capability=capability, latency=latency, energy=energy,
                           amount=area_cost.area_m2, resistance=area_cost.cost_usd)
    return NetworkClearResult(
        clear=clear_value(factors, Level.NETWORK),
        capacity_bps_per_node=capability,
        latency_clks=latency,
        energy_j_per_bit=energy,
        area_m2=area_cost.area_m2,
        cost_usd=area_cost.cost_usd,
    )


@dataclass(frozen=True)
class NetworkCase:
    """One named network under evaluation (topology + traffic + tables)."""

    label: str
    topology: MeshTopology
    traffic: TrafficMatrix
    config: NocConfig


@dataclass(frozen=True)
class FlitSweepRow:
    flit_bits: int
    label: str
    clear: float


@dataclass(frozen=True)
class FlitSweepResult:
    rows: tuple[FlitSweepRow, ...]
    baseline: str
    crossover_flit_bits: Mapping[str, int | None]


def find_crossover(flit_sizes: Sequence[int], series: Sequence[float],
                   baseline: Sequence[float]) -> int | None:
    """First flit size at which sign(series - baseline) flips (or hits zero)."""
    if not (len(flit_sizes) == len(series) == len(baseline)):
        raise DomainError("crossover inputs must have equal lengths")
    previous = None
    for flit, a, b in zip(flit_sizes, series, baseline):
        sign = (a > b) - (a < b)
        if sign == 0:
            return flit
        if previous is not None and sign != previous:
            return flit
        previous = sign
    return None


def flit_sweep(cases: Sequence[NetworkCase], flit_sizes: Sequence[int],
               eval_year: float | None = None,
               baseline: str | None = None) -> FlitSweepResult:
    """Re-evaluate every case at each flit size and report crossovers.

    Routing, latency, and link activity do not depend on flit size, so they
    are computed once per case and reused across the sweep.
    """
    if not flit_sizes:
        raise DomainError("flit_sweep needs at least one flit size")
    labels = [case.label for case in cases]
    if len(set(labels)) != len(labels):
        raise DomainError("case labels must be unique")
    if baseline is None:
        baseline = labels[0]
    if baseline not in labels:
        raise ConfigurationError(f"baseline '{baseline}' is not among the cases")

    prepared = [(case, link_activity(case.topology, case.traffic)) for case in cases]

    rows: list[FlitSweepRow] = []
    by_label: dict[str, list[float]] = {label: [] for label in labels}
    for flit in flit_sizes:
        for case, activity in prepared:
            config = case.config.with_flit_bits(flit)
            value = network_clear(case.topology, case.traffic, config, eval_year,
                                  activity=activity).clear.value
            rows.append(FlitSweepRow(flit_bits=flit, label=case.label, clear=value))
            by_label[case.label].append(value)

    crossovers = {
        label: find_crossover(list(flit_sizes), by_label[label], by_label[baseline])
        for label in labels if label != baseline}
    return FlitSweepResult(rows=tuple(rows), baseline=baseline,
                           crossover_flit_bits=crossovers)


def shortest_path_hops(topology: MeshTopology, src: int, dst: int) -> int:
    """Breadth-first shortest hop count over base plus express links.

    Independent of the router; used as the optimality oracle for routes.
    """
    if src == dst:
        return 0
    adjacency: dict[int, list[int]] = {}
    for link in topology.all_links():
        adjacency.setdefault(link.a, []).append(link.b)
        adjacency.setdefault(link.b, []).append(link.a)
    seen = {src: 0}
    queue = deque([src])
    while queue:
        node = queue.popleft()
        for nxt in adjacency.get(node, ()):
            if nxt not in seen:
                seen[nxt] = seen[node] + 1
                if nxt == dst:
                    return seen[nxt]
                queue.append(nxt)
    raise DomainError("destination unreachable")
