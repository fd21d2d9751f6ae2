"""clearfom: a multi-hierarchy CLEAR figure-of-merit toolkit.

CLEAR is capability divided by the product of latency, energy, amount, and
resistance, each factor specialized per hierarchy level: single devices,
point-to-point interconnect links, mesh networks-on-chip, and whole compute
systems. Factors are normalized against first-principles physical ceilings
for radar comparison, and the economic resistance factor rides a log-linear
experience curve.
"""

__version__ = "0.1.0"

from .constants import CODATA_2018, PhysicalConstants
from .device import DeviceSpec, device_clear, radar_normalize
from .economics import (
    ExperienceCurve,
    fit_experience_curve,
    load_cost_observations,
    unit_cost,
)
from .errors import (
    ClearError,
    ConfigurationError,
    DomainError,
    InfeasibleLinkError,
    InsufficientDataError,
)
from .limits import (
    LimitSet,
    bremermann_rate,
    heisenberg_min_length,
    landauer_energy,
    make_limit_set,
    margolus_levitin_rate,
    time_of_flight_rate_limit,
)
from .link import (
    ElectricalTransport,
    LinkComponent,
    LinkSpec,
    OpticalTransport,
    link_area,
    link_capacity,
    link_clear,
    link_energy_per_bit,
    p2p_latency,
    repeater_count,
)
from .metric import (
    ClearFactors,
    ClearValue,
    Level,
    RadarScores,
    Technology,
    radar_area,
)
from .network import (
    MeshTopology,
    NocConfig,
    TrafficMatrix,
    add_express_links,
    avg_latency_clks,
    build_mesh,
    flit_sweep,
    generate_traffic,
    link_activity,
    network_area_and_cost,
    network_clear,
    network_energy_per_bit,
    route,
)
from .trend import (
    GrowthFit,
    SystemRecord,
    classify_vs_trend,
    efficiency_point,
    fit_growth,
    system_clear,
)
