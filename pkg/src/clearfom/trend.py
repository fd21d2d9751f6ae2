"""System-level CLEAR for historical machines and its growth trend.

A machine's capability is its weighted MIPS rating; the cost factors are the
clock period, energy per bit, cabinet volume, and purchase price. The growth
fit is ordinary least squares of log2(CLEAR) against calendar year, reported
as a doubling time in months.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Sequence

from .constants import CODATA_2018, PhysicalConstants
from .errors import DomainError, InsufficientDataError
from .limits import landauer_energy
from .metric import ClearFactors, ClearValue, Level, clear_value

__all__ = [
    "SystemClass",
    "SystemRecord",
    "GrowthFit",
    "EfficiencyPoint",
    "TrendPosition",
    "DEFAULT_BITS_PER_INSTRUCTION",
    "DEFAULT_TREND_BAND_DB",
    "system_clear",
    "fit_growth",
    "predict_log2_clear",
    "efficiency_point",
    "classify_vs_trend",
    "mips_bit_rate",
    "load_system_records",
]

# Weighted MIPS already fold instruction lengths into the rating; converting
# a rating to a raw bit rate still needs a representation width.
DEFAULT_BITS_PER_INSTRUCTION = 32

# "On the trend line" means within half a decade unless configured otherwise.
DEFAULT_TREND_BAND_DB = 5.0

_DB_PER_LOG2 = 10.0 * math.log10(2.0)


class SystemClass(str, Enum):
    MAINFRAME = "mainframe"
    PERSONAL = "personal"
    SUPERCOMPUTER = "supercomputer"
    OPTICAL_PROJECTION = "optical_projection"
    OTHER = "other"


@dataclass(frozen=True)
class SystemRecord:
    name: str
    year: float
    mips: float
    clock_period_s: float
    energy_j_per_bit: float
    volume_m3: float
    cost_usd: float
    system_class: SystemClass = SystemClass.OTHER

    def __post_init__(self):
        object.__setattr__(self, "system_class", SystemClass(self.system_class))
        for field_name in ("mips", "clock_period_s", "energy_j_per_bit",
                           "volume_m3", "cost_usd"):
            if getattr(self, field_name) <= 0:
                raise DomainError(f"SystemRecord.{field_name} must be strictly positive")


def system_clear(record: SystemRecord) -> ClearValue:
    """MIPS over clock period, energy per bit, volume, and price."""
    factors = ClearFactors(
        capability=record.mips,
        latency=record.clock_period_s,
        energy=record.energy_j_per_bit,
        amount=record.volume_m3,
        resistance=record.cost_usd,
    )
    return clear_value(factors, Level.SYSTEM)


@dataclass(frozen=True)
class GrowthFit:
    """Log-linear growth of CLEAR over calendar years."""

    annual_factor: float
    doubling_months: float
    r_squared: float | None
    intercept: float  # predicted log2(CLEAR) at year 0

    def __post_init__(self):
        expected = 2.0 ** (12.0 / self.doubling_months)
        if abs(self.annual_factor - expected) > 1e-9 * abs(expected):
            raise DomainError("annual_factor must equal 2^(12/doubling_months)")

    @property
    def slope_log2_per_year(self) -> float:
        return 12.0 / self.doubling_months


def fit_growth(records: Sequence[SystemRecord]) -> GrowthFit:
    """OLS of log2(system CLEAR) against year, unweighted."""
    if len(records) < 2:
        raise InsufficientDataError("need at least two records")
    years = [r.year for r in records]
    if len(set(years)) < 2:
        raise InsufficientDataError("need at least two distinct years")
    logs = [math.log2(system_clear(r).value) for r in records]

    n = len(records)
    year_mean = math.fsum(years) / n
    log_mean = math.fsum(logs) / n
    sxx = math.fsum((t - year_mean) ** 2 for t in years)
    sxy = math.fsum((t - year_mean) * (y - log_mean) for t, y in zip(years, logs))
    slope = sxy / sxx

    ss_tot = math.fsum((y - log_mean) ** 2 for y in logs)
    ss_res = math.fsum((y - (log_mean + slope * (t - year_mean))) ** 2
                       for t, y in zip(years, logs))
    r_squared = None if ss_tot == 0.0 else 1.0 - ss_res / ss_tot

    doubling_months = 12.0 / slope if slope != 0.0 else math.inf
    return GrowthFit(
        annual_factor=2.0 ** slope,
        doubling_months=doubling_months,
        r_squared=r_squared,
        intercept=log_mean - slope * year_mean,
    )


def predict_log2_clear(fit: GrowthFit, year: float) -> float:
    return fit.intercept + fit.slope_log2_per_year * year


@dataclass(frozen=True)
class EfficiencyPoint:
    """One machine on the efficiency plane.

    ``computational_efficiency`` is bits per second, cubic meter, and dollar
    (one bit per clock period); ``energy_efficiency`` is bits per joule.
    ``landauer_fraction`` compares the latter against the room-temperature
    erase ceiling.
    """

    computational_efficiency: float
    energy_efficiency: float
    landauer_fraction: float


def efficiency_point(record: SystemRecord,
                     constants: PhysicalConstants = CODATA_2018) -> EfficiencyPoint:
    energy_efficiency = 1.0 / record.energy_j_per_bit
    computational = 1.0 / (record.clock_period_s * record.volume_m3 * record.cost_usd)
    ceiling = 1.0 / landauer_energy(300.0, constants)
    return EfficiencyPoint(
        computational_efficiency=computational,
        energy_efficiency=energy_efficiency,
        landauer_fraction=energy_efficiency / ceiling,
    )


def mips_bit_rate(record: SystemRecord,
                  bits_per_instruction: int = DEFAULT_BITS_PER_INSTRUCTION) -> float:
    """Nominal bit rate implied by the MIPS rating, in bit/s."""
    if bits_per_instruction < 1:
        raise DomainError("bits_per_instruction must be at least 1")
    return record.mips * 1e6 * bits_per_instruction


class TrendPosition(str, Enum):
    ABOVE = "above"
    ON = "on"
    BELOW = "below"


def classify_vs_trend(record: SystemRecord, fit: GrowthFit,
                      band_db: float = DEFAULT_TREND_BAND_DB) -> TrendPosition:
    """Place a record relative to the fitted line within a +/- dB band."""
    if band_db < 0:
        raise DomainError("band_db must be non-negative")
    residual_log2 = math.log2(system_clear(record).value) - predict_log2_clear(fit, record.year)
    residual_db = residual_log2 * _DB_PER_LOG2
    if residual_db > band_db:
        return TrendPosition.ABOVE
    if residual_db < -band_db:
        return TrendPosition.BELOW
    return TrendPosition.ON


_CSV_FIELDS = ("name", "year", "mips", "clock_period_s", "energy_j_per_bit",
               "volume_m3", "cost_usd", "class")


def load_system_records(path: str | Path) -> list[SystemRecord]:
    """Read records from the documented CSV layout; raises DomainError on bad rows."""
    records = []
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None or tuple(reader.fieldnames) != _CSV_FIELDS:
            raise DomainError(
                f"expected CSV header {','.join(_CSV_FIELDS)}, got "
                f"{','.join(reader.fieldnames or ())}")
        for line, row in enumerate(reader, start=2):
            try:
                records.append(SystemRecord(
                    name=row["name"],
                    year=float(row["year"]),
                    mips=float(row["mips"]),
                    clock_period_s=float(row["clock_period_s"]),
                    energy_j_per_bit=float(row["energy_j_per_bit"]),
                    volume_m3=float(row["volume_m3"]),
                    cost_usd=float(row["cost_usd"]),
                    system_class=SystemClass(row["class"]),
                ))
            except (ValueError, KeyError) as exc:
                raise DomainError(f"{path}:{line}: {exc}") from exc
    return records
