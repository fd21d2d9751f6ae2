"""Economic resistance model: unit cost decaying log-linearly with time.

Unit cost follows ``c(t) = c0 * 2^(-(t - t0) / halving_period)``. Fitting is
ordinary least squares of log2(cost) against calendar year. A flat or rising
series fits a non-negative slope; that is outside the decay model, so the
fitted curve carries an infinite halving period (flat extrapolation) and the
raw slope stays available on the fit result.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import DomainError, InsufficientDataError

__all__ = [
    "ExperienceCurve",
    "CurveFit",
    "unit_cost",
    "relative_cost",
    "fit_experience_curve",
    "load_cost_observations",
]


@dataclass(frozen=True)
class ExperienceCurve:
    """Log-linear unit-cost decay anchored at a reference calendar year."""

    initial_unit_cost: float
    halving_period: float
    reference_time: float

    def __post_init__(self):
        if self.initial_unit_cost <= 0:
            raise DomainError("initial_unit_cost must be strictly positive")
        if not self.halving_period > 0:
            raise DomainError("halving_period must be strictly positive (inf allowed)")


@dataclass(frozen=True)
class CurveFit:
    """An experience curve fitted from observations.

    ``r_squared`` is None when the goodness of fit is undefined (zero
    variance in the observed log costs). ``slope_log2_per_year`` is the raw
    OLS slope, kept even when it is clamped to the flat-curve sentinel.
    """

    curve: ExperienceCurve
    r_squared: float | None
    slope_log2_per_year: float


def unit_cost(curve: ExperienceCurve, time: float) -> float:
    """Unit cost in USD at fractional calendar year ``time``."""
    if math.isinf(curve.halving_period):
        return curve.initial_unit_cost
    return curve.initial_unit_cost * 2.0 ** (-(time - curve.reference_time) / curve.halving_period)


def relative_cost(curve: ExperienceCurve, time: float) -> float:
    """Cost at ``time`` as a fraction of the reference-time cost."""
    return unit_cost(curve, time) / curve.initial_unit_cost


def fit_experience_curve(observations: Sequence[tuple[float, float]]) -> CurveFit:
    """OLS fit of log2(cost) vs year, returned as a curve plus r-squared.

    The curve is anchored at the mean observation year. Requires at least
    two observations with distinct years and strictly positive costs.
    """
    if len(observations) < 2:
        raise InsufficientDataError("need at least two observations")
    years = [float(t) for t, _ in observations]
    costs = [float(c) for _, c in observations]
    if any(c <= 0 for c in costs):
        raise DomainError("costs must be strictly positive")
    if len(set(years)) < 2:
        raise InsufficientDataError("need at least two distinct years")

    log_costs = [math.log2(c) for c in costs]
    n = len(years)
    year_mean = math.fsum(years) / n
    log_mean = math.fsum(log_costs) / n
    sxx = math.fsum((t - year_mean) ** 2 for t in years)
    sxy = math.fsum((t - year_mean) * (y - log_mean) for t, y in zip(years, log_costs))
    slope = sxy / sxx

    if slope < 0:
        halving = -1.0 / slope
    else:
        halving = math.inf

    ss_tot = math.fsum((y - log_mean) ** 2 for y in log_costs)
    ss_res = math.fsum((y - (log_mean + slope * (t - year_mean))) ** 2
                       for t, y in zip(years, log_costs))
    r_squared = None if ss_tot == 0.0 else 1.0 - ss_res / ss_tot

    curve = ExperienceCurve(
        initial_unit_cost=2.0 ** log_mean,
        halving_period=halving,
        reference_time=year_mean,
    )
    return CurveFit(curve=curve, r_squared=r_squared, slope_log2_per_year=slope)


def load_cost_observations(path: str | Path) -> list[tuple[float, float]]:
    """Read (year, cost) observations from a CSV with header ``year,cost_usd``."""
    observations = []
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None or tuple(reader.fieldnames) != ("year", "cost_usd"):
            raise DomainError(
                f"expected CSV header year,cost_usd, got {','.join(reader.fieldnames or ())}")
        for line, row in enumerate(reader, start=2):
            try:
                observations.append((float(row["year"]), float(row["cost_usd"])))
            except (TypeError, ValueError) as exc:
                raise DomainError(f"{path}:{line}: {exc}") from exc
    return observations
