"""Command-line front end.

Subcommands: limits | device | link | network | trend. Configs are JSON
documents validated against the schemas shipped under docs/schemas; tabular
artifacts are CSV, reports are JSON, and radar exports are coordinate files.
Every artifact is written atomically after the whole evaluation succeeds, so
a failing run leaves no partial output.

Exit codes: 0 success, 1 validation error, 2 infeasible model, 3 I/O error.
Errors print one machine-parsable line on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .device import default_device_floors, device_clear, radar_normalize
from .errors import ClearError, ConfigurationError, DomainError, InfeasibleLinkError
from .ioutil import IoError, write_csv, write_json
from .limits import DEFAULT_COST_EFFICIENCY_AXIS, axis_limits, make_limit_set
from .link import link_factors
from .metric import (
    AXIS_NAMES,
    Level,
    clear_value,
    default_floors,
    radar_area,
    radar_scores,
    radar_vertices,
)
from .network import (
    NetworkCase,
    add_express_links,
    build_mesh,
    flit_sweep,
    generate_traffic,
    link_activity,
    network_clear,
)
from .trend import (
    classify_vs_trend,
    efficiency_point,
    fit_growth,
    load_system_records,
    system_clear,
)
from .validation import (
    load_device_config,
    load_link_config,
    load_network_config,
    load_trend_config,
    validate_config,
)

__all__ = ["RunManifest", "run", "validate", "main"]

OUT_DIR_ENV = "CLEARFOM_OUT"
ALL_FORMATS = ("table", "csv", "json", "radar_csv")

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_INFEASIBLE = 2
EXIT_IO = 3


@dataclass(frozen=True)
class RunManifest:
    """One CLI invocation, resolved from flags and the environment."""

    command: str
    config_path: str | None = None
    out_dir: str = "."
    formats: tuple[str, ...] = ALL_FORMATS
    seed: int | None = None
    eval_year: float | None = None
    temperature_k: float = 300.0
    limit_link_length_m: float = 1e-4
    limit_group_index: float = 3.0

    def __post_init__(self):
        if self.command not in ("limits", "device", "link", "network", "trend"):
            raise ConfigurationError(f"unknown command '{self.command}'")
        if not self.formats:
            raise ConfigurationError("at least one output format is required")
        for name in self.formats:
            if name not in ALL_FORMATS:
                raise ConfigurationError(f"unknown output format '{name}'")
        if self.command != "limits" and self.config_path is None:
            raise ConfigurationError(f"command '{self.command}' requires --config")
        if self.command == "network" and self.seed is None:
            raise ConfigurationError("command 'network' requires --seed for traffic generation")


def validate(doc):
    """Validate a parsed config document; returns a list of diagnostics."""
    return validate_config(doc)


def _slug(name: str) -> str:
    return re.sub(r"[^a-z0-9]+", "_", name.lower()).strip("_")


def _print_table(headers, rows):
    def cell(value):
        return f"{value:.4g}" if isinstance(value, float) else str(value)

    text_rows = [[cell(v) for v in row] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in text_rows)) if text_rows else len(h)
              for i, h in enumerate(headers)]
    print("  ".join(h.ljust(w) for h, w in zip(headers, widths)))
    print("  ".join("-" * w for w in widths))
    for row in text_rows:
        print("  ".join(c.ljust(w) for c, w in zip(row, widths)))


def _load_config(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise IoError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"config {path} is not valid JSON: {exc}") from exc


def _require_valid(doc, expected_kind: str):
    diagnostics = validate_config(doc)
    if diagnostics:
        raise ConfigurationError(
            "invalid config: " + "; ".join(str(d) for d in diagnostics))
    if doc["kind"] != expected_kind:
        raise ConfigurationError(
            f"config kind '{doc['kind']}' does not match the '{expected_kind}' command")


def _radar_rows(scores):
    return [(axis, score, x, y) for axis, score, x, y in radar_vertices(scores)]


@dataclass
class _Artifacts:
    """Artifacts staged in memory; written only after the run succeeds."""

    csv_files: list = field(default_factory=list)   # (relpath, header, rows)
    json_files: list = field(default_factory=list)  # (relpath, document)

    def flush(self, out_dir: Path, formats):
        written = []
        if "csv" in formats or "radar_csv" in formats:
            for relpath, header, rows in self.csv_files:
                is_radar = relpath.startswith("radar_")
                wanted = "radar_csv" if is_radar else "csv"
                if wanted in formats:
                    write_csv(out_dir / relpath, header, rows)
                    written.append(relpath)
        if "json" in formats:
            for relpath, document in self.json_files:
                write_json(out_dir / relpath, document)
                written.append(relpath)
        return written


def _run_limits(manifest: RunManifest, artifacts: _Artifacts):
    rows = []
    reports = {}
    for level in ("device", "link"):
        limits = make_limit_set(
            temperature=manifest.temperature_k,
            link_length=manifest.limit_link_length_m,
            group_index=manifest.limit_group_index,
            level=Level(level),
        )
        reports[level] = {
            "min_energy_j_per_bit": limits.min_energy_j_per_bit,
            "max_rate_hz": limits.max_rate_hz,
            "min_length_m": limits.min_length_m,
            "min_area_m2": limits.min_area_m2,
            "max_capacity_bps": limits.max_capacity_bps,
            "max_tof_rate_hz": limits.max_tof_rate_hz,
            "cost_efficiency_axis_per_usd": limits.cost_efficiency_axis,
        }
        for quantity, value, unit in (
                ("min_energy", limits.min_energy_j_per_bit, "J/bit"),
                ("max_rate", limits.max_rate_hz, "Hz"),
                ("min_length", limits.min_length_m, "m"),
                ("min_area", limits.min_area_m2, "m^2"),
                ("max_capacity", limits.max_capacity_bps, "bit/s"),
                ("max_tof_rate", limits.max_tof_rate_hz, "Hz"),
                ("cost_efficiency_axis", limits.cost_efficiency_axis, "1/USD")):
            rows.append((level, quantity, value, unit))
    document = {
        "kind": "limits_report",
        "temperature_k": manifest.temperature_k,
        "tof_link_length_m": manifest.limit_link_length_m,
        "tof_group_index": manifest.limit_group_index,
        "levels": reports,
    }
    artifacts.json_files.append(("limits.json", document))
    artifacts.csv_files.append(("limits.csv", ("level", "quantity", "value", "unit"), rows))
    if "table" in manifest.formats:
        print(f"physical limits at {manifest.temperature_k:g} K "
              f"(time of flight over {manifest.limit_link_length_m:g} m, "
              f"group index {manifest.limit_group_index:g})")
        _print_table(("level", "quantity", "value", "unit"), rows)


def _run_device(manifest: RunManifest, artifacts: _Artifacts):
    doc = _load_config(manifest.config_path)
    _require_valid(doc, "device_comparison")
    config = load_device_config(doc)
    limits = make_limit_set(
        temperature=config.temperature_k,
        cost_efficiency_axis=config.cost_efficiency_axis or DEFAULT_COST_EFFICIENCY_AXIS,
        level=Level.DEVICE)
    floors = default_device_floors(config.devices, margin=config.floor_margin)

    table_rows = []
    report_devices = []
    for spec in sorted(config.devices, key=lambda s: s.name):
        value = device_clear(spec)
        scores = radar_normalize(spec, limits, floors)
        area = radar_area(scores)
        violations = spec.limit_violations(limits)
        table_rows.append((spec.name, spec.technology.value, value.value, area))
        report_devices.append({
            "name": spec.name,
            "technology": spec.technology.value,
            "clear": value.value,
            "factors": {
                "capability_hz": spec.capability_hz,
                "critical_length_m": spec.critical_length_m,
                "energy_j_per_bit": spec.energy_j_per_bit,
                "footprint_m2": spec.footprint_m2,
                "unit_cost_usd": spec.unit_cost_usd,
            },
            "radar": {axis: getattr(scores, axis) for axis in AXIS_NAMES},
            "radar_area": area,
            "limit_violations": violations,
        })
        artifacts.csv_files.append(
            (f"radar_{_slug(spec.name)}.csv", ("axis", "score", "x", "y"),
             _radar_rows(scores)))
    artifacts.csv_files.append(
        ("device_clear.csv",
         ("name", "technology", "clear", "capability_hz", "critical_length_m",
          "energy_j_per_bit", "footprint_m2", "unit_cost_usd", "radar_area"),
         [(d["name"], d["technology"], d["clear"],
           d["factors"]["capability_hz"], d["factors"]["critical_length_m"],
           d["factors"]["energy_j_per_bit"], d["factors"]["footprint_m2"],
           d["factors"]["unit_cost_usd"], d["radar_area"])
          for d in report_devices]))
    artifacts.json_files.append(("device_report.json", {
        "kind": "device_report",
        "temperature_k": config.temperature_k,
        "devices": report_devices,
    }))
    if "table" in manifest.formats:
        _print_table(("device", "technology", "clear", "radar_area"), table_rows)


def _run_link(manifest: RunManifest, artifacts: _Artifacts):
    doc = _load_config(manifest.config_path)
    _require_valid(doc, "link_comparison")
    config = load_link_config(doc, base_dir=str(Path(manifest.config_path).parent))
    eval_year = manifest.eval_year if manifest.eval_year is not None else config.eval_year

    report_links = {spec.name: [] for spec in config.links}
    table_rows = []
    for length in config.lengths_m:
        limits = make_limit_set(
            temperature=config.temperature_k,
            link_length=length,
            group_index=config.limit_group_index,
            level=Level.LINK,
            cost_efficiency_axis=config.cost_efficiency_axis or DEFAULT_COST_EFFICIENCY_AXIS)
        at_length = [(spec, link_factors(spec.at_length(length), eval_year))
                     for spec in config.links]
        floors = default_floors([factors for _, factors in at_length])
        for spec, factors in at_length:
            value = clear_value(factors, Level.LINK)
            scores = radar_scores(factors, axis_limits(limits), floors)
            report_links[spec.name].append({
                "length_m": length,
                "capacity_bps": factors.capability,
                "latency_s": factors.latency,
                "energy_j_per_bit": factors.energy,
                "area_m2": factors.amount,
                "cost_usd": factors.resistance,
                "clear": value.value,
                "radar": {axis: getattr(scores, axis) for axis in AXIS_NAMES},
            })
            table_rows.append((spec.name, length, factors.capability, value.value))
            artifacts.csv_files.append(
                (f"radar_{_slug(spec.name)}_{length:g}m.csv",
                 ("axis", "score", "x", "y"), _radar_rows(scores)))
    for spec in sorted(config.links, key=lambda s: s.name):
        artifacts.csv_files.append(
            (f"link_sweep_{_slug(spec.name)}.csv",
             ("length_m", "capacity_bps", "latency_s", "energy_j", "area_m2",
              "cost_usd", "clear"),
             [(e["length_m"], e["capacity_bps"], e["latency_s"],
               e["energy_j_per_bit"], e["area_m2"], e["cost_usd"], e["clear"])
              for e in report_links[spec.name]]))
    artifacts.json_files.append(("link_report.json", {
        "kind": "link_report",
        "temperature_k": config.temperature_k,
        "eval_year": eval_year,
        "lengths_m": list(config.lengths_m),
        "links": [{"name": spec.name, "technology": spec.technology.value,
                   "sweep": report_links[spec.name]}
                  for spec in sorted(config.links, key=lambda s: s.name)],
    }))
    if "table" in manifest.formats:
        _print_table(("link", "length_m", "capacity_bps", "clear"), table_rows)


def _network_cases(config, seed: int):
    base_mesh = build_mesh(config.rows, config.cols, config.spacing_m,
                           config.cases[0].technology)
    traffic = generate_traffic(config.traffic_pattern, config.traffic_params,
                               base_mesh, seed)
    cases = []
    for case in config.cases:
        topology = build_mesh(config.rows, config.cols, config.spacing_m, case.technology)
        if case.express_span is not None:
            topology = add_express_links(topology, case.express_span,
                                         case.express_technology)
        cases.append(NetworkCase(label=case.label, topology=topology,
                                 traffic=traffic, config=config.noc))
    return cases


def _run_network(manifest: RunManifest, artifacts: _Artifacts):
    doc = _load_config(manifest.config_path)
    _require_valid(doc, "network_comparison")
    config = load_network_config(doc)
    eval_year = manifest.eval_year if manifest.eval_year is not None else config.eval_year
    cases = _network_cases(config, manifest.seed)

    summary_rows = []
    report_cases = []
    for spec, case in zip(config.cases, cases):
        activity = link_activity(case.topology, case.traffic)
        result = network_clear(case.topology, case.traffic, case.config, eval_year,
                               activity=activity)
        utilization = activity.utilization(case.topology, case.config.link_rate_bps)
        activity_rows = [
            (f"{a}->{b}", load, utilization[(a, b)])
            for (a, b), load in sorted(activity.loads.items())]
        artifacts.csv_files.append(
            (f"link_activity_{_slug(case.label)}.csv",
             ("link_id", "load_bps", "utilization"), activity_rows))
        summary_rows.append((case.label, spec.technology.value, result.clear.value,
                             result.capacity_bps_per_node / 1e9,
                             result.latency_clks,
                             result.energy_j_per_bit / 1e-12,
                             result.area_m2 / 1e-6,
                             result.cost_usd))
        report_cases.append({
            "label": case.label,
            "technology": spec.technology.value,
            "clear": result.clear.value,
            "capacity_bps_per_node": result.capacity_bps_per_node,
            "latency_clks": result.latency_clks,
            "energy_j_per_bit": result.energy_j_per_bit,
            "area_m2": result.area_m2,
            "cost_usd": result.cost_usd,
        })
    artifacts.csv_files.append(
        ("network_summary.csv",
         ("case", "technology", "clear", "capacity_gbps", "latency_clks",
          "energy_pj_per_bit", "area_mm2", "cost_usd"), summary_rows))

    sweep_report = None
    if config.flit_sizes:
        sweep = flit_sweep(cases, config.flit_sizes, eval_year,
                           baseline=config.sweep_baseline)
        artifacts.csv_files.append(
            ("flit_sweep.csv", ("flit_bits", "case", "clear"),
             [(row.flit_bits, row.label, row.clear) for row in sweep.rows]))
        sweep_report = {
            "baseline": sweep.baseline,
            "rows": [{"flit_bits": row.flit_bits, "case": row.label, "clear": row.clear}
                     for row in sweep.rows],
            "crossover_flit_bits": dict(sweep.crossover_flit_bits),
        }
    artifacts.json_files.append(("network_report.json", {
        "kind": "network_report",
        "seed": manifest.seed,
        "eval_year": eval_year,
        "mesh": {"rows": config.rows, "cols": config.cols, "spacing_m": config.spacing_m},
        "cases": report_cases,
        "flit_sweep": sweep_report,
    }))
    if "table" in manifest.formats:
        _print_table(
            ("case", "technology", "clear", "capacity_gbps", "latency_clks",
             "energy_pj_per_bit", "area_mm2", "cost_usd"), summary_rows)


def _run_trend(manifest: RunManifest, artifacts: _Artifacts):
    doc = _load_config(manifest.config_path)
    _require_valid(doc, "trend")
    config = load_trend_config(doc)
    csv_path = Path(config.records_csv)
    if not csv_path.is_absolute():
        csv_path = Path(manifest.config_path).parent / csv_path
    try:
        records = load_system_records(csv_path)
    except OSError as exc:
        raise IoError(f"cannot read records {csv_path}: {exc}") from exc
    if len(records) < 2:
        raise DomainError("trend fitting needs at least two records")

    fit = fit_growth(records)
    point_rows = []
    report_points = []
    for record in sorted(records, key=lambda r: (r.year, r.name)):
        value = system_clear(record)
        point = efficiency_point(record)
        position = classify_vs_trend(record, fit, config.band_db)
        point_rows.append((record.name, record.year, value.value, position.value))
        report_points.append({
            "name": record.name,
            "year": record.year,
            "class": record.system_class.value,
            "clear": value.value,
            "computational_efficiency": point.computational_efficiency,
            "energy_efficiency_bits_per_j": point.energy_efficiency,
            "landauer_fraction": point.landauer_fraction,
            "position": position.value,
        })
    artifacts.csv_files.append(
        ("trend_points.csv", ("name", "year", "clear", "position"), point_rows))
    artifacts.json_files.append(("trend_report.json", {
        "kind": "trend_report",
        "band_db": config.band_db,
        "bits_per_instruction": config.bits_per_instruction,
        "fit": {
            "annual_factor": fit.annual_factor,
            # A flat series fits an infinite doubling time; JSON has no inf.
            "doubling_months": fit.doubling_months if math.isfinite(fit.doubling_months) else None,
            "r_squared": fit.r_squared,
            "intercept": fit.intercept,
        },
        "points": report_points,
    }))
    if "table" in manifest.formats:
        print(f"growth: x{fit.annual_factor:.3g}/year "
              f"(doubling every {fit.doubling_months:.3g} months, "
              f"r^2 = {fit.r_squared if fit.r_squared is not None else 'undefined'})")
        _print_table(("system", "year", "clear", "position"), point_rows)


_RUNNERS = {
    "limits": _run_limits,
    "device": _run_device,
    "link": _run_link,
    "network": _run_network,
    "trend": _run_trend,
}


def run(manifest: RunManifest) -> int:
    """Execute one manifest; artifacts land in its output directory."""
    artifacts = _Artifacts()
    _RUNNERS[manifest.command](manifest, artifacts)
    written = artifacts.flush(Path(manifest.out_dir), manifest.formats)
    for relpath in written:
        print(f"wrote {Path(manifest.out_dir) / relpath}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clearfom",
        description="Multi-hierarchy CLEAR figure-of-merit toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, needs_config in (("limits", False), ("device", True), ("link", True),
                               ("network", True), ("trend", True)):
        cmd = sub.add_parser(name)
        if needs_config:
            cmd.add_argument("--config", required=True, help="JSON config document")
        cmd.add_argument("--out", default=None,
                         help=f"output directory (default: ${OUT_DIR_ENV} or '.')")
        cmd.add_argument("--format", default=",".join(ALL_FORMATS),
                         help="comma list from: " + ", ".join(ALL_FORMATS))
        cmd.add_argument("--seed", type=int, default=None,
                         help="traffic seed (required for 'network')")
        cmd.add_argument("--eval-year", type=float, default=None,
                         help="evaluation year for economic cost scaling")
        cmd.add_argument("--temperature", type=float, default=300.0,
                         help="temperature in K for physical limits")
        if name == "limits":
            cmd.add_argument("--link-length", type=float, default=1e-4,
                             help="length in m for the time-of-flight ceiling")
            cmd.add_argument("--group-index", type=float, default=3.0,
                             help="group index for the time-of-flight ceiling")
    return parser


def _manifest_from_args(args: argparse.Namespace) -> RunManifest:
    out_dir = args.out if args.out is not None else os.environ.get(OUT_DIR_ENV, ".")
    formats = tuple(part.strip() for part in args.format.split(",") if part.strip())
    return RunManifest(
        command=args.command,
        config_path=getattr(args, "config", None),
        out_dir=out_dir,
        formats=formats,
        seed=args.seed,
        eval_year=args.eval_year,
        temperature_k=args.temperature,
        limit_link_length_m=getattr(args, "link_length", 1e-4),
        limit_group_index=getattr(args, "group_index", 3.0),
    )


def _fail(code: int, kind: str, message: str) -> int:
    line = " ".join(str(message).split())
    print(f'clearfom: error code={code} kind={kind} msg="{line}"', file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        manifest = _manifest_from_args(args)
        return run(manifest)
    except InfeasibleLinkError as exc:
        detail = str(exc)
        if exc.failing_span is not None:
            span = exc.failing_span
            detail += (f" (span {span.index}: {span.length_m:g} m, "
                       f"loss {span.loss_db:g} dB, budget {span.budget_db:g} dB)")
        return _fail(EXIT_INFEASIBLE, "infeasible", detail)
    except (ConfigurationError, DomainError) as exc:
        return _fail(EXIT_VALIDATION, "validation", str(exc))
    except IoError as exc:
        return _fail(EXIT_IO, "io", str(exc))
    except ClearError as exc:
        return _fail(EXIT_VALIDATION, "validation", str(exc))


if __name__ == "__main__":
    raise SystemExit(main())
