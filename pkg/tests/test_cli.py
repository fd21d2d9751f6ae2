import hashlib
import json
import re
from pathlib import Path

import jsonschema
import pytest
from referencing import Registry, Resource

from clearfom.cli import EXIT_INFEASIBLE, EXIT_IO, EXIT_OK, EXIT_VALIDATION, main
from clearfom.data import example_path

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "docs" / "schemas"


@pytest.fixture(scope="session")
def schema_registry():
    resources = []
    schemas = {}
    for path in SCHEMA_DIR.glob("*.schema.json"):
        doc = json.loads(path.read_text(encoding="utf-8"))
        schemas[path.name] = doc
        resources.append((path.name, Resource.from_contents(doc)))
    return Registry().with_resources(resources), schemas


def _assert_valid(document, schema_name, registry_and_schemas):
    registry, schemas = registry_and_schemas
    validator = jsonschema.Draft202012Validator(schemas[schema_name], registry=registry)
    errors = [e.message for e in validator.iter_errors(document)]
    assert errors == []


def _hash_tree(root: Path) -> dict:
    return {str(p.relative_to(root)): hashlib.sha256(p.read_bytes()).hexdigest()
            for p in sorted(root.rglob("*")) if p.is_file()}


def _small_network_config(tmp_path, cases=None, sweep=(16, 32)):
    with open(example_path("networks/mesh16_comparison.json"), encoding="utf-8") as fh:
        doc = json.load(fh)
    doc["mesh"] = {"rows": 4, "cols": 4, "spacing_m": 1e-3}
    if cases is not None:
        doc["cases"] = [c for c in doc["cases"] if c["label"] in cases]
    doc["flit_sweep"] = {"flit_bits": list(sweep), "baseline": doc["cases"][0]["label"]}
    path = tmp_path / "net.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    return path


class TestLimitsCommand:
    def test_table_contains_headline_values(self, tmp_path, capsys):
        assert main(["limits", "--temperature", "300", "--out", str(tmp_path)]) == EXIT_OK
        table = capsys.readouterr().out
        energy = float(re.search(r"device\s+min_energy\s+(\S+)", table).group(1))
        length = float(re.search(r"device\s+min_length\s+(\S+)", table).group(1))
        assert energy == pytest.approx(2.87e-21, rel=0.01)
        assert length == pytest.approx(1.5e-9, rel=0.05)

    def test_report_validates_against_schema(self, tmp_path, schema_registry):
        main(["limits", "--out", str(tmp_path)])
        report = json.loads((tmp_path / "limits.json").read_text(encoding="utf-8"))
        _assert_valid(report, "limits_report.schema.json", schema_registry)

    def test_format_filter_skips_artifacts(self, tmp_path):
        main(["limits", "--out", str(tmp_path), "--format", "table"])
        assert list(tmp_path.iterdir()) == []


class TestDeviceCommand:
    def test_artifacts_and_schema(self, tmp_path, schema_registry, capsys):
        config = example_path("devices/four_technologies.json")
        assert main(["device", "--config", str(config), "--out", str(tmp_path)]) == EXIT_OK
        report = json.loads((tmp_path / "device_report.json").read_text(encoding="utf-8"))
        _assert_valid(report, "device_report.schema.json", schema_registry)
        radar = (tmp_path / "radar_cmos_transistor_14nm.csv").read_text(encoding="utf-8")
        lines = radar.strip().split("\n")
        assert lines[0] == "axis,score,x,y"
        assert len(lines) == 6
        assert lines[1].startswith("capability,")

    def test_unknown_field_names_path_on_stderr(self, tmp_path, capsys):
        with open(example_path("devices/four_technologies.json"), encoding="utf-8") as fh:
            doc = json.load(fh)
        doc["devices"][0]["typo_field"] = 1
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(doc), encoding="utf-8")
        assert main(["device", "--config", str(bad), "--out", str(tmp_path)]) == EXIT_VALIDATION
        err = capsys.readouterr().err
        assert err.count("\n") == 1
        assert "$.devices[0].typo_field" in err
        assert "unknown key" in err

    def test_failed_run_leaves_no_artifacts(self, tmp_path):
        out = tmp_path / "out"
        bad = tmp_path / "bad.json"
        bad.write_text('{"kind": "device_comparison"}', encoding="utf-8")
        assert main(["device", "--config", str(bad), "--out", str(out)]) == EXIT_VALIDATION
        assert not out.exists() or list(out.iterdir()) == []


class TestLinkCommand:
    def test_sweep_and_schema(self, tmp_path, schema_registry):
        config = example_path("links/four_technologies.json")
        assert main(["link", "--config", str(config), "--out", str(tmp_path)]) == EXIT_OK
        report = json.loads((tmp_path / "link_report.json").read_text(encoding="utf-8"))
        _assert_valid(report, "link_report.schema.json", schema_registry)
        sweep = (tmp_path / "link_sweep_photonic.csv").read_text(encoding="utf-8")
        lines = sweep.strip().split("\n")
        assert lines[0] == "length_m,capacity_bps,latency_s,energy_j,area_m2,cost_usd,clear"
        assert len(lines) == 4  # three lengths

    def test_infeasible_budget_exits_two(self, tmp_path, capsys):
        with open(example_path("links/four_technologies.json"), encoding="utf-8") as fh:
            doc = json.load(fh)
        plasmonic = next(l for l in doc["links"] if l["name"] == "plasmonic")
        del plasmonic["repeater_spacing_m"]  # 150 dB/mm with no repeaters
        plasmonic["components"] = [c for c in plasmonic["components"]
                                   if c["role"] != "repeater"]
        bad = tmp_path / "infeasible.json"
        bad.write_text(json.dumps(doc), encoding="utf-8")
        assert main(["link", "--config", str(bad), "--out", str(tmp_path)]) == EXIT_INFEASIBLE
        err = capsys.readouterr().err
        assert "kind=infeasible" in err
        assert "span" in err

    def test_missing_config_exits_three(self, tmp_path, capsys):
        assert main(["link", "--config", str(tmp_path / "nope.json"),
                     "--out", str(tmp_path)]) == EXIT_IO
        assert "kind=io" in capsys.readouterr().err


class TestNetworkCommand:
    def test_seed_required(self, tmp_path, capsys):
        config = _small_network_config(tmp_path)
        assert main(["network", "--config", str(config),
                     "--out", str(tmp_path / "o")]) == EXIT_VALIDATION
        assert "--seed" in capsys.readouterr().err

    def test_deterministic_artifacts_byte_identical(self, tmp_path):
        config = _small_network_config(tmp_path, cases=("electronic", "hyppi"))
        out_a, out_b = tmp_path / "a", tmp_path / "b"
        for out in (out_a, out_b):
            assert main(["network", "--config", str(config), "--seed", "7",
                         "--out", str(out), "--format", "csv,json"]) == EXIT_OK
        hashes_a, hashes_b = _hash_tree(out_a), _hash_tree(out_b)
        assert hashes_a == hashes_b
        assert "network_report.json" in hashes_a
        assert "flit_sweep.csv" in hashes_a

    def test_report_validates_and_no_temp_files(self, tmp_path, schema_registry):
        config = _small_network_config(tmp_path)
        out = tmp_path / "out"
        assert main(["network", "--config", str(config), "--seed", "3",
                     "--out", str(out)]) == EXIT_OK
        report = json.loads((out / "network_report.json").read_text(encoding="utf-8"))
        _assert_valid(report, "network_report.schema.json", schema_registry)
        assert not list(out.glob("*.tmp"))
        activity = (out / "link_activity_electronic.csv").read_text(encoding="utf-8")
        assert activity.splitlines()[0] == "link_id,load_bps,utilization"
        assert re.match(r"^\d+->\d+,", activity.splitlines()[1])
        summary = (out / "network_summary.csv").read_text(encoding="utf-8")
        assert summary.splitlines()[0] == ("case,technology,clear,capacity_gbps,"
                                           "latency_clks,energy_pj_per_bit,area_mm2,cost_usd")


class TestTrendCommand:
    def _config(self, tmp_path):
        doc = {"kind": "trend",
               "records_csv": str(example_path("trend/sample_synthetic_systems.csv")),
               "band_db": 5.0}
        path = tmp_path / "trend.json"
        path.write_text(json.dumps(doc), encoding="utf-8")
        return path

    def test_fit_and_schema(self, tmp_path, schema_registry, capsys):
        config = self._config(tmp_path)
        assert main(["trend", "--config", str(config), "--out", str(tmp_path)]) == EXIT_OK
        report = json.loads((tmp_path / "trend_report.json").read_text(encoding="utf-8"))
        _assert_valid(report, "trend_report.schema.json", schema_registry)
        assert report["fit"]["doubling_months"] == pytest.approx(12.0, rel=0.2)
        positions = {p["name"]: p["position"] for p in report["points"]}
        assert positions["vector-super-85"] == "below"

    def test_env_var_default_out_dir(self, tmp_path, monkeypatch):
        config = self._config(tmp_path)
        out = tmp_path / "from_env"
        monkeypatch.setenv("CLEARFOM_OUT", str(out))
        assert main(["trend", "--config", str(config), "--format", "json"]) == EXIT_OK
        assert (out / "trend_report.json").is_file()


class TestConfigSchemasMatchValidator:
    """The published config schemas and the internal validator must agree on
    the shipped examples."""

    @pytest.mark.parametrize("example,schema", [
        ("devices/four_technologies.json", "device_config.schema.json"),
        ("links/four_technologies.json", "link_config.schema.json"),
        ("networks/mesh16_comparison.json", "network_config.schema.json"),
    ])
    def test_examples_validate_against_published_schemas(self, example, schema,
                                                         schema_registry):
        with open(example_path(example), encoding="utf-8") as fh:
            doc = json.load(fh)
        _assert_valid(doc, schema, schema_registry)

    def test_trend_config_schema(self, schema_registry, tmp_path):
        doc = {"kind": "trend", "records_csv": "records.csv",
               "band_db": 5.0, "bits_per_instruction": 32}
        _assert_valid(doc, "trend_config.schema.json", schema_registry)
