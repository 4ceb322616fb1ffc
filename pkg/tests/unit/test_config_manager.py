"""
Unit tests for seconet.config (ConfigManager and the pydantic schema)

Tests cover:
- Loading scenarios from JSON / YAML files
- Schema validation (unknown keys, ranges, cross-field rules)
- get with dot notation
- with_overrides / snapshot
- validate() warnings
"""
import json

import pytest
import yaml

from seconet.config import ConfigManager
from seconet.config.schema import (
    EpidemicConfig,
    GrowthConfig,
    ScenarioConfig,
    SweepPoint,
    VaccinationConfig,
    load_model,
)
from seconet.constants import STRATEGIES
from seconet.exceptions import ConfigurationError


# ===========================================================================
# Loading
# ===========================================================================

class TestLoading:

    def test_from_json_file(self, scenario_file):
        mgr = ConfigManager.from_file(scenario_file)
        assert mgr.scenario.growth.population_size == 200
        assert mgr.source == scenario_file

    def test_from_yaml_file(self, tmp_path, small_scenario_dict):
        path = tmp_path / "scenario.yaml"
        path.write_text(yaml.safe_dump(small_scenario_dict), encoding="utf-8")
        assert ConfigManager.from_file(str(path)).scenario.seed == 11

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigurationError, match="not found"):
            ConfigManager.from_file(str(tmp_path / "absent.json"))

    def test_unparseable_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"growth": [1, 2', encoding="utf-8")
        with pytest.raises(ConfigurationError):
            ConfigManager.from_file(str(path))

    def test_top_level_must_be_object(self):
        with pytest.raises(ConfigurationError):
            ConfigManager([1, 2, 3])

    def test_shipped_scenarios_are_valid(self, project_root):
        for name in ("scenario.json", "smoke.json"):
            mgr = ConfigManager.from_file(f"{project_root}/config/{name}")
            assert mgr.scenario.vaccination.strategies


# ===========================================================================
# Schema
# ===========================================================================

class TestSchema:

    def test_defaults(self, small_scenario):
        assert small_scenario.growth.fitness_floor == 0.5
        assert small_scenario.epidemic.beta == 0.13
        assert small_scenario.epidemic.clearance_mean == 330.0
        assert small_scenario.topology.gamma_method == "approximate"
        assert small_scenario.centrality.eigen_tolerance == 1e-10

    def test_unknown_key_rejected(self, small_scenario_dict):
        small_scenario_dict["growth"]["joins"] = 5
        with pytest.raises(ConfigurationError, match="growth.joins"):
            load_model(ScenarioConfig, small_scenario_dict)

    def test_prevalence_required(self, small_scenario_dict):
        del small_scenario_dict["epidemic"]["init_prevalence_male"]
        with pytest.raises(ConfigurationError, match="init_prevalence_male"):
            load_model(ScenarioConfig, small_scenario_dict)

    def test_probability_out_of_range(self):
        with pytest.raises(ConfigurationError):
            load_model(EpidemicConfig, {"beta": 1.5, "init_prevalence_female": 0.1, "init_prevalence_male": 0.1})

    def test_age_weights_must_sum_to_one(self):
        with pytest.raises(ConfigurationError):
            load_model(GrowthConfig, {"age_distribution": [0.5] * 9})

    def test_session_days_increasing(self):
        with pytest.raises(ConfigurationError):
            load_model(VaccinationConfig, {"session_days": [6, 6, 20]})

    def test_sessions_inside_horizon(self, small_scenario_dict):
        small_scenario_dict["vaccination"]["session_days"] = [6, 90]
        with pytest.raises(ConfigurationError, match="horizon"):
            load_model(ScenarioConfig, small_scenario_dict)

    def test_unknown_strategy(self):
        with pytest.raises(ConfigurationError, match="valid"):
            load_model(VaccinationConfig, {"strategies": ["none", "random"]})

    def test_strategies_in_canonical_order(self):
        cfg = load_model(VaccinationConfig, {"strategies": ["eigenvector", "none", "ring"]})
        assert cfg.strategies == ["none", "ring", "eigenvector"]
        assert VaccinationConfig().strategies == STRATEGIES

    def test_sweep_point_overrides_growth(self, small_scenario):
        growth = small_scenario.growth_for(small_scenario.sweep[1])
        assert growth.links_per_join == 3
        assert growth.population_size == 200
        assert small_scenario.growth_for(SweepPoint()) == small_scenario.growth

    def test_models_are_frozen(self, small_scenario):
        with pytest.raises(Exception):
            small_scenario.growth.horizon = 5


# ===========================================================================
# get / overrides / snapshot
# ===========================================================================

class TestAccess:

    def test_get_dot_notation(self, small_scenario_dict):
        mgr = ConfigManager(small_scenario_dict)
        assert mgr.get("growth.horizon") == 60
        assert mgr.get("epidemic.rho_female") == 0.427
        assert mgr.get("vaccination.session_days") == [6, 13]

    def test_get_missing_returns_default(self, small_scenario_dict):
        mgr = ConfigManager(small_scenario_dict)
        assert mgr.get("growth.nope") is None
        assert mgr.get("growth.nope", 3) == 3

    def test_with_overrides(self, small_scenario_dict):
        mgr = ConfigManager(small_scenario_dict)
        other = mgr.with_overrides(seed=99, replicates=None, **{"growth.horizon": 30})
        assert other.scenario.seed == 99
        assert other.scenario.replicates == 2
        assert other.scenario.growth.horizon == 30
        assert mgr.scenario.seed == 11

    def test_invalid_override_rejected(self, small_scenario_dict):
        with pytest.raises(ConfigurationError):
            ConfigManager(small_scenario_dict).with_overrides(replicates=0)

    def test_snapshot_is_a_copy(self, small_scenario_dict):
        mgr = ConfigManager(small_scenario_dict)
        snap = mgr.snapshot()
        snap["growth"]["horizon"] = 1
        assert mgr.get("growth.horizon") == 60
        json.dumps(mgr.snapshot())


# ===========================================================================
# validate
# ===========================================================================

class TestValidate:

    def test_small_scenario_warnings(self, small_scenario_dict):
        warnings = ConfigManager(small_scenario_dict).validate()
        assert len(warnings) == 2
        assert any("after the growing phase" in w for w in warnings)
        assert any("replicates=2" in w for w in warnings)

    def test_illustrative_prevalences_flagged(self, small_scenario_dict):
        small_scenario_dict["epidemic"] = {"init_prevalence_female": 0.10, "init_prevalence_male": 0.05}
        warnings = ConfigManager(small_scenario_dict).validate()
        assert any("illustrative" in w for w in warnings)

    def test_missing_null_model_flagged(self, small_scenario_dict):
        small_scenario_dict["vaccination"]["strategies"] = ["age", "degree"]
        warnings = ConfigManager(small_scenario_dict).validate()
        assert any("'none'" in w for w in warnings)

    def test_clean_scenario(self, small_scenario_dict):
        small_scenario_dict["vaccination"]["session_days"] = [6]
        small_scenario_dict["replicates"] = 30
        assert ConfigManager(small_scenario_dict).validate() == []
