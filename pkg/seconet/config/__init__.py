"""
Configuration package.

Usage:
    from seconet.config import ConfigManager, ScenarioConfig

    config = ConfigManager.from_file("config/scenario.json")
    growth = config.scenario.growth
"""

from seconet.config.manager import ConfigManager
from seconet.config.schema import (
    CentralityConfig,
    EpidemicConfig,
    GrowthConfig,
    ScenarioConfig,
    SweepPoint,
    TopologyConfig,
    VaccinationConfig,
    load_model,
)

__all__ = [
    "ConfigManager",
    "CentralityConfig",
    "EpidemicConfig",
    "GrowthConfig",
    "ScenarioConfig",
    "SweepPoint",
    "TopologyConfig",
    "VaccinationConfig",
    "load_model",
]
