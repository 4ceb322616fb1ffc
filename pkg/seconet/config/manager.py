"""
Scenario Configuration Manager.

Loads one scenario document (JSON, or YAML which is a superset), validates
it against :class:`~seconet.config.schema.ScenarioConfig` and exposes the
result through dot-notation lookups.

Usage:
    from seconet.config import ConfigManager

    config = ConfigManager.from_file("config/scenario.json")
    scenario = config.scenario
    horizon = config.get('growth.horizon')
    config.validate()
"""

import copy
import logging
import os
from typing import Any, Dict, List, Optional

import yaml

from seconet.config.schema import ScenarioConfig, load_model
from seconet.constants import (
    ILLUSTRATIVE_INIT_PREVALENCE_FEMALE,
    ILLUSTRATIVE_INIT_PREVALENCE_MALE,
    LOGGER_NAME,
    STRATEGY_NONE,
)
from seconet.exceptions import ConfigurationError

logger = logging.getLogger(LOGGER_NAME)


class ConfigManager:
    """
    Holds a validated scenario plus the raw document it came from.

    The raw dict is kept so dot-notation ``get`` can answer for keys the user
    wrote explicitly; the validated model carries every default.
    """

    def __init__(self, data: Dict[str, Any], source: Optional[str] = None):
        """
        Initialize ConfigManager.

        Args:
            data:   Parsed scenario document
            source: Path the document was read from (for messages only)
        """
        if not isinstance(data, dict):
            raise ConfigurationError(
                f"Scenario {source or '<inline>'} must be a JSON object, got {type(data).__name__}"
            )
        self.source = source
        self._raw: Dict[str, Any] = copy.deepcopy(data)
        self.scenario: ScenarioConfig = load_model(ScenarioConfig, data)
        logger.info(
            "Loaded scenario %s — N=%d, T=%d, %d sweep point(s), %d strateg(ies), %d replicate(s)",
            source or "<inline>",
            self.scenario.growth.population_size,
            self.scenario.growth.horizon,
            len(self.scenario.sweep),
            len(self.scenario.vaccination.strategies),
            self.scenario.replicates,
        )

    @classmethod
    def from_file(cls, path: str) -> "ConfigManager":
        """Read and validate a scenario file."""
        if not os.path.exists(path):
            raise ConfigurationError(f"Scenario file not found: {path}")
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as exc:
            raise ConfigurationError(f"Cannot parse scenario {path}: {exc}") from exc
        return cls(data or {}, source=path)

    # ===== Public API =====

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get a configuration value using dot notation.

        Examples:
            config.get('growth.population_size')
            config.get('epidemic.beta')
            config.get('vaccination.session_days')

        Args:
            key: Configuration key (dot-separated)
            default: Default value if key not found

        Returns:
            Configuration value (validated, defaults applied) or default
        """
        return self._get_nested(self.scenario.model_dump(), key.split("."), default)

    def with_overrides(self, **overrides: Any) -> "ConfigManager":
        """
        Return a new manager with top-level keys replaced (CLI flags such as
        ``--seed`` or ``--replicates``). ``None`` values are ignored.
        """
        data = copy.deepcopy(self._raw)
        for key, value in overrides.items():
            if value is None:
                continue
            self._set_nested(data, key.split("."), value)
        return ConfigManager(data, source=self.source)

    def snapshot(self) -> Dict[str, Any]:
        """Deep copy of the fully-resolved scenario (defaults included)."""
        return copy.deepcopy(self.scenario.model_dump())

    def _get_nested(self, data: Dict, keys: List[str], default: Any) -> Any:
        """Get nested value from dict using key path."""
        current: Any = data
        for key in keys:
            if isinstance(current, dict) and key in current:
                current = current[key]
            else:
                return default
        return current

    def _set_nested(self, data: Dict, keys: List[str], value: Any):
        """Set nested value in dict using key path."""
        current = data
        for key in keys[:-1]:
            if key not in current or not isinstance(current[key], dict):
                current[key] = {}
            current = current[key]
        current[keys[-1]] = value

    # ===== Validation =====

    def validate(self) -> List[str]:
        """Check the scenario for suspicious (but legal) settings and log warnings.

        Hard errors were already raised by the schema. Checks performed:
        - initial prevalences left at the illustrative shipped values
        - session days falling after the first phase ends
        - a strategy list without the null model (no baseline for comparisons)
        - fewer than 30 replicates (directional tests lose power)

        Returns:
            List of warning message strings.  Empty list means clean config.
        """
        warnings: List[str] = []
        s = self.scenario

        if (
            s.epidemic.init_prevalence_female == ILLUSTRATIVE_INIT_PREVALENCE_FEMALE
            and s.epidemic.init_prevalence_male == ILLUSTRATIVE_INIT_PREVALENCE_MALE
        ):
            warnings.append(
                "init_prevalence_female/male are the illustrative example values, "
                "not calibrated inputs"
            )

        g = s.growth
        if g.joins_per_step > 0:
            seeded = 2 * g.initial_links
            growth_end = -(-(g.population_size - seeded) // g.joins_per_step)
            late = [d for d in s.vaccination.session_days if d > growth_end]
            if late:
                warnings.append(
                    f"session days {late} fall after the growing phase ends (about day {growth_end})"
                )

        if STRATEGY_NONE not in s.vaccination.strategies:
            warnings.append("strategy list has no 'none' baseline; null comparisons unavailable")

        if s.replicates < 30:
            warnings.append(f"replicates={s.replicates} (< 30) weakens strategy comparisons")

        for msg in warnings:
            logger.warning("Config validation: %s", msg)
        if not warnings:
            logger.info("Config validation passed — no issues found")
        return warnings
