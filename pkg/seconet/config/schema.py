"""Pydantic models for every configuration section.

All models reject unknown keys and are frozen once validated. Build them
through :func:`load_model` so schema violations surface as
:class:`~seconet.exceptions.ConfigurationError` rather than pydantic's own
error type.
"""

from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional, Type, TypeVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from seconet.constants import (
    AGE_BUCKETS,
    DEFAULT_AGE_WEIGHTS,
    DEFAULT_BETA,
    DEFAULT_CLEARANCE_MEAN,
    DEFAULT_COVERAGE_FRACTION,
    DEFAULT_EARLY_WINDOW,
    DEFAULT_EIGEN_MAX_ITERATIONS,
    DEFAULT_EIGEN_TOLERANCE,
    DEFAULT_F_EARLY,
    DEFAULT_F_LATE,
    DEFAULT_FEMALE_FRACTION,
    DEFAULT_FITNESS_FLOOR,
    DEFAULT_GAMMA_SHAPE,
    DEFAULT_HORIZON,
    DEFAULT_INITIAL_LINKS,
    DEFAULT_JOINS_PER_STEP,
    DEFAULT_LINKS_PER_JOIN,
    DEFAULT_MEAN_AGE_GAP,
    DEFAULT_MEAN_DELTA,
    DEFAULT_PLOT_BINS,
    DEFAULT_POPULATION_SIZE,
    DEFAULT_POWERLAW_KMIN,
    DEFAULT_REPLICATES,
    DEFAULT_RHO_FEMALE,
    DEFAULT_RHO_MALE,
    DEFAULT_SECONDARY_RETRIES,
    DEFAULT_SESSION_DAYS,
    STRATEGIES,
    VACCINE_AGE_CUTOFF,
    WEIGHT_SUM_TOLERANCE,
)
from seconet.exceptions import ConfigurationError

M = TypeVar("M", bound=BaseModel)


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class GrowthConfig(_Section):
    """Parameters of the network growth model."""

    population_size: int = Field(DEFAULT_POPULATION_SIZE, gt=0)
    initial_links: int = Field(DEFAULT_INITIAL_LINKS, ge=1)
    joins_per_step: int = Field(DEFAULT_JOINS_PER_STEP, ge=0)
    links_per_join: int = Field(DEFAULT_LINKS_PER_JOIN, ge=1)
    fitness_floor: float = Field(DEFAULT_FITNESS_FLOOR, gt=0.0)
    mean_age_gap: float = Field(DEFAULT_MEAN_AGE_GAP, gt=0.0)
    horizon: int = Field(DEFAULT_HORIZON, ge=1)
    age_distribution: List[float] = Field(default_factory=lambda: list(DEFAULT_AGE_WEIGHTS))
    female_fraction: float = Field(DEFAULT_FEMALE_FRACTION, ge=0.0, le=1.0)
    gamma_shape: float = Field(DEFAULT_GAMMA_SHAPE, gt=0.0)
    mean_delta: float = Field(DEFAULT_MEAN_DELTA, gt=0.0)
    secondary_retries: int = Field(DEFAULT_SECONDARY_RETRIES, ge=1)

    @field_validator("age_distribution")
    @classmethod
    def _weights_sum_to_one(cls, v: List[float]) -> List[float]:
        if len(v) != len(AGE_BUCKETS):
            raise ValueError(f"age_distribution needs {len(AGE_BUCKETS)} bucket weights, got {len(v)}")
        if any(w < 0 for w in v):
            raise ValueError("age_distribution weights must be non-negative")
        if abs(sum(v) - 1.0) > WEIGHT_SUM_TOLERANCE:
            raise ValueError(f"age_distribution weights sum to {sum(v)!r}, expected 1")
        return v


class EpidemicConfig(_Section):
    """SIRS transmission parameters. Initial prevalences have no default."""

    beta: float = Field(DEFAULT_BETA, ge=0.0, le=1.0)
    clearance_mean: float = Field(DEFAULT_CLEARANCE_MEAN, gt=0.0)
    rho_female: float = Field(DEFAULT_RHO_FEMALE, ge=0.0, le=1.0)
    rho_male: float = Field(DEFAULT_RHO_MALE, ge=0.0, le=1.0)
    init_prevalence_female: float = Field(ge=0.0, le=1.0)
    init_prevalence_male: float = Field(ge=0.0, le=1.0)
    f_early: float = Field(DEFAULT_F_EARLY, ge=0.0, le=1.0)
    f_late: float = Field(DEFAULT_F_LATE, ge=0.0, le=1.0)
    early_window: int = Field(DEFAULT_EARLY_WINDOW, ge=0)


class VaccinationConfig(_Section):
    """Template from which a per-run VaccinationPlan is built."""

    session_days: List[int] = Field(default_factory=lambda: list(DEFAULT_SESSION_DAYS))
    coverage_fraction: float = Field(DEFAULT_COVERAGE_FRACTION, ge=0.0, le=1.0)
    age_cutoff: int = Field(VACCINE_AGE_CUTOFF, ge=0)
    strategies: List[str] = Field(default_factory=lambda: list(STRATEGIES))
    restrict_under_26: bool = False
    proportional_selection: bool = False

    @field_validator("session_days")
    @classmethod
    def _strictly_increasing(cls, v: List[int]) -> List[int]:
        if any(d < 1 for d in v):
            raise ValueError("session days start at day 1")
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError(f"session_days must be strictly increasing, got {v}")
        return v

    @field_validator("strategies")
    @classmethod
    def _known_strategies(cls, v: List[str]) -> List[str]:
        unknown = [s for s in v if s not in STRATEGIES]
        if unknown:
            raise ValueError(f"unknown strategies {unknown}; valid: {', '.join(STRATEGIES)}")
        if not v:
            raise ValueError("at least one strategy is required")
        # canonical order keeps colours and legends stable
        return [s for s in STRATEGIES if s in v]


class TopologyConfig(_Section):
    powerlaw_kmin: int = Field(DEFAULT_POWERLAW_KMIN, ge=1)
    gamma_method: Literal["approximate", "exact"] = "approximate"


class CentralityConfig(_Section):
    eigen_tolerance: float = Field(DEFAULT_EIGEN_TOLERANCE, gt=0.0)
    eigen_max_iterations: int = Field(DEFAULT_EIGEN_MAX_ITERATIONS, ge=1)


class SweepPoint(_Section):
    """Overrides applied on top of the base GrowthConfig for one sweep point."""

    links_per_join: Optional[int] = Field(None, ge=1)
    fitness_floor: Optional[float] = Field(None, gt=0.0)
    gamma_shape: Optional[float] = Field(None, gt=0.0)
    mean_delta: Optional[float] = Field(None, gt=0.0)

    def overrides(self) -> Dict[str, Any]:
        return self.model_dump(exclude_none=True)


class ScenarioConfig(_Section):
    """A complete experiment: one JSON document."""

    growth: GrowthConfig = Field(default_factory=GrowthConfig)
    epidemic: EpidemicConfig
    vaccination: VaccinationConfig = Field(default_factory=VaccinationConfig)
    topology: TopologyConfig = Field(default_factory=TopologyConfig)
    centrality: CentralityConfig = Field(default_factory=CentralityConfig)
    sweep: List[SweepPoint] = Field(default_factory=lambda: [SweepPoint()])
    seed: int = Field(0, ge=0)
    replicates: int = Field(DEFAULT_REPLICATES, ge=1)
    parallel: int = Field(1, ge=1)
    plot_bins: int = Field(DEFAULT_PLOT_BINS, ge=1)

    @model_validator(mode="after")
    def _sessions_inside_horizon(self) -> "ScenarioConfig":
        late = [d for d in self.vaccination.session_days if d > self.growth.horizon]
        if late:
            raise ValueError(f"session days {late} fall after the horizon T={self.growth.horizon}")
        if not self.sweep:
            raise ValueError("sweep must contain at least one point")
        return self

    def growth_for(self, point: SweepPoint) -> GrowthConfig:
        """Return the complete GrowthConfig for one sweep point."""
        return load_model(GrowthConfig, {**self.growth.model_dump(), **point.overrides()})


def load_model(cls: Type[M], data: Any) -> M:
    """Validate ``data`` into ``cls``, converting schema errors to ConfigurationError."""
    try:
        return cls.model_validate(data)
    except ValidationError as exc:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or '<root>'}: {err['msg']}"
            for err in exc.errors()
        )
        raise ConfigurationError(f"Invalid {cls.__name__}: {problems}") from exc
