from seconet.epidemic.engine import (
    Compartment,
    DailyCounts,
    EpidemicState,
    HealthState,
    VaccinationHook,
    clearance_step,
    coital_act_probability,
    run_day,
    seed_infection,
    transmission_step,
)

__all__ = [
    "Compartment",
    "DailyCounts",
    "EpidemicState",
    "HealthState",
    "VaccinationHook",
    "clearance_step",
    "coital_act_probability",
    "run_day",
    "seed_infection",
    "transmission_step",
]
