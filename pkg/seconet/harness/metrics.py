"""Epidemic outcome metrics of one run's daily series."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Dict, Sequence

import numpy as np

from seconet.epidemic.engine import DailyCounts


@dataclass(frozen=True)
class EpidemicMetrics:
    peak_inc: int
    peak_day: int
    cum_inc: int
    peak_inc_f: int
    peak_day_f: int
    cum_inc_f: int
    peak_inc_m: int
    peak_day_m: int
    cum_inc_m: int

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


def _cohort(days: np.ndarray, new_inf: np.ndarray, infected: np.ndarray, seeded: int):
    peak_inc = int(new_inf.max()) if new_inf.size else 0
    # argmax returns the first maximum, so ties resolve to the earliest day
    peak_day = int(days[np.argmax(infected)]) if infected.size and infected.max() > 0 else 0
    return peak_inc, peak_day, seeded + int(new_inf.sum())


def compute_metrics(series: Sequence[DailyCounts]) -> EpidemicMetrics:
    """
    Peak incidence, earliest peak-prevalence day and cumulative incidence,
    overall and per gender.

    The day-0 row holds the seeded infections; they count toward cumulative
    incidence but not toward daily incidence.
    """
    if not series:
        return EpidemicMetrics(0, 0, 0, 0, 0, 0, 0, 0, 0)
    rows = sorted(series, key=lambda c: c.day)
    days = np.array([c.day for c in rows])
    start = rows[0] if rows[0].day == 0 else None
    later = [c for c in rows if c.day > 0]

    def column(name: str, source=rows) -> np.ndarray:
        return np.array([getattr(c, name) for c in source], dtype=np.int64)

    overall = _cohort(days, column("new_inf", later), column("I"), start.I if start else 0)
    female = _cohort(days, column("new_inf_f", later), column("I_f"), start.I_f if start else 0)
    male = _cohort(days, column("new_inf_m", later), column("I_m"), start.I_m if start else 0)
    return EpidemicMetrics(*overall, *female, *male)
