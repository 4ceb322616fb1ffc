from seconet.harness.metrics import EpidemicMetrics, compute_metrics
from seconet.harness.simulation import RandomStreams, SimulationResult, derive_streams, run_simulation
from seconet.harness.sweep import SummaryRecord, replicate_seeds, run_task, sweep, sweep_tasks

__all__ = [
    "EpidemicMetrics",
    "RandomStreams",
    "SimulationResult",
    "SummaryRecord",
    "compute_metrics",
    "derive_streams",
    "replicate_seeds",
    "run_simulation",
    "run_task",
    "sweep",
    "sweep_tasks",
]
