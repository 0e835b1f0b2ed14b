"""Drivers behind the `run` and `converge` commands."""
from .convergence import run_convergence_study, study_step_counts
from .simulation import (
    SimulationResult,
    count_local_maxima,
    run_simulation,
    snapshot_steps,
    write_contour_csv,
)

__all__ = [
    "run_convergence_study",
    "study_step_counts",
    "SimulationResult",
    "count_local_maxima",
    "run_simulation",
    "snapshot_steps",
    "write_contour_csv",
]
