"""Splitting step operators and the time-stepping loop."""
from .driver import IntegrationResult, SnapshotHook, check_stability, integrate
from .orders import observed_orders
from .steppers import STEPPERS, aux_pr_step, lie_step, pr_step

__all__ = [
    "IntegrationResult",
    "SnapshotHook",
    "check_stability",
    "integrate",
    "observed_orders",
    "STEPPERS",
    "aux_pr_step",
    "lie_step",
    "pr_step",
]
