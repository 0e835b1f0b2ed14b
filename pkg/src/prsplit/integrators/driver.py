"""Time-stepping loop with snapshots, stability guard and health checks."""

import warnings
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from ..errors import (
    InvalidArgumentError,
    NumericalError,
    StabilityViolation,
    StabilityWarning,
    StepFailure,
)
from ..logging import STABILITY_WARNING, STEP_FAILURE, RunLogger
from ..models import StepperConfig
from ..problems import SplitProblem
from ..spectral import State, check_same_grid
from .steppers import STEPPERS

SnapshotHook = Callable[[int, float, State], None]


@dataclass
class IntegrationResult:
    """Outcome of integrate()."""

    final: State
    snapshots: dict[int, State] = field(default_factory=dict)
    n_steps: int = 0
    time: float = 0.0


def check_stability(
    problem: SplitProblem, cfg: StepperConfig, run_log: Optional[RunLogger] = None
) -> bool:
    """Check h*max{M[A], M[F]} against the scheme's bound.

    Returns:
        True if the hypothesis holds.

    Raises:
        StabilityViolation: if it does not and cfg.enforce_stability is set.
    """
    value = cfg.h * max(problem.m_a, problem.m_f)
    if value <= cfg.stability_limit:
        return True

    message = (
        f"h*max(M[A], M[F]) = {value:.4g} exceeds {cfg.stability_limit:g} "
        f"for {cfg.scheme.value} on {problem.name} (h={cfg.h:.4g}, M[F]={problem.m_f:g})"
    )
    if cfg.enforce_stability:
        raise StabilityViolation(message)

    warnings.warn(message, StabilityWarning, stacklevel=2)
    if run_log is not None:
        run_log.log(STABILITY_WARNING, {
            "model": problem.name,
            "scheme": cfg.scheme.value,
            "h": cfg.h,
            "m_f": problem.m_f,
            "value": value,
            "limit": cfg.stability_limit,
        })
    return False


def integrate(
    problem: SplitProblem,
    cfg: StepperConfig,
    u0: State,
    snapshot_steps: Iterable[int] = (),
    hook: Optional[SnapshotHook] = None,
    run_log: Optional[RunLogger] = None,
) -> IntegrationResult:
    """Apply cfg.n_steps steps of the configured scheme to u0.

    Snapshots are kept (and passed to hook as read-only views) at the
    requested step indices, 0 meaning the initial state.

    Raises:
        StabilityViolation: stability enforced and violated.
        StepFailure: a resolvent failed; carries the step index.
        NonFiniteStateError: NaN/Inf after a step; carries the step index.
    """
    check_same_grid(problem.grid, u0.grid)
    wanted = sorted(set(snapshot_steps))
    if any(k < 0 or k > cfg.n_steps for k in wanted):
        raise InvalidArgumentError(f"snapshot steps must lie in [0, {cfg.n_steps}]")
    wanted_set = set(wanted)

    if cfg.n_steps:
        check_stability(problem, cfg, run_log)
    step = STEPPERS[cfg.scheme]
    u0.check_finite(step=0)

    result = IntegrationResult(final=u0)

    def record(k: int, state: State) -> None:
        if k in wanted_set:
            result.snapshots[k] = state.copy()
            if hook is not None:
                hook(k, k * cfg.h, state.view())

    u = u0
    record(0, u)
    for k in range(1, cfg.n_steps + 1):
        try:
            u = step(problem, cfg.h, u)
        except NumericalError as err:
            if run_log is not None:
                run_log.log(STEP_FAILURE, {"step": k, "error": str(err)})
            raise StepFailure(k, err) from err
        u.check_finite(step=k)
        record(k, u)

    result.final = u if cfg.n_steps else u0.copy()
    result.n_steps = cfg.n_steps
    result.time = cfg.n_steps * cfg.h
    return result
