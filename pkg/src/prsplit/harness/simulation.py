"""Long pattern-formation runs: snapshots, contour export and drift checks."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from ..config import FINAL_CSV, LOCAL_MAX_THRESHOLD, SNAPSHOT_PATTERN
from ..errors import ConfigurationError
from ..logging import PSI_MEAN_DRIFT, RUN_END, RUN_START, RunLogger
from ..models import RunSpec
from ..norms import error_norm
from ..problems import CaginalpProblem, SplitProblem, build_problem
from ..spectral import Field, State, make_grid
from ..storage import write_columns_csv, write_snapshot
from ..integrators import integrate


@dataclass
class SimulationResult:
    """Outcome of run_simulation()."""

    final: State
    time: float
    snapshot_paths: list[Path] = field(default_factory=list)
    contour_path: Optional[Path] = None
    psi_mean_drift: Optional[float] = None  # Caginalp only, relative
    displacement: Optional[float] = None  # |u(T) - u(0)| in the run norm


def count_local_maxima(values: Field, threshold: float = LOCAL_MAX_THRESHOLD) -> int:
    """Count periodic 8-neighbor strict local maxima above threshold."""
    values = np.asarray(values)
    is_max = values > threshold
    for shift_0 in (-1, 0, 1):
        for shift_1 in (-1, 0, 1):
            if shift_0 == 0 and shift_1 == 0:
                continue
            is_max &= values > np.roll(values, (shift_0, shift_1), axis=(0, 1))
    return int(np.count_nonzero(is_max))


def contour_components(problem: SplitProblem, u: State) -> tuple[tuple[str, str], Field, Field]:
    """Column names and the two fields exported for contour plots."""
    if isinstance(problem, CaginalpProblem):
        return ("theta", "phi"), problem.extract_theta(u), u.second
    return ("u1", "u2"), u.first, u.second


def write_contour_csv(path: Path, problem: SplitProblem, u: State) -> None:
    """Write `x1,x2,<c1>,<c2>` with one row per grid node (x1 outer, x2 inner)."""
    names, first, second = contour_components(problem, u)
    x1, x2 = u.grid.coordinates()

    write_columns_csv(path, ("x1", "x2", *names), (x1, x2, first, second))


def snapshot_steps(spec: RunSpec) -> list[int]:
    """Step indices of the requested snapshot times plus the final step."""
    n_steps = spec.n_steps or 0
    if n_steps == 0:
        return [0]
    h = spec.h
    steps = {n_steps}
    for t in spec.snapshot_times:
        steps.add(min(n_steps, int(round(t / h))))
    return sorted(steps)


def run_simulation(spec: RunSpec, run_log: Optional[RunLogger] = None) -> SimulationResult:
    """Integrate spec.model to spec.t_final, writing snapshots and a contour CSV.

    Snapshot times are rounded to the nearest step; the final state is always
    written. The distance |u(T) - u(0)| in spec.norm is logged with the run end,
    and for Caginalp the relative drift of mean(psi) as well.

    Raises:
        ConfigurationError: n_steps missing or invalid settings.
        StepFailure, NonFiniteStateError: numerical breakdown, with the step.
    """
    if spec.n_steps is None:
        raise ConfigurationError("run needs n_steps")

    out = Path(spec.out)
    out.mkdir(parents=True, exist_ok=True)
    if run_log is None:
        run_log = RunLogger(out)

    grid = make_grid(spec.n, spec.domain_half_width)
    problem = build_problem(spec.model, grid, spec.problem_params())
    cfg = spec.stepper_config(spec.n_steps)
    u0 = problem.initial_state()

    run_log.log(RUN_START, {
        **problem.describe(),
        "scheme": spec.scheme.value,
        "t_final": spec.t_final,
        "n_steps": spec.n_steps,
    })

    written: list[Path] = []

    def save(step: int, time: float, state: State) -> None:
        path = out / SNAPSHOT_PATTERN.format(step=step)
        write_snapshot(path, state.data, time)
        written.append(path)

    integration = integrate(problem, cfg, u0, snapshot_steps(spec), hook=save, run_log=run_log)
    final = integration.final

    contour_path = out / FINAL_CSV
    write_contour_csv(contour_path, problem, final)

    drift = None
    if isinstance(problem, CaginalpProblem):
        start, end = u0.mean(0), final.mean(0)
        drift = abs(end - start) / max(abs(start), np.finfo(float).tiny)
        run_log.log(PSI_MEAN_DRIFT, {"initial": start, "final": end, "relative": drift})

    displacement = error_norm(spec.norm_kind(), final, u0)

    run_log.log(RUN_END, {
        "model": problem.name,
        "time": integration.time,
        "norm": spec.norm,
        "displacement": displacement,
        "snapshots": [p.name for p in written],
    })

    return SimulationResult(
        final=final,
        time=integration.time if spec.n_steps else 0.0,
        snapshot_paths=written,
        contour_path=contour_path,
        psi_mean_drift=drift,
        displacement=displacement,
    )
