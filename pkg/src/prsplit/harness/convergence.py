"""Temporal convergence studies against a same-scheme reference solution."""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from ..config import CONVERGENCE_CSV, CONVERGENCE_SVG, REPORT_JSON
from ..errors import ConfigurationError, DegenerateMeasurementError
from ..integrators import integrate, observed_orders
from ..logging import STUDY_END, STUDY_RUN, RunLogger
from ..models import ConvergenceReport, ConvergenceRow, RunSpec
from ..norms import error_norm
from ..problems import build_problem
from ..reporting import emit_loglog_svg
from ..spectral import GridSpec, State, make_grid
from ..storage import write_csv_rows, write_json

STEP_COUNT_TOL = 1e-9
MIN_REFERENCE_RATIO = 8

CSV_HEADER = ("h", "n_steps", "error", "observed_order")


@dataclass
class StudyRun:
    """Final state of one integration and how long it took."""

    final: State
    wall_time: float


def study_step_counts(spec: RunSpec) -> list[int]:
    """Step counts t_final/h for spec.h_list, coarsest first.

    Raises:
        ConfigurationError: missing h_list/ref_steps, non-integer step counts,
            repeated step sizes or a reference that is not fine enough.
    """
    if not spec.h_list:
        raise ConfigurationError("converge needs h_list")
    if spec.ref_steps is None:
        raise ConfigurationError("converge needs ref_steps")

    counts = []
    for h in spec.h_list:
        exact = spec.t_final / h
        count = int(round(exact))
        if count < 1 or abs(exact - count) > STEP_COUNT_TOL * max(1.0, exact):
            raise ConfigurationError(
                f"t_final/h must be a whole number of steps, got {spec.t_final}/{h} = {exact}"
            )
        counts.append(count)

    counts = sorted(counts)
    if len(set(counts)) != len(counts):
        raise ConfigurationError(f"h_list contains repeated step sizes: {spec.h_list}")
    if spec.ref_steps < MIN_REFERENCE_RATIO * counts[-1]:
        raise ConfigurationError(
            f"ref_steps={spec.ref_steps} must be at least {MIN_REFERENCE_RATIO}x the finest "
            f"study run ({counts[-1]} steps)"
        )
    return counts


def _integrate_final(spec: RunSpec, grid: GridSpec, n_steps: int, run_log: RunLogger) -> StudyRun:
    problem = build_problem(spec.model, grid, spec.problem_params())
    started = time.perf_counter()
    cfg = spec.stepper_config(n_steps)
    result = integrate(problem, cfg, problem.initial_state(), run_log=run_log)
    return StudyRun(result.final, time.perf_counter() - started)


def run_convergence_study(
    spec: RunSpec, run_log: Optional[RunLogger] = None
) -> ConvergenceReport:
    """Measure errors at t_final for every step size in spec.h_list.

    The reference uses the same scheme with spec.ref_steps steps, on the
    study grid or, with ref_grid_factor > 1, on a refined grid whose result
    is subsampled back. Independent runs execute on spec.workers threads;
    the report is assembled in decreasing-h order.

    Writes convergence.csv, convergence.svg and report.json into spec.out.

    Raises:
        ConfigurationError: invalid study settings.
        DegenerateMeasurementError: an error came out as zero.
        StepFailure, NonFiniteStateError: numerical breakdown in any run.
    """
    counts = study_step_counts(spec)
    assert spec.ref_steps is not None

    out = Path(spec.out)
    out.mkdir(parents=True, exist_ok=True)
    if run_log is None:
        run_log = RunLogger(out)

    grid = make_grid(spec.n, spec.domain_half_width)
    ref_grid = (
        make_grid(spec.n * spec.ref_grid_factor, spec.domain_half_width)
        if spec.ref_grid_factor > 1
        else grid
    )

    with ThreadPoolExecutor(max_workers=spec.workers) as pool:
        reference_future = pool.submit(_integrate_final, spec, ref_grid, spec.ref_steps, run_log)
        futures = {n: pool.submit(_integrate_final, spec, grid, n, run_log) for n in counts}
        reference = reference_future.result()
        runs = {n: future.result() for n, future in futures.items()}

    reference_state = reference.final.restrict(grid) if ref_grid is not grid else reference.final
    kind = spec.norm_kind()

    rows = []
    for n in counts:
        h = spec.t_final / n
        error = error_norm(kind, runs[n].final, reference_state)
        if not error > 0:
            raise DegenerateMeasurementError(f"zero error at h={h}; reference equals study run")
        wall_time = runs[n].wall_time
        run_log.log(STUDY_RUN, {"h": h, "n_steps": n, "error": error, "wall_time": wall_time})
        rows.append(ConvergenceRow(h=h, n_steps=n, error=error, wall_time=wall_time))

    if len(rows) > 1:
        orders = observed_orders([row.h for row in rows], [row.error for row in rows])
        for row, order in zip(rows[1:], orders):
            row.observed_order = order

    report = ConvergenceReport(
        model=spec.model,
        scheme=spec.scheme,
        norm=kind.tag,
        n=spec.n,
        t_final=spec.t_final,
        reference_n_steps=spec.ref_steps,
        reference_grid_n=ref_grid.n,
        rows=rows,
    )

    write_csv_rows(
        out / CONVERGENCE_CSV,
        CSV_HEADER,
        ([row.h, row.n_steps, row.error, row.observed_order] for row in report.rows),
    )
    emit_loglog_svg(report, out / CONVERGENCE_SVG)
    write_json(out / REPORT_JSON, report, exclude={"rows": {"__all__": {"wall_time"}}})

    run_log.log(STUDY_END, {
        "model": spec.model.value,
        "scheme": spec.scheme.value,
        "orders": report.orders,
        "reference_steps": spec.ref_steps,
        "reference_grid_n": ref_grid.n,
    })
    return report
