"""Brute-force reference implementations for tiny grids.

The dense matrix is assembled from the spectral apply itself, so comparing
dense and spectral resolvents tests the inversion only.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .config import ORACLE_MAX_N
from .errors import InvalidArgumentError, OracleFailure, OracleScaleError
from .problems import SplitProblem
from .spectral import GridSpec, LinearSymbol, State, apply_linear, check_same_grid

PICARD_BLOWUP = 1e3


@dataclass(frozen=True)
class DenseOperator:
    """A as an m x m matrix acting on flattened states, m = 2n^2."""

    grid: GridSpec
    matrix: np.ndarray

    @property
    def size(self) -> int:
        return self.matrix.shape[0]


def densify(sym: LinearSymbol, grid: GridSpec) -> DenseOperator:
    """Build the dense matrix column by column from apply_linear on unit states."""
    check_same_grid(sym.grid, grid)
    if grid.n > ORACLE_MAX_N:
        raise OracleScaleError(f"oracle grids are capped at n={ORACLE_MAX_N}, got n={grid.n}")

    m = 2 * grid.n * grid.n
    matrix = np.empty((m, m))
    unit = np.zeros(m)
    for j in range(m):
        unit[j] = 1.0
        column = apply_linear(sym, State(unit.reshape(2, grid.n, grid.n).copy(), grid))
        matrix[:, j] = column.data.ravel()
        unit[j] = 0.0
    return DenseOperator(grid, matrix)


def dense_resolvent(op: DenseOperator, tau: float, w: State) -> State:
    """Solve (I - tau*A)x = w by LU factorization."""
    check_same_grid(op.grid, w.grid)
    if tau < 0:
        raise InvalidArgumentError(f"tau must be nonnegative, got {tau}")
    if tau == 0:
        return w.copy()

    system = np.eye(op.size) - tau * op.matrix
    try:
        lu, piv = scipy.linalg.lu_factor(system, check_finite=True)
    except (ValueError, scipy.linalg.LinAlgError) as e:
        raise OracleFailure(f"dense factorization failed: {e}") from e
    if np.any(np.diag(lu) == 0):
        raise OracleFailure("dense system is singular")

    x = scipy.linalg.lu_solve((lu, piv), w.data.ravel())
    return State(x.reshape(w.data.shape), w.grid)


def picard_nonlinear_resolvent(
    problem: SplitProblem,
    tau: float,
    w: State,
    tol: float = 1e-14,
    max_iter: int = 200,
) -> State:
    """Fixed-point iteration v <- w + tau*F(v) starting at v = w.

    Raises:
        OracleFailure: the iteration grows, produces NaN/Inf or does not
            reach tol within max_iter sweeps.
    """
    if tau < 0:
        raise InvalidArgumentError(f"tau must be nonnegative, got {tau}")
    if tau == 0:
        return w.copy()

    v = w.copy()
    first_change = None
    for iteration in range(1, max_iter + 1):
        nxt = w + tau * problem.apply_F(v)
        change = float(np.max(np.abs(nxt.data - v.data)))
        if not np.isfinite(change):
            raise OracleFailure(f"Picard iterate became non-finite at sweep {iteration}")
        if first_change is None:
            first_change = change
        elif change > PICARD_BLOWUP * max(first_change, tol):
            raise OracleFailure(
                f"Picard iteration diverging at sweep {iteration} (change {change:.3e}); "
                "use a smaller tau"
            )
        v = nxt
        if change <= tol:
            return v

    raise OracleFailure(f"Picard iteration did not reach {tol:g} in {max_iter} sweeps")
