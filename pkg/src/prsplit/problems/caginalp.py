"""Caginalp solidification model.

With psi = theta + l*phi the system becomes u' = (A + F)u for u = (psi, phi),
A = [[1, -l], [0, 1]] Laplacian and F(u) = (0, (1 - l)phi - phi^3 + psi).
States always hold (psi, phi); theta only appears at I/O boundaries.
"""

from typing import Any

import numpy as np

from ..errors import InvalidArgumentError, ResolventFailure, StepSizeError
from ..models import CaginalpParams, WeightedCaginalpNorm
from ..cubic import solve_increasing_cubic
from ..spectral import Field, GridSpec, LinearSymbol, State
from .base import SplitProblem

RESIDUAL_TOL = 1e-11


def caginalp_apply_F(u: State, p: CaginalpParams) -> State:
    psi, phi = u.first, u.second
    out = np.zeros_like(u.data)
    out[1] = (1.0 - p.ell) * phi - phi**3 + psi
    return State(out, u.grid)


def caginalp_nonlinear_resolvent(tau: float, w: State, p: CaginalpParams) -> State:
    """Solve (I - tau*F)v = w.

    v_psi = w_psi and v_phi is the real root of
    tau*x^3 + (1 - tau*(1 - l))*x = w_phi + tau*w_psi.
    """
    if tau < 0:
        raise InvalidArgumentError(f"tau must be nonnegative, got {tau}")
    if tau == 0:
        return w.copy()
    linear = 1.0 - tau * (1.0 - p.ell)
    if linear <= 0:
        raise StepSizeError(f"tau*(1 - l) must be < 1, got tau={tau}, l={p.ell}")

    rhs = w.second + tau * w.first
    phi = solve_increasing_cubic(tau, linear, rhs)

    out = np.empty_like(w.data)
    out[0] = w.first
    out[1] = phi

    residual = np.abs(tau * phi**3 + linear * phi - rhs)
    bad = ~(residual <= RESIDUAL_TOL * np.maximum(1.0, np.abs(rhs)))
    if np.any(bad):
        location = tuple(int(i) for i in np.argwhere(bad)[0])
        raise ResolventFailure(location, float(np.nanmax(residual)))
    return State(out, w.grid)


def caginalp_initial_values(x1: Field, x2: Field, p: CaginalpParams) -> tuple[Field, Field]:
    """(psi0, phi0) with theta0 = 1 and two crossed Gaussian ridges for phi0."""
    phi = np.exp(-20.0 * (x1**2 + x2**2 / 6.0)) + np.exp(-20.0 * (x1**2 / 6.0 + x2**2)) - 1.0
    theta = np.ones_like(phi)
    return theta + p.ell * phi, phi


def caginalp_initial(grid: GridSpec, p: CaginalpParams) -> State:
    x1, x2 = grid.coordinates()
    psi, phi = caginalp_initial_values(x1, x2, p)
    return State.from_components(grid, psi, phi)


def caginalp_extract_theta(u: State, p: CaginalpParams) -> Field:
    """Temperature theta = psi - l*phi."""
    return u.first - p.ell * u.second


class CaginalpProblem(SplitProblem):
    """Caginalp model on a periodic grid."""

    name = "caginalp"

    def __init__(self, grid: GridSpec, params: CaginalpParams | None = None):
        self.params = params or CaginalpParams()
        super().__init__(grid, LinearSymbol.caginalp(grid, self.params.ell), self.params.m_f)

    @property
    def norm_kind(self) -> WeightedCaginalpNorm:
        return WeightedCaginalpNorm(ell=self.params.ell)

    def apply_F(self, u: State) -> State:
        return caginalp_apply_F(u, self.params)

    def nonlinear_resolvent(self, tau: float, w: State) -> State:
        return caginalp_nonlinear_resolvent(tau, w, self.params)

    def initial_state(self) -> State:
        return caginalp_initial(self.grid, self.params)

    def extract_theta(self, u: State) -> Field:
        return caginalp_extract_theta(u, self.params)

    def parameters(self) -> dict[str, Any]:
        return {"ell": self.params.ell}
