"""Gray-Scott pattern formation model.

A = diag(d1, d2) Laplacian, F(u) = (-u1*u2^2 + l1*(1 - u1), u1*u2^2 - l2*u2).
"""

from math import e, pi
from typing import Any

import numpy as np

from ..cubic import cubic_real_roots, newton_2x2
from ..errors import InvalidArgumentError, IterationError, ResolventFailure
from ..models import GraphGrayScottNorm, GrayScottParams
from ..spectral import Field, GridSpec, LinearSymbol, State
from .base import SplitProblem

RESIDUAL_TOL = 1e-10

HUMP_RADIUS = pi / 10
HUMP_CENTERS = [(sx * pi / 10, sy * pi / 10) for sx in (-1, 1) for sy in (-1, 1)]
HUMP_SCALE = e / 4


def _reaction(u1: np.ndarray, u2: np.ndarray, p: GrayScottParams) -> tuple[np.ndarray, np.ndarray]:
    u1u2sq = u1 * u2 * u2
    return -u1u2sq + p.l1 * (1.0 - u1), u1u2sq - p.l2 * u2


def grayscott_apply_F(u: State, p: GrayScottParams) -> State:
    f1, f2 = _reaction(u.first, u.second, p)
    return State.from_components(u.grid, f1, f2)


def _resolvent_system(tau: float, w1: np.ndarray, w2: np.ndarray, p: GrayScottParams):
    """Residual and Jacobian of v - tau*F(v) - w."""

    def evaluate(v1: np.ndarray, v2: np.ndarray) -> tuple[np.ndarray, ...]:
        f1, f2 = _reaction(v1, v2, p)
        r1 = v1 - tau * f1 - w1
        r2 = v2 - tau * f2 - w2
        j11 = 1.0 + tau * (v2 * v2 + p.l1)
        j12 = 2.0 * tau * v1 * v2
        j21 = -tau * v2 * v2
        j22 = 1.0 - tau * (2.0 * v1 * v2 - p.l2)
        return r1, r2, j11, j12, j21, j22

    return evaluate


def _worst_point(evaluate, bad: np.ndarray, err: IterationError) -> tuple[tuple[int, ...], float]:
    """Grid index and residual of the worst point left by a failed Newton solve on bad."""
    points = np.argwhere(bad)
    if err.iterate is None:
        return tuple(int(i) for i in points[0]), err.residual
    r1, r2, *_ = evaluate(*err.iterate)
    residual = np.maximum(np.abs(r1), np.abs(r2))
    residual = np.where(np.isfinite(residual), residual, np.inf)
    worst = int(np.argmax(residual))
    return tuple(int(i) for i in points[worst]), float(residual[worst])


def grayscott_nonlinear_resolvent(
tau: float, w: State, p: GrayScottParams) -> State:
    """Solve (I - tau*F)v = w pointwise.

    Eliminating v1 = (w1 + tau*l1) / (1 + tau*l1 + tau*v2^2) leaves a cubic in
    v2. Among its real roots the one closest to w2 is taken (the branch that
    tends to w2 as tau -> 0); points whose full residual is still too large
    are re-solved with damped Newton from (w1, w2).
    """
    if tau < 0:
        raise InvalidArgumentError(f"tau must be nonnegative, got {tau}")
    if tau == 0:
        return w.copy()

    w1, w2 = w.first, w.second
    a = 1.0 + tau * p.l1
    b = 1.0 + tau * p.l2
    c3 = tau * b
    c2 = -tau * (w1 + w2 + tau * p.l1)
    c1 = a * b
    c0 = -a * w2

    roots, valid = cubic_real_roots(c3, c2, c1, c0)
    distance = np.where(valid, np.abs(roots - w2[..., None]), np.inf)
    pick = np.argmin(distance, axis=-1)
    v2 = np.take_along_axis(roots, pick[..., None], axis=-1)[..., 0]
    v1 = (w1 + tau * p.l1) / (a + tau * v2 * v2)

    evaluate = _resolvent_system(tau, w1, w2, p)
    r1, r2, *_ = evaluate(v1, v2)
    scale = np.maximum(1.0, np.maximum(np.abs(w1), np.abs(w2)))
    residual = np.maximum(np.abs(r1), np.abs(r2))
    bad = ~(residual <= RESIDUAL_TOL * scale)

    if np.any(bad):
        sub = _resolvent_system(tau, w1[bad], w2[bad], p)
        try:
            n1, n2 = newton_2x2(sub, (w1[bad], w2[bad]), tol=RESIDUAL_TOL * scale[bad].min())
        except IterationError as err:
            location, worst = _worst_point(sub, bad, err)
            raise ResolventFailure(location, worst) from err
        v1 = v1.copy()
        v2 = v2.copy()
        v1[bad] = n1
        v2[bad] = n2

    return State.from_components(w.grid, v1, v2)


def hump(x1: Field, x2: Field, center: tuple[float, float], radius: float) -> Field:
    """exp(-eps^2 / (eps^2 - |x - y|^2)) inside the ball, 0 on and outside its boundary."""
    r2 = (x1 - center[0]) ** 2 + (x2 - center[1]) ** 2
    inside = r2 < radius**2
    gap = np.where(inside, radius**2 - r2, 1.0)
    return np.where(inside, np.exp(-(radius**2) / gap), 0.0)


def grayscott_initial_values(x1: Field, x2: Field) -> tuple[Field, Field]:
    """(u1, u2) with u2 four scaled humps around the origin and u1 = 1 - 2*u2."""
    u2 = HUMP_SCALE * sum(hump(x1, x2, y, HUMP_RADIUS) for y in HUMP_CENTERS)
    return 1.0 - 2.0 * u2, u2


def grayscott_initial(grid: GridSpec) -> State:
    x1, x2 = grid.coordinates()
    u1, u2 = grayscott_initial_values(x1, x2)
    return State.from_components(grid, u1, u2)


class GrayScottProblem(SplitProblem):
    """Gray-Scott model on a periodic grid.

    No global dissipativity constant is claimed for the untruncated
    nonlinearity: m_f = 0 and the stability guard is advisory.
    """

    name = "gray-scott"

    def __init__(self, grid: GridSpec, params: GrayScottParams | None = None):
        self.params = params or GrayScottParams()
        symbol = LinearSymbol.diagonal(grid, self.params.d1, self.params.d2)
        super().__init__(grid, symbol, self.params.m_f)

    @property
    def norm_kind(self) -> GraphGrayScottNorm:
        return GraphGrayScottNorm(d1=self.params.d1, d2=self.params.d2)

    def apply_F(self, u: State) -> State:
        return grayscott_apply_F(u, self.params)

    def nonlinear_resolvent(self, tau: float, w: State) -> State:
        return grayscott_nonlinear_resolvent(tau, w, self.params)

    def initial_state(self) -> State:
        return grayscott_initial(self.grid)

    def parameters(self) -> dict[str, Any]:
        return self.params.model_dump(exclude={"m_f"})
