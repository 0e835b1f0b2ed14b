"""Closed-form cubic solvers and a damped 2x2 Newton iteration.

Every routine accepts scalars or numpy arrays and works elementwise, so a
pointwise resolvent over a whole grid is one call.
"""

from dataclasses import dataclass
from math import isfinite
from typing import Callable, Union

import numpy as np

from .errors import InvalidArgumentError, IterationError

ArrayLike = Union[float, np.ndarray]

# (r1, r2, j11, j12, j21, j22) at (v1, v2)
Evaluator = Callable[[np.ndarray, np.ndarray], tuple[np.ndarray, ...]]

DEGENERATE_LEADING = 1e-14
EPS = float(np.finfo(np.float64).eps)
# Relative gaps below ROOT_MERGE_REL always merge; up to ROOT_MERGE_SPAN they merge
# when the midpoint residual is at rounding level.
ROOT_MERGE_REL = 1e-6
ROOT_MERGE_SPAN = 1e-4


@dataclass(frozen=True)
class CubicCoeffs:
    """c3 x^3 + c2 x^2 + c1 x + c0."""

    c3: float
    c2: float
    c1: float
    c0: float

    def __post_init__(self) -> None:
        if not all(isfinite(c) for c in (self.c3, self.c2, self.c1, self.c0)):
            raise InvalidArgumentError(f"non-finite cubic coefficients {self}")

    def __call__(self, x: ArrayLike) -> ArrayLike:
        return ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0


def _scalar_or_array(value: np.ndarray, *inputs: ArrayLike) -> ArrayLike:
    if all(np.ndim(x) == 0 for x in inputs):
        return float(value)
    return value


def solve_increasing_cubic(c3: ArrayLike, c1: ArrayLike, r: ArrayLike) -> ArrayLike:
    """Unique real root of c3*x^3 + c1*x = r for c3 > 0, c1 > 0.

    Uses the hyperbolic form of Cardano's formula for the depressed cubic
    x^3 + p*x + q = 0 with p > 0, which has no cancellation, followed by one
    Newton polish step.
    """
    c3 = np.asarray(c3, dtype=np.float64)
    c1 = np.asarray(c1, dtype=np.float64)
    r_arr = np.asarray(r, dtype=np.float64)
    if not (np.all(c3 > 0) and np.all(c1 > 0)):
        raise InvalidArgumentError("solve_increasing_cubic needs c3 > 0 and c1 > 0")

    p = c1 / c3
    q = -r_arr / c3
    s = np.sqrt(p / 3.0)
    x = -2.0 * s * np.sinh(np.arcsinh(1.5 * q / (p * s)) / 3.0)

    # polish
    f = (c3 * x * x + c1) * x - r_arr
    x = x - f / (3.0 * c3 * x * x + c1)

    return _scalar_or_array(x, c3, c1, r)


def _check_leading(c3: np.ndarray, c2: np.ndarray, c1: np.ndarray, c0: np.ndarray) -> None:
    scale = np.maximum.reduce([np.abs(c2), np.abs(c1), np.abs(c0), np.abs(c3)])
    if np.any(c3 == 0) or np.any(np.abs(c3) < DEGENERATE_LEADING * scale):
        raise InvalidArgumentError("leading coefficient is zero or negligible; reduce the degree")


def cubic_real_roots(
    c3: ArrayLike, c2: ArrayLike, c1: ArrayLike, c0: ArrayLike
) -> tuple[np.ndarray, np.ndarray]:
    """Real roots of many cubics at once.

    Returns:
        (roots, valid) of shape (..., 3). Where only one real root exists it
        sits in slot 0 and slots 1, 2 are invalid. Roots are Newton-polished.
    """
    c3, c2, c1, c0 = np.broadcast_arrays(
        *(np.asarray(c, dtype=np.float64) for c in (c3, c2, c1, c0))
    )
    _check_leading(c3, c2, c1, c0)

    a = c2 / c3
    b = c1 / c3
    c = c0 / c3
    p = b - a * a / 3.0
    q = (2.0 * a * a * a - 9.0 * a * b) / 27.0 + c
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    shift = -a / 3.0

    # Discriminants within their rounding error count as a double root.
    disc_scale = (q / 2.0) ** 2 + np.abs(p / 3.0) ** 3
    q_terms = (2.0 * np.abs(a) ** 3 + 9.0 * np.abs(a * b)) / 27.0 + np.abs(c)
    p_terms = np.abs(b) + a * a / 3.0
    disc_error = 16.0 * EPS * (np.abs(q) / 2.0 * q_terms + p * p / 9.0 * p_terms)
    three = disc <= np.maximum(1e-12 * disc_scale, disc_error)

    roots = np.zeros(c3.shape + (3,))
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        # three real roots (p <= 0)
        neg_p = np.where(p < 0, -p, 1.0)
        m = np.where(p < 0, 2.0 * np.sqrt(neg_p / 3.0), 0.0)
        arg = -1.5 * q / neg_p * np.sqrt(3.0 / neg_p)
        theta = np.arccos(np.clip(arg, -1.0, 1.0)) / 3.0
        trig = np.stack([m * np.cos(theta - 2.0 * np.pi * k / 3.0) for k in range(3)], axis=-1)

        # one real root
        safe_p = np.where(p == 0, 1.0, np.abs(p))
        sp = np.sqrt(safe_p / 3.0)
        hyper_pos = -2.0 * sp * np.sinh(np.arcsinh(1.5 * q / (safe_p * sp)) / 3.0)
        hyper_neg = -2.0 * np.sign(q) * sp * np.cosh(
            np.arccosh(np.maximum(1.5 * np.abs(q) / (safe_p * sp), 1.0)) / 3.0
        )
        single = np.where(p > 0, hyper_pos, np.where(p < 0, hyper_neg, np.cbrt(-q)))

    roots[...] = np.where(three[..., None], trig, single[..., None])
    roots += shift[..., None]
    valid = np.ones(roots.shape, dtype=bool)
    valid[..., 1:] = three[..., None]

    roots = _polish(roots, c3[..., None], c2[..., None], c1[..., None], c0[..., None])
    return roots, valid


def _polish(x: np.ndarray, c3, c2, c1, c0, sweeps: int = 2) -> np.ndarray:
    """Newton steps that are only kept where they reduce the residual."""
    for _ in range(sweeps):
        f = ((c3 * x + c2) * x + c1) * x + c0
        fp = (3.0 * c3 * x + 2.0 * c2) * x + c1
        with np.errstate(divide="ignore", invalid="ignore"):
            candidate = x - f / fp
        f_new = ((c3 * candidate + c2) * candidate + c1) * candidate + c0
        better = np.isfinite(candidate) & (np.abs(f_new) < np.abs(f))
        x = np.where(better, candidate, x)
    return x


def _unresolved_pair(coeffs: CubicCoeffs, x: float, y: float, scale: float) -> bool:
    """True when x and y are one repeated root as far as double precision can tell.

    scale is the largest root magnitude; the trigonometric formula places a
    double root only to about sqrt(eps) of it.
    """
    gap = abs(y - x)
    if gap <= ROOT_MERGE_REL * scale:
        return True
    if gap > ROOT_MERGE_SPAN * max(1.0, scale):
        return False
    mid = 0.5 * (x + y)
    size = abs(mid)
    bound = ((abs(coeffs.c3) * size + abs(coeffs.c2)) * size + abs(coeffs.c1)) * size
    bound += abs(coeffs.c0)
    return abs(coeffs(mid)) <= 64.0 * EPS * bound


def real_roots_cubic(coeffs: CubicCoeffs) -> list[float]:
    """All real roots of one cubic, ascending, with repeated roots merged."""
    roots, valid = cubic_real_roots(coeffs.c3, coeffs.c2, coeffs.c1, coeffs.c0)
    found = sorted(float(x) for x, ok in zip(roots, valid) if ok)
    scale = max(abs(x) for x in found)

    merged: list[float] = []
    for x in found:
        if merged and _unresolved_pair(coeffs, merged[-1], x, scale):
            # keep the better of the two
            if abs(coeffs(x)) < abs(coeffs(merged[-1])):
                merged[-1] = x
            continue
        merged.append(x)
    return merged


def newton_2x2(
    evaluator: Evaluator,
    guess: tuple[ArrayLike, ArrayLike],
    tol: float = 1e-12,
    max_iter: int = 50,
) -> tuple[ArrayLike, ArrayLike]:
    """Damped Newton iteration for 2x2 systems, elementwise over arrays.

    Args:
        evaluator: Returns (r1, r2, j11, j12, j21, j22) at (v1, v2).
        guess: Starting point.
        tol: Target max-norm of the residual.
        max_iter: Newton iterations before giving up.

    Returns:
        (v1, v2) with max(|r1|, |r2|) <= tol everywhere.

    Raises:
        IterationError: if some point has not converged after max_iter steps.
    """
    v1 = np.array(guess[0], dtype=np.float64)
    v2 = np.array(guess[1], dtype=np.float64)
    v1, v2 = np.broadcast_arrays(v1, v2)
    v1, v2 = v1.copy(), v2.copy()

    r1, r2, j11, j12, j21, j22 = evaluator(v1, v2)
    res = np.maximum(np.abs(r1), np.abs(r2))
    if not np.all(np.isfinite(res)):
        raise IterationError("evaluator not finite at initial guess", (v1, v2), float("inf"))

    for _ in range(max_iter):
        active = res > tol
        if not np.any(active):
            return _scalar_or_array(v1, *guess), _scalar_or_array(v2, *guess)

        det = j11 * j22 - j12 * j21
        with np.errstate(divide="ignore", invalid="ignore"):
            d1 = (r1 * j22 - r2 * j12) / det
            d2 = (j11 * r2 - j21 * r1) / det
        usable = active & np.isfinite(d1) & np.isfinite(d2)

        # Halve the step until the residual decreases.
        step = np.ones_like(v1)
        pending = usable.copy()
        new1, new2 = v1.copy(), v2.copy()
        for _ in range(30):
            t1 = np.where(pending, v1 - step * d1, new1)
            t2 = np.where(pending, v2 - step * d2, new2)
            tr1, tr2, *_ = evaluator(t1, t2)
            tres = np.maximum(np.abs(tr1), np.abs(tr2))
            accept = pending & np.isfinite(tres) & (tres < res)
            new1 = np.where(accept, t1, new1)
            new2 = np.where(accept, t2, new2)
            pending &= ~accept
            if not np.any(pending):
                break
            step = np.where(pending, 0.5 * step, step)

        v1, v2 = new1, new2
        r1, r2, j11, j12, j21, j22 = evaluator(v1, v2)
        res = np.maximum(np.abs(r1), np.abs(r2))

    if np.all(res <= tol):
        return _scalar_or_array(v1, *guess), _scalar_or_array(v2, *guess)
    raise IterationError(
        f"newton_2x2 did not converge in {max_iter} iterations", (v1, v2), float(np.max(res))
    )
