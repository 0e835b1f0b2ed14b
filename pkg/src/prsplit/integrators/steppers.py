"""Single-step operators.

With tau = h/2, a = tau*A, alpha = (I - a)^{-1}, f = tau*F, phi = (I - f)^{-1}:

    Peaceman-Rachford  S = phi (I + a) alpha (I + f)
    auxiliary          R = (I + a) alpha (I + f) phi,   S^j phi = phi R^j
    Lie                (I - hF)^{-1} (I - hA)^{-1}

(I + a)alpha is always evaluated as the Cayley map, never by applying A.
"""

from typing import Callable

from ..models import Scheme
from ..problems import SplitProblem
from ..spectral import State, linear_cayley, linear_resolvent

Stepper = Callable[[SplitProblem, float, State], State]


def pr_step(problem: SplitProblem, h: float, u: State) -> State:
    """One Peaceman-Rachford step."""
    tau = 0.5 * h
    explicit = u + tau * problem.apply_F(u)
    return problem.nonlinear_resolvent(tau, linear_cayley(problem.symbol, tau, explicit))


def lie_step(problem: SplitProblem, h: float, u: State) -> State:
    """One Lie step: full-step linear resolvent, then full-step nonlinear resolvent."""
    return problem.nonlinear_resolvent(h, linear_resolvent(problem.symbol, h, u))


def aux_pr_step(problem: SplitProblem, h: float, u: State) -> State:
    """One step of R = (I + a) alpha (I + f) phi."""
    tau = 0.5 * h
    w = problem.nonlinear_resolvent(tau, u)
    # (I + f) phi = I + 2 f phi
    return linear_cayley(problem.symbol, tau, u + (2.0 * tau) * problem.apply_F(w))


STEPPERS: dict[Scheme, Stepper] = {
    Scheme.PR: pr_step,
    Scheme.LIE: lie_step,
}
