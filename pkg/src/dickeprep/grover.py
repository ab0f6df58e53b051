"""Grover amplitude amplification restricted to the symmetric subspace.

The oracle flips the sign of every weight-w basis state, which in the
orthonormal weight coordinates b_k = sqrt(C(n,k)) a_k is just b_w -> -b_w;
the diffusion reflects about the initial state's coordinate vector.  The
dynamics stay in the 2-D span of the target axis and the initial state, so
after t steps the success probability is exactly sin^2((2t+1) theta) with
sin(theta) the initial success amplitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import UnreachableTargetError
from .symstate import SymmetricState, success_probability

__all__ = [
    "GroverPlan",
    "amplify",
    "grover_step",
    "plan_amplification",
    "recommended_iterations",
]


@dataclass(frozen=True)
class GroverPlan:
    """Amplification schedule: theta = arcsin of the initial success amplitude."""

    initial: SymmetricState
    w: int
    theta: float
    t: int


def _coords(s: SymmetricState) -> np.ndarray:
    return np.array([math.sqrt(comb(s.n, k)) * float(a) for k, a in enumerate(s.amps)])


def _from_coords(n: int, b: np.ndarray) -> SymmetricState:
    amps = np.array([b[k] / math.sqrt(comb(n, k)) for k in range(n + 1)])
    return SymmetricState(n=n, amps=amps)


def grover_step(s: SymmetricState, initial: SymmetricState, w: int) -> SymmetricState:
    """One application of (2|Psi><Psi| - I) O_g with |Psi> = initial."""
    if s.n != initial.n:
        raise ValueError(f"state n={s.n} and initial n={initial.n} differ")
    if not 0 <= w <= s.n:
        raise ValueError(f"w={w} out of range [0, {s.n}]")
    b = _coords(s)
    b[w] = -b[w]
    beta = _coords(initial)
    b = 2.0 * float(beta @ b) * beta - b
    return _from_coords(s.n, b)


def recommended_iterations(theta: float) -> int:
    """Iteration count with (2t+1) theta closest to pi/2, never below 0.

    Nearest integer to (pi/(2 theta) - 1)/2; among the two neighbors the one
    maximizing sin^2((2t+1) theta) wins, so an initial probability above 1/2
    yields t = 0 rather than an overshooting flip.
    """
    if not 0.0 < theta <= math.pi / 2:
        raise ValueError(f"theta={theta} out of range (0, pi/2]")
    x = (math.pi / (2.0 * theta) - 1.0) / 2.0
    lo = max(0, math.floor(x))
    candidates = (lo, lo + 1)
    return min(candidates, key=lambda t: (-math.sin((2 * t + 1) * theta) ** 2, t))


def plan_amplification(initial: SymmetricState, w: int) -> GroverPlan:
    """Plan with theta from the actual state and the recommended t."""
    p = success_probability(initial, w)
    if p <= 0.0:
        raise UnreachableTargetError(f"target weight {w} has zero amplitude")
    theta = math.asin(min(1.0, math.sqrt(p)))
    return GroverPlan(initial=initial, w=w, theta=theta, t=recommended_iterations(theta))


def amplify(initial: SymmetricState, w: int, t: int | None = None) -> SymmetricState:
    """Apply t Grover steps to the initial state (t=None: recommended count)."""
    if t is None:
        t = plan_amplification(initial, w).t
    elif t < 0:
        raise ValueError(f"t={t} must be non-negative")
    else:
        if success_probability(initial, w) <= 0.0:
            raise UnreachableTargetError(f"target weight {w} has zero amplitude")
    state = initial
    for _ in range(t):
        state = grover_step(state, initial, w)
    return state
