"""Adaptive explicit Runge-Kutta integration with fixed-grid sampling.

The method is the Dormand-Prince 5(4) embedded pair (the classic DOPRI5
tableau, FSAL).  Output samples are produced by shortening steps so that
the integrator lands exactly on each requested sample time; no interpolant
is involved, so the sample grid never depends on the internal step sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, NonFiniteState, StepLimitExceeded

__all__ = ["IntegratorSettings", "RawTrajectory", "integrate"]


@dataclass(frozen=True)
class IntegratorSettings:
    rel_tol: float = 1e-8
    abs_tol: float = 1e-10
    initial_step: float = 1e-3
    max_step: float = 1.0
    max_steps: int = 10_000_000

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if not 0 < self.initial_step <= self.max_step:
            raise ValueError("need 0 < initial_step <= max_step")
        if not self.max_steps > 0:
            raise ValueError("max_steps must be positive")


DEFAULT_SETTINGS = IntegratorSettings()

# chaos runs want tighter local error; window statistics are asserted, not
# pointwise states
CHAOS_SETTINGS = IntegratorSettings(rel_tol=1e-10, abs_tol=1e-12)


@dataclass(frozen=True)
class RawTrajectory:
    """Times and states sampled on the requested output grid."""

    times: np.ndarray   # shape (n,), strictly increasing
    states: np.ndarray  # shape (n, dim)

    def __len__(self) -> int:
        return len(self.times)


# Dormand-Prince 5(4) coefficients
_C = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0])
_A = [
    np.array([]),
    np.array([1 / 5]),
    np.array([3 / 40, 9 / 40]),
    np.array([44 / 45, -56 / 15, 32 / 9]),
    np.array([19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729]),
    np.array([9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656]),
    np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84]),
]
# 5th-order solution weights (row 7 of A by FSAL) and error weights b5 - b4
_B = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0])
_E = np.array([
    71 / 57600, 0.0, -71 / 16695, 71 / 1920,
    -17253 / 339200, 22 / 525, -1 / 40,
])

_SAFETY = 0.9
_MIN_FACTOR = 0.2
_MAX_FACTOR = 5.0
_ORDER_EXP = 1 / 5


def _sample_grid(t0: float, t1: float, sample_step: float) -> np.ndarray:
    n = int(np.floor((t1 - t0) / sample_step + 1e-9))
    grid = t0 + sample_step * np.arange(n + 1)
    if grid[-1] < t1 - 1e-12 * max(1.0, abs(t1)):
        grid = np.append(grid, t1)
    else:
        grid[-1] = t1
    return grid


def integrate(
    field: Callable[[np.ndarray], np.ndarray],
    y0,
    t0: float,
    t1: float,
    settings: IntegratorSettings | None = None,
    sample_step: float = 0.1,
) -> RawTrajectory:
    """Integrate dy/dt = field(y) over [t0, t1], sampling every sample_step.

    The final time t1 is always included in the output grid.  Raises
    StepLimitExceeded when the step budget runs out and NonFiniteState when
    the solution leaves the finite domain; domain errors raised by the field
    propagate unchanged.
    """
    if settings is None:
        settings = DEFAULT_SETTINGS
    if not t1 > t0:
        raise ValueError("t1 must exceed t0")
    if not sample_step > 0:
        raise ValueError("sample_step must be positive")

    y = np.asarray(y0, dtype=float).copy()
    if y.ndim != 1 or y.size < 1:
        raise ValueError("y0 must be a non-empty 1-D state vector")
    if not np.all(np.isfinite(y)):
        raise NonFiniteState("initial state is not finite")

    grid = _sample_grid(t0, t1, sample_step)
    out = np.empty((len(grid), y.size))
    out[0] = y

    rtol, atol = settings.rel_tol, settings.abs_tol
    h = min(settings.initial_step, settings.max_step)
    t = t0
    k = np.empty((7, y.size))
    k[6] = field(y)  # seeds FSAL
    steps = 0

    for i in range(1, len(grid)):
        t_target = grid[i]
        while t < t_target - 1e-14 * max(1.0, abs(t_target)):
            if steps >= settings.max_steps:
                raise StepLimitExceeded(
                    f"max_steps={settings.max_steps} reached at t={t:.6g}")
            steps += 1
            h = min(h, settings.max_step, t_target - t)

            k[0] = k[6]  # FSAL: last stage of the accepted step
            try:
                for s in range(1, 7):
                    ys = y + h * (_A[s] @ k[:s])
                    k[s] = field(ys)
            except DomainError as exc:
                raise DomainError(f"{exc} (near t={t:.6g})") from exc
            y_new = y + h * (_B @ k)
            if not np.all(np.isfinite(y_new)) or not np.all(np.isfinite(k)):
                raise NonFiniteState(f"non-finite state near t={t:.6g}")

            err_vec = h * (_E @ k)
            scale = atol + rtol * np.abs(y_new)
            err = float(np.max(np.abs(err_vec) / scale))

            if err <= 1.0:
                t = t + h
                y = y_new
                factor = _MAX_FACTOR if err == 0.0 else min(
                    _MAX_FACTOR, _SAFETY * err ** -_ORDER_EXP)
                h = h * max(_MIN_FACTOR, factor)
            else:
                k[6] = k[0]  # keep the FSAL seed for the retry
                h = h * max(_MIN_FACTOR, _SAFETY * err ** -_ORDER_EXP)
        t = t_target
        out[i] = y

    return RawTrajectory(times=grid, states=out)
