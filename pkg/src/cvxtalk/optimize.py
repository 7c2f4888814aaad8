"""Deterministic 1-D maximization and root finding for scenario objectives."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Literal

import numpy as np

GRID_POINTS = 64
_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class NumericError(RuntimeError):
    """An objective evaluation or numeric search failed."""


class BracketingError(NumericError):
    """Root bracket does not enclose a sign change."""


@dataclass(frozen=True)
class ScalarProblem:
    """A pure scalar objective on a bracket, with an argument tolerance."""

    objective: Callable[[float], float] = field(repr=False)
    lo: float
    hi: float
    tol: float = 1e-10
    max_iter: int = 200

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError(f"bracket must satisfy lo < hi, got [{self.lo}, {self.hi}]")
        if self.tol <= 0.0:
            raise ValueError(f"tolerance must be positive, got {self.tol}")


def _eval(problem: ScalarProblem, x: float) -> float:
    y = problem.objective(x)
    if not math.isfinite(y):
        raise NumericError(f"objective returned non-finite value {y} at x = {x}")
    return y


def maximize_scalar(problem: ScalarProblem) -> tuple[float, float]:
    """Best local maximum from a 64-point coarse grid plus golden-section refinement.

    Deterministic; ties on the grid break toward the smaller argument, and the
    returned value is never below the objective at any seed point.
    """
    xs = np.linspace(problem.lo, problem.hi, GRID_POINTS)
    ys = [_eval(problem, float(x)) for x in xs]
    k = 0
    for i in range(1, GRID_POINTS):
        if ys[i] > ys[k]:
            k = i
    best_x, best_y = float(xs[k]), ys[k]

    a = float(xs[max(k - 1, 0)])
    b = float(xs[min(k + 1, GRID_POINTS - 1)])
    # Golden-section refinement of the bracket around the best seed.
    c = b - _INV_GOLDEN * (b - a)
    d = a + _INV_GOLDEN * (b - a)
    fc, fd = _eval(problem, c), _eval(problem, d)
    for _ in range(problem.max_iter):
        if abs(b - a) <= problem.tol:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_GOLDEN * (b - a)
            fc = _eval(problem, c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_GOLDEN * (b - a)
            fd = _eval(problem, d)
        x_probe, y_probe = (c, fc) if fc >= fd else (d, fd)
        if y_probe > best_y or (y_probe == best_y and x_probe < best_x):
            best_x, best_y = x_probe, y_probe
    return best_x, best_y


def find_root(problem: ScalarProblem) -> float:
    """Bisection root of a sign-changing objective, to the argument tolerance."""
    a, b = problem.lo, problem.hi
    fa, fb = _eval(problem, a), _eval(problem, b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if math.copysign(1.0, fa) == math.copysign(1.0, fb):
        raise BracketingError(
            f"no sign change on [{a}, {b}]: f(lo) = {fa:.6g}, f(hi) = {fb:.6g}"
        )
    for _ in range(problem.max_iter):
        mid = (a + b) / 2.0
        if (b - a) <= problem.tol:
            return mid
        fm = _eval(problem, mid)
        if fm == 0.0:
            return mid
        if math.copysign(1.0, fm) == math.copysign(1.0, fa):
            a, fa = mid, fm
        else:
            b = mid
    return (a + b) / 2.0


# ---------------------------------------------------------------------------
# Scenario-bound wrappers
# ---------------------------------------------------------------------------

def optimize_v(config) -> tuple[float, float]:
    """Variance maximizing the pair-1 entanglement of the configured scenario.

    Brackets V in [1, min(V_max - 1e-6, 1e5)] for uncompensated scenarios
    (beyond V_max the entanglement is identically zero); compensated
    scenarios use the full cap since conditioning lifts the bound.
    """
    from . import formulas
    from .pipeline import run

    hi = 1e5
    if config.compensation.type == "none":
        v_max = formulas.v_max(config.t_c, config.eps, config.crosstalk_variant)
        if math.isfinite(v_max):
            hi = min(hi, v_max - 1e-6)
    if hi <= 1.0:
        raise NumericError(
            f"no variance bracket: entanglement breaks below V = 1 (V_max = {hi + 1e-6:.6g})"
        )

    def objective(v: float) -> float:
        return run(config.model_copy(update={"v": v, "ln0": None})).ln_pair1.value

    return maximize_scalar(ScalarProblem(objective=objective, lo=1.0, hi=hi))


def optimize_tr(config, pair: Literal[1, 2] = 1) -> tuple[float, float]:
    """Interference coupling maximizing the given pair's entanglement."""
    from .config import InterferenceSpec
    from .pipeline import _interference_raw, _pair_ln_raw, _post_channel_raw

    comp = config.compensation
    phi = comp.phi if isinstance(comp, InterferenceSpec) and isinstance(comp.phi, float) else math.pi
    raw = _post_channel_raw(
        config.variance(),
        config.effective_coupling(),
        config.transmittance(1),
        config.transmittance(2),
        config.eps,
    )
    problem = ScalarProblem(
        objective=lambda x: _pair_ln_raw(_interference_raw(raw, phi, x), pair)[0],
        lo=0.0,
        hi=1.0,
    )
    return maximize_scalar(problem)


def optimize_ta(config) -> tuple[float, float]:
    """Sender splitting ratio maximizing the conditional pair-1 entanglement."""
    from .config import FeedforwardSpec
    from .pipeline import _feedforward_raw, _post_channel_raw, _two_mode_ln_raw

    comp = config.compensation
    t_b = comp.t_b if isinstance(comp, FeedforwardSpec) and isinstance(comp.t_b, float) else 1.0
    raw = _post_channel_raw(
        config.variance(),
        config.effective_coupling(),
        config.transmittance(1),
        config.transmittance(2),
        config.eps,
    )
    problem = ScalarProblem(
        objective=lambda x: _two_mode_ln_raw(_feedforward_raw(raw, x, t_b))[0],
        lo=0.0,
        hi=1.0,
    )
    return maximize_scalar(problem)
