"""Closed-form expressions for cross-talk-afflicted entanglement distribution.

Every function evaluates one analytic result directly, forming the oracle
counterpart to the numeric pipeline.  Exact expressions and series
approximations are kept apart by name: anything named *_small_*, *_strong_*,
or *_asymptote is an expansion or a limit, never ground truth for tests.

Functions taking a `variant` accept "two_mode" (nearest-neighbour coupling
between two modes) or "three_mode" (each mode coupled to two neighbours),
the latter evaluating the same expressions with t_c -> t_c^2.

Diverging limits return math.inf rather than a large float so that
comparisons in tests stay honest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

LOG2 = math.log(2.0)

Variant = str  # "two_mode" | "three_mode"


@dataclass(frozen=True)
class ChannelPair:
    """Transmittances of the two B-mode channels plus their common excess noise."""

    T1: float
    T2: float
    epsilon: float = 0.0

    def __post_init__(self) -> None:
        for name, t in (("T1", self.T1), ("T2", self.T2)):
            if not 0.0 < t <= 1.0:
                raise ValueError(f"{name} must lie in (0, 1], got {t}")
        if self.epsilon < 0.0:
            raise ValueError(f"excess noise must be >= 0, got {self.epsilon}")


@dataclass(frozen=True)
class CrosstalkModel:
    """Cross-talk coupling strength and neighbour topology."""

    t_c: float
    variant: Variant = "two_mode"

    def __post_init__(self) -> None:
        if not 0.0 <= self.t_c <= 1.0:
            raise ValueError(f"coupling must lie in [0, 1], got {self.t_c}")
        if self.variant not in ("two_mode", "three_mode"):
            raise ValueError(f"unknown variant {self.variant!r}")

    @property
    def effective_coupling(self) -> float:
        return self.t_c * self.t_c if self.variant == "three_mode" else self.t_c


def _effective(t_c: float, variant: Variant) -> float:
    if variant == "three_mode":
        return t_c * t_c
    if variant != "two_mode":
        raise ValueError(f"unknown variant {variant!r}")
    return t_c


def _clamp(x: float) -> float:
    return x if x > 0.0 else 0.0


# ---------------------------------------------------------------------------
# Uncompensated transmission
# ---------------------------------------------------------------------------

def ln_no_xtalk_asymptote(T: float, eps: float) -> float:
    """Large-variance limit of the shared entanglement without cross talk.

    -log2[(1 - T(1 - eps)) / (1 + T)]; infinite for a lossless noiseless
    channel, zero once eps reaches 2 at T = 1.
    """
    num = 1.0 - T * (1.0 - eps)
    if num <= 0.0:
        return math.inf
    return _clamp(-math.log2(num / (1.0 + T)))


def ln_xtalk(v: float, t_c: float, T: float, eps: float, variant: Variant = "two_mode") -> float:
    """Entanglement of one mode pair after cross talk and a lossy/noisy channel.

    The printed closed form suffers catastrophic cancellation at large v, so
    the algebraically identical rationalized expression is evaluated instead:
    with a = v, b = T(v + eps - 1) + 1, c^2 = t_c T (v^2 - 1) and
    q = ab - c^2, the smallest PT symplectic eigenvalue obeys
    nu^2 = 2 q^2 / (a^2 + b^2 + 2 c^2 + (a + b) sqrt((a - b)^2 + 4 c^2)).
    """
    tc = _effective(t_c, variant)
    a = v
    b = T * (v + eps - 1.0) + 1.0
    c2 = tc * T * (v * v - 1.0)
    q = T * ((1.0 - tc) * v * v + (eps - 1.0) * v + tc) + v
    delta = a * a + b * b + 2.0 * c2
    root = (a + b) * math.sqrt((a - b) ** 2 + 4.0 * c2)
    nu2 = 2.0 * q * q / (delta + root)
    return _clamp(-0.5 * math.log2(nu2))


def ln_xtalk_printed(v: float, t_c: float, T: float, eps: float) -> float:
    """Verbatim transcription of the published expression (test cross-check only)."""
    a = eps + v - 1.0
    inner = 1.0 + 2.0 * T * (eps + (v - 1.0) * (t_c * v + t_c + 1.0)) + T * T * a * a + v * v
    rad = (
        T * T * a * a
        + (v - 1.0) ** 2
        - 2.0 * T * (v - 1.0) * (eps - 2.0 * t_c * (v + 1.0) + v - 1.0)
    )
    inner -= (1.0 + v + T * a) * math.sqrt(max(rad, 0.0))
    arg = 0.5 * inner
    if arg <= 0.0:
        return math.inf
    return _clamp(-0.5 * math.log2(arg))


def ln_xtalk_small_T(v: float, t_c: float, T: float, eps: float) -> float:
    """Second-order small-transmittance expansion of :func:`ln_xtalk` (v > 1)."""
    lead = T * (2.0 - eps - (1.0 - t_c) * (v + 1.0)) / LOG2
    corr = (
        1.0
        + T / 2.0 * (2.0 - eps - (1.0 - t_c) * (v + 1.0))
        - T * t_c * (v + 1.0) / (v - 1.0)
    )
    return lead * corr


def eps_max(t_c: float, v: float, variant: Variant = "two_mode") -> float:
    """Excess noise destroying the pair entanglement, for any transmittance."""
    tc = _effective(t_c, variant)
    return 1.0 + tc - (1.0 - tc) * v


def v_max(t_c: float, eps: float, variant: Variant = "two_mode") -> float:
    """Variance beyond which the pair entanglement vanishes (any transmittance)."""
    tc = _effective(t_c, variant)
    if tc >= 1.0:
        return math.inf
    return (1.0 + tc - eps) / (1.0 - tc)


# ---------------------------------------------------------------------------
# Optimal source variance
# ---------------------------------------------------------------------------

def _check_v_opt_domain(t_c: float, eps: float) -> None:
    if not 0.0 < t_c < 1.0:
        raise ValueError(f"optimal variance needs 0 < t_c < 1, got {t_c}")
    if not 0.0 <= eps < 2.0 * t_c:
        raise ValueError(
            f"excess noise {eps} exceeds the tolerable bound 2*t_c = {2.0 * t_c}"
        )


def v_opt(t_c: float, T: float, eps: float = 0.0) -> float:
    """Source variance maximizing the shared entanglement (exact)."""
    _check_v_opt_domain(t_c, eps)
    rc = 1.0 - t_c
    num = rc * (1.0 - T) * (1.0 - T + eps * T) + (T + 1.0) * math.sqrt(
        rc * t_c * T * (4.0 * t_c - eps * (2.0 - 2.0 * T + eps * T))
    )
    den = rc * (1.0 + T * (4.0 * t_c + T - 2.0))
    return num / den


def v_opt_small_xtalk(t_c: float, T: float, eps: float = 0.0) -> float:
    """Leading behaviour of the optimal variance for weak cross talk (t_c -> 1)."""
    _check_v_opt_domain(t_c, eps)
    return (1.0 - T) * (1.0 - T + eps * T) / (1.0 + T) ** 2 + math.sqrt(
        (2.0 - eps) * T * (2.0 + eps * T)
    ) / ((1.0 + T) * math.sqrt(1.0 - t_c))


def v_opt_small_xtalk_noiseless(t_c: float, T: float) -> float:
    """Noiseless weak-cross-talk optimal variance; reaches 1/sqrt(1-t_c) at T=1."""
    _check_v_opt_domain(t_c, 0.0)
    return ((1.0 - T) / (1.0 + T)) ** 2 + 2.0 * math.sqrt(T) / (
        (1.0 + T) * math.sqrt(1.0 - t_c)
    )


def v_opt_strong_loss(t_c: float, T: float, eps: float = 0.0) -> float:
    """Optimal variance for a strongly attenuating channel (T -> 0)."""
    _check_v_opt_domain(t_c, eps)
    return (
        1.0
        + math.sqrt(2.0 * T * t_c * (2.0 * t_c - eps)) / math.sqrt(1.0 - t_c)
        - (4.0 * t_c - eps) * T
    )


def ln_opt_strong_loss(t_c: float, T: float, eps: float = 0.0) -> float:
    """Optimized entanglement through a strongly attenuating channel (advisory)."""
    h = eps / 2.0
    return (
        2.0
        * T
        * (
            t_c
            - h
            - 2.0 * math.sqrt(t_c * (1.0 - t_c) * (t_c - h) * T)
            + (3.0 * t_c * (1.0 - t_c) + h * (1.0 - h)) * T
        )
        / LOG2
    )


def ln_opt_strong_loss_noiseless(t_c: float, T: float) -> float:
    """Noiseless strong-attenuation form: 2 t_c T (1 - 2 sqrt((1-t_c)T) + 3(1-t_c)T)/ln 2."""
    return (
        2.0
        * t_c
        * T
        * (1.0 - 2.0 * math.sqrt((1.0 - t_c) * T) + 3.0 * (1.0 - t_c) * T)
        / LOG2
    )


def ln_opt_small_xtalk(t_c: float, T: float, eps: float = 0.0) -> float:
    """Optimized entanglement for very weak cross talk at strong attenuation."""
    base = -math.log2((1.0 - T + eps * T) / (1.0 + T))
    slope = (
        2.0
        * T
        * math.sqrt((2.0 - eps) * T * (2.0 + eps * T))
        / ((1.0 + T) * (1.0 - T + eps * T) * LOG2)
    )
    return base - slope * math.sqrt(1.0 - t_c)


# ---------------------------------------------------------------------------
# Interference compensation
# ---------------------------------------------------------------------------

def tr_bounds(t_c: float, T1: float, T2: float, pair: int = 1) -> tuple[float, float]:
    """Optimal decoupling couplings in the small- and large-variance limits.

    Returns (t_r at V -> 1, t_r at V -> inf) for the requested pair; the
    optimum for any variance lies between them.  Pair 2 swaps T1 and T2.
    """
    if pair == 2:
        T1, T2 = T2, T1
    elif pair != 1:
        raise ValueError(f"pair must be 1 or 2, got {pair}")
    rc = 1.0 - t_c
    low_v = T1 * t_c / (T1 * t_c + T2 * rc) if t_c > 0.0 else 0.0
    high_v = T2 * t_c / (T2 * t_c + T1 * rc) if t_c > 0.0 else 0.0
    return low_v, high_v


def ln_interference_asymptote(t_c: float, T1: float, T2: float) -> float:
    """Large-variance limit of pair-1 entanglement with t_r tuned for V -> inf."""
    num = t_c * T2 + T1 * (1.0 - t_c - T2)
    den = t_c * T2 + T1 * (1.0 - t_c + T2)
    if num <= 0.0:
        return math.inf
    return _clamp(-math.log2(num / den))


# ---------------------------------------------------------------------------
# Measurement and feed-forward localization
# ---------------------------------------------------------------------------

def ta_opt_asymptote(T1: float, T2: float) -> float:
    """Printed approximation for the sender splitting ratio at V -> inf, eps = 0.

    max[0, 1 - (1+T1)(1-T2)/(2 + 2 T1 (1-T2) - 4 T2)]; exact in the deep-loss
    regime (-> 1/2) but exceeds 1 near lossless channels, where the numeric
    optimum is the complementary homodyne t_A = 0.
    """
    den = 2.0 + 2.0 * T1 * (1.0 - T2) - 4.0 * T2
    if den == 0.0:
        return 0.0
    return max(0.0, 1.0 - (1.0 + T1) * (1.0 - T2) / den)


def ln_hom_perfect(v: float, t_c: float) -> float:
    """Conditional pair entanglement for perfect channels and double homodyne.

    -log2[sqrt(1 + t_c(v^2-1)) - sqrt(t_c(v^2-1))]; grows without bound in v.
    """
    s = t_c * (v * v - 1.0)
    return _clamp(-math.log2(math.sqrt(1.0 + s) - math.sqrt(s)))


def ln_unconditioned_perfect(v: float, t_c: float) -> float:
    """Pair entanglement after cross talk in perfect channels, no conditioning.

    -log2[v - sqrt(t_c(v^2-1))], clamped at zero; maximal at v = 1/sqrt(1-t_c).
    """
    return _clamp(-math.log2(v - math.sqrt(t_c * (v * v - 1.0))))


def ln_hom_asymptote(t_c: float, T1: float, T2: float) -> float:
    """Large-variance conditional entanglement, homodyne on both sides (eps = 0).

    May clamp to zero when t_c < (1-T1)(1-T2) / (1 - T1(1-T2) + 3 T2).
    """
    if t_c <= 0.0 or T2 <= 0.0:
        return 0.0
    num = (1.0 - T1) * (T1 * (1.0 - t_c - T2) + t_c * T2)
    if num <= 0.0:
        return math.inf
    return _clamp(-0.5 * math.log2(num / (t_c * (1.0 + T1) ** 2 * T2)))


def ln_het_asymptote(t_c: float, T1: float, T2: float) -> float:
    """Large-variance conditional entanglement, balanced heterodyne at the sender."""
    num = (1.0 - t_c * T1) * (1.0 - t_c * (T1 - T2) - T2)
    den = (1.0 + t_c * T1) ** 2 - (1.0 - t_c) * T2 * (1.0 - t_c * T1)
    if num <= 0.0 or den <= 0.0:
        return math.inf
    return _clamp(-0.5 * math.log2(num / den))


def conditional_pair_matrix(
    v: float, t_c: float, T1: float, T2: float, t_a: float, t_b: float = 1.0
) -> np.ndarray:
    """Analytic conditional (A1, B1) covariance matrix after the four homodynes.

    Noiseless channels (eps = 0).  t_a and t_b are the fractions of A2 and B2
    routed to the x-measured detector arms; the published sub-matrices use the
    complementary convention (their t equals 1 - t here) and carry a few
    misprints, so these expressions were re-derived via the joint Schur
    complement and verified symbolically against the corrected originals.
    """
    rc, ra, rb = 1.0 - t_c, 1.0 - t_a, 1.0 - t_b
    k2 = v * v - 1.0
    k = math.sqrt(k2)
    b1 = T1 * (v - 1.0) + 1.0
    b2 = T2 * (v - 1.0) + 1.0

    dx = (t_a * v + ra) * (t_b * b2 + rb) - t_a * t_b * t_c * T2 * k2
    axx = v - t_b * rc * T2 * k2 * (t_a * v + ra) / dx
    bxx = b1 - t_a * rc * T1 * k2 * (t_b * b2 + rb) / dx
    cxx = math.sqrt(t_c * T1) * k * (dx - t_a * t_b * rc * T2 * k2) / dx

    dp = (ra * v + t_a) * (rb * b2 + t_b) - ra * rb * t_c * T2 * k2
    app = v - rb * rc * T2 * k2 * (ra * v + t_a) / dp
    bpp = b1 - ra * rc * T1 * k2 * (rb * b2 + t_b) / dp
    cpp = -math.sqrt(t_c * T1) * k * (dp - ra * rb * rc * T2 * k2) / dp

    return np.array(
        [
            [axx, 0.0, cxx, 0.0],
            [0.0, app, 0.0, cpp],
            [cxx, 0.0, bxx, 0.0],
            [0.0, cpp, 0.0, bpp],
        ]
    )
