"""Partial transposition and Gaussian logarithmic negativity (in bits)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gaussian import CovarianceMatrix, symplectic_eigenvalues

# Smallest PT symplectic eigenvalue this close to 1 counts as "not entangled",
# so that entanglement-destroyed assertions are testable.
ENTANGLEMENT_NU_TOL = 1e-12


@dataclass(frozen=True)
class Bipartition:
    """Split of the mode set into two disjoint, exhaustive, nonempty parties."""

    party_a: tuple[int, ...]
    party_b: tuple[int, ...]

    def __post_init__(self) -> None:
        a, b = set(self.party_a), set(self.party_b)
        if not a or not b:
            raise ValueError("both parties must be nonempty")
        if a & b:
            raise ValueError(f"parties overlap: {sorted(a & b)}")

    def validate_for(self, n_modes: int) -> None:
        union = set(self.party_a) | set(self.party_b)
        if union != set(range(n_modes)):
            raise ValueError(
                f"bipartition {sorted(union)} does not cover all {n_modes} modes"
            )


@dataclass(frozen=True)
class LnValue:
    """Logarithmic negativity in bits plus the smallest PT symplectic eigenvalue."""

    value: float
    nu_min: float


def partial_transpose(
    gamma: CovarianceMatrix, subset: tuple[int, ...] | list[int]
) -> np.ndarray:
    """Negate the p rows/columns of the given modes; may be unphysical."""
    for i in subset:
        if not 0 <= i < gamma.n_modes:
            raise IndexError(f"mode index {i} out of range for {gamma.n_modes} modes")
    signs = np.ones(2 * gamma.n_modes)
    for i in subset:
        signs[2 * i + 1] = -1.0
    return signs[:, None] * gamma.data * signs[None, :]


def log_negativity(gamma: CovarianceMatrix, bipartition: Bipartition) -> LnValue:
    """LN = sum of -log2(nu) over PT symplectic eigenvalues below one."""
    bipartition.validate_for(gamma.n_modes)
    gamma.assert_physical()
    nus = symplectic_eigenvalues(partial_transpose(gamma, bipartition.party_b))
    value = sum(-math.log2(nu) for nu in nus if nu < 1.0 - ENTANGLEMENT_NU_TOL)
    return LnValue(value=max(0.0, value), nu_min=float(nus[0]))


def pair_log_negativity(gamma: CovarianceMatrix) -> LnValue:
    """Logarithmic negativity of a two-mode state across its (0 | 1) cut."""
    return log_negativity(gamma, Bipartition((0,), (1,)))


def initial_ln(v: float) -> float:
    """Entanglement of a two-mode squeezed vacuum of variance v, in bits.

    Equals -0.5*log2(2v^2 - 1 - 2v*sqrt(v^2-1)); evaluated through the
    algebraically identical log2(v + sqrt(v^2-1)) which stays accurate at
    large v.
    """
    if v < 1.0:
        raise ValueError(f"unphysical variance: v = {v} must be >= 1")
    return math.log2(v + math.sqrt(v * v - 1.0))


def variance_for_ln(ln0: float) -> float:
    """Inverse of :func:`initial_ln`: the variance with the given entanglement."""
    if ln0 < 0.0:
        raise ValueError(f"logarithmic negativity must be >= 0, got {ln0}")
    return math.cosh(ln0 * math.log(2.0))
