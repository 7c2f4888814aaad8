"""Covariance-matrix algebra for Gaussian states of light.

All second moments are expressed in shot-noise units (vacuum variance = 1)
with mode-major quadrature ordering (x1, p1, x2, p2, ...).  Conditionally
squeezed states produced by homodyne conditioning may have diagonal entries
below 1; physicality only requires gamma + i*Omega >= 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

SYMMETRY_TOL = 1e-12
PHYSICALITY_TOL = 1e-9
SYMPLECTIC_TOL = 1e-12
SPECTRUM_PAIRING_TOL = 1e-9
PINV_RCOND = 1e-12

_OMEGA_BLOCK = np.array([[0.0, 1.0], [-1.0, 0.0]])


class Quadrature(enum.Enum):
    """Canonical quadrature selector for homodyne detection."""

    X = "x"
    P = "p"


def omega(n_modes: int) -> np.ndarray:
    """Symplectic form: direct sum of n [[0, 1], [-1, 0]] blocks."""
    return np.kron(np.eye(n_modes), _OMEGA_BLOCK)


@dataclass(frozen=True)
class CovarianceMatrix:
    """2N x 2N real symmetric matrix of quadrature second moments.

    Symmetry within 1e-12 is enforced (and the stored matrix symmetrized)
    on construction; use :meth:`assert_physical` to check gamma + i*Omega
    positivity where the physicality guarantee matters.
    """

    data: np.ndarray

    def __post_init__(self) -> None:
        m = np.array(self.data, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0 or m.shape[0] % 2:
            raise ValueError(f"covariance matrix must be 2Nx2N, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError("covariance matrix contains non-finite entries")
        if np.max(np.abs(m - m.T)) > SYMMETRY_TOL * max(1.0, np.max(np.abs(m))):
            raise ValueError("covariance matrix is not symmetric within 1e-12")
        m = (m + m.T) / 2.0
        m.flags.writeable = False
        object.__setattr__(self, "data", m)

    @property
    def n_modes(self) -> int:
        return self.data.shape[0] // 2

    def physicality_defect(self) -> float:
        """Smallest eigenvalue of the Hermitian matrix gamma + i*Omega."""
        herm = self.data + 1j * omega(self.n_modes)
        return float(np.linalg.eigvalsh(herm)[0])

    def is_physical(self, tol: float = PHYSICALITY_TOL) -> bool:
        return self.physicality_defect() >= -tol

    def assert_physical(self, tol: float = PHYSICALITY_TOL) -> "CovarianceMatrix":
        defect = self.physicality_defect()
        if defect < -tol:
            raise ValueError(
                f"unphysical covariance matrix: min eig of (gamma + i*Omega) = {defect:.3e}"
            )
        return self


@dataclass(frozen=True)
class SymplecticMap:
    """2N x 2N real matrix S with S Omega S^T = Omega."""

    data: np.ndarray

    def __post_init__(self) -> None:
        m = np.array(self.data, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0 or m.shape[0] % 2:
            raise ValueError(f"symplectic map must be 2Nx2N, got shape {m.shape}")
        n = m.shape[0] // 2
        defect = np.max(np.abs(m @ omega(n) @ m.T - omega(n)))
        if defect > SYMPLECTIC_TOL:
            raise ValueError(f"matrix is not symplectic: |S Omega S^T - Omega| = {defect:.3e}")
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "data", m)

    @property
    def n_modes(self) -> int:
        return self.data.shape[0] // 2


def _mode_slice(i: int) -> slice:
    return slice(2 * i, 2 * i + 2)


def _check_mode(i: int, n_modes: int) -> None:
    if not 0 <= i < n_modes:
        raise IndexError(f"mode index {i} out of range for {n_modes} modes")


def tmsv_pair(v: float) -> CovarianceMatrix:
    """Two-mode squeezed vacuum with quadrature variance v >= 1.

    The x quadratures of the two modes are correlated and the p quadratures
    anti-correlated, with cross-covariance sqrt(v^2 - 1).
    """
    if v < 1.0:
        raise ValueError(f"unphysical variance: v = {v} must be >= 1")
    k = np.sqrt(v * v - 1.0)
    z = np.diag([1.0, -1.0])
    m = np.zeros((4, 4))
    m[0:2, 0:2] = v * np.eye(2)
    m[2:4, 2:4] = v * np.eye(2)
    m[0:2, 2:4] = k * z
    m[2:4, 0:2] = k * z
    return CovarianceMatrix(m)


def tensor(a: CovarianceMatrix, b: CovarianceMatrix) -> CovarianceMatrix:
    """Block-diagonal concatenation; mode counts add, order preserved."""
    na, nb = a.data.shape[0], b.data.shape[0]
    m = np.zeros((na + nb, na + nb))
    m[:na, :na] = a.data
    m[na:, na:] = b.data
    return CovarianceMatrix(m)


def vacuum(n_modes: int) -> CovarianceMatrix:
    """n-mode vacuum state (identity matrix)."""
    if n_modes < 1:
        raise ValueError("need at least one mode")
    return CovarianceMatrix(np.eye(2 * n_modes))


def beam_splitter_map(n_modes: int, i: int, j: int, t: float) -> SymplecticMap:
    """Beam splitter of transmittance t on modes (i, j), identity elsewhere.

    Convention: mode i keeps sqrt(t) of itself plus sqrt(1-t) of mode j;
    the reflected contribution into mode j carries a minus sign.
    """
    _check_mode(i, n_modes)
    _check_mode(j, n_modes)
    if i == j:
        raise IndexError("beam splitter needs two distinct modes")
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"transmittance must lie in [0, 1], got {t}")
    s = np.eye(2 * n_modes)
    ct, rt = np.sqrt(t), np.sqrt(1.0 - t)
    si, sj = _mode_slice(i), _mode_slice(j)
    s[si, si] = ct * np.eye(2)
    s[si, sj] = rt * np.eye(2)
    s[sj, si] = -rt * np.eye(2)
    s[sj, sj] = ct * np.eye(2)
    return SymplecticMap(s)


def phase_shift_map(n_modes: int, i: int, phi: float) -> SymplecticMap:
    """Rotation by phi in the (x_i, p_i) plane, identity elsewhere."""
    _check_mode(i, n_modes)
    s = np.eye(2 * n_modes)
    c, sn = np.cos(phi), np.sin(phi)
    s[_mode_slice(i), _mode_slice(i)] = np.array([[c, sn], [-sn, c]])
    return SymplecticMap(s)


def apply_map(gamma: CovarianceMatrix, s: SymplecticMap) -> CovarianceMatrix:
    """Gaussian unitary evolution gamma -> S gamma S^T (symmetrized)."""
    if gamma.n_modes != s.n_modes:
        raise ValueError(
            f"mode count mismatch: state has {gamma.n_modes}, map has {s.n_modes}"
        )
    m = s.data @ gamma.data @ s.data.T
    return CovarianceMatrix((m + m.T) / 2.0)


def lossy_noisy_channel(
    gamma: CovarianceMatrix, i: int, transmittance: float, excess_noise: float
) -> CovarianceMatrix:
    """One-mode Gaussian loss channel with phase-insensitive excess noise.

    Mode i is attenuated by sqrt(T) and both its quadrature variances gain
    1 - T + T*eps, so a variance V maps to T*(V + eps - 1) + 1.  The T -> 0
    limit is covered by the closed-form module, not simulated here.
    """
    _check_mode(i, gamma.n_modes)
    if not 0.0 < transmittance <= 1.0:
        raise ValueError(f"transmittance must lie in (0, 1], got {transmittance}")
    if excess_noise < 0.0:
        raise ValueError(f"excess noise must be >= 0, got {excess_noise}")
    m = np.array(gamma.data)
    sl = _mode_slice(i)
    rt = np.sqrt(transmittance)
    m[sl, :] *= rt
    m[:, sl] *= rt
    m[sl, sl] += (1.0 - transmittance + transmittance * excess_noise) * np.eye(2)
    return CovarianceMatrix(m)


def reduce(gamma: CovarianceMatrix, modes: tuple[int, ...] | list[int]) -> CovarianceMatrix:
    """Partial trace down to the given modes, in the given order."""
    if len(modes) == 0:
        raise IndexError("mode subset must be nonempty")
    for i in modes:
        _check_mode(i, gamma.n_modes)
    idx = np.concatenate([[2 * i, 2 * i + 1] for i in modes])
    return CovarianceMatrix(gamma.data[np.ix_(idx, idx)])


def symplectic_eigenvalues(gamma: CovarianceMatrix | np.ndarray) -> np.ndarray:
    """Symplectic spectrum: |eigenvalues of i*Omega*gamma|, one per mode, ascending.

    Accepts a raw matrix so partial transposes of physical states can be
    analysed with the same code path.
    """
    m = gamma.data if isinstance(gamma, CovarianceMatrix) else np.asarray(gamma, dtype=float)
    n = m.shape[0] // 2
    ev = np.sort(np.abs(np.linalg.eigvals(1j * omega(n) @ m)))
    scale = max(1.0, ev[-1])
    pairs_lo, pairs_hi = ev[0::2], ev[1::2]
    if np.max(np.abs(pairs_hi - pairs_lo)) > SPECTRUM_PAIRING_TOL * scale:
        raise ArithmeticError(
            "symplectic spectrum does not pair up within tolerance; "
            f"sorted magnitudes: {ev}"
        )
    return (pairs_lo + pairs_hi) / 2.0


def two_mode_pt_symplectic_eigenvalues(gamma: CovarianceMatrix) -> tuple[float, float]:
    """Closed-form partial-transpose spectrum of a two-mode state.

    Independent cross-check for the generic eigensolver route, using the
    2x2-block invariants: nu_-/+^2 = (d -/+ sqrt(d^2 - 4 det gamma)) / 2 with
    d = det A + det B - 2 det C.
    """
    if gamma.n_modes != 2:
        raise ValueError("closed-form route only applies to two-mode states")
    m = gamma.data
    a = np.linalg.det(m[0:2, 0:2])
    b = np.linalg.det(m[2:4, 2:4])
    c = np.linalg.det(m[0:2, 2:4])
    d = a + b - 2.0 * c
    det = np.linalg.det(m)
    disc = max(d * d - 4.0 * det, 0.0)
    lo = (d - np.sqrt(disc)) / 2.0
    hi = (d + np.sqrt(disc)) / 2.0
    return float(np.sqrt(max(lo, 0.0))), float(np.sqrt(max(hi, 0.0)))


def mp_pseudo_inverse(m: np.ndarray) -> np.ndarray:
    """Moore-Penrose pseudo-inverse of a 2x2 symmetric PSD matrix.

    Singular values below 1e-12 of the largest are treated as zero; the
    zero matrix maps to the zero matrix.
    """
    return np.linalg.pinv(np.asarray(m, dtype=float), rcond=PINV_RCOND)


def _condition_raw(m: np.ndarray, mode: int, quad: Quadrature) -> np.ndarray:
    """Homodyne update on a raw matrix; returns the matrix with `mode` removed.

    R gamma_K R is rank-1 by construction, so its pseudo-inverse reduces to
    1/var on the measured quadrature (zero when var vanishes).
    """
    q = 2 * mode if quad is Quadrature.X else 2 * mode + 1
    var = m[q, q]
    if var > 0.0:
        c = m[:, q]
        m = m - np.outer(c, c) / var
    out = np.delete(np.delete(m, (2 * mode, 2 * mode + 1), axis=0), (2 * mode, 2 * mode + 1), axis=1)
    return (out + out.T) / 2.0


def homodyne_condition(
    gamma: CovarianceMatrix, mode: int, quad: Quadrature
) -> CovarianceMatrix:
    """Conditional state after an ideal homodyne measurement of one quadrature.

    Applies gamma' = gamma_rest - sigma (R gamma_K R)^+ sigma^T and traces
    out the measured mode; the result is independent of the outcome.
    """
    _check_mode(mode, gamma.n_modes)
    if gamma.n_modes < 2:
        raise ValueError("need at least two modes to condition on one")
    m = gamma.data
    n = gamma.n_modes
    rest = np.concatenate([[2 * i, 2 * i + 1] for i in range(n) if i != mode])
    r = np.diag([1.0, 0.0]) if quad is Quadrature.X else np.diag([0.0, 1.0])
    gamma_k = m[_mode_slice(mode), _mode_slice(mode)]
    sigma = m[np.ix_(rest, [2 * mode, 2 * mode + 1])]
    update = sigma @ mp_pseudo_inverse(r @ gamma_k @ r) @ sigma.T
    out = m[np.ix_(rest, rest)] - update
    return CovarianceMatrix((out + out.T) / 2.0)
