"""Complex 2x2 kernel: transfer matrices and the phase-kick operator.

All evolution in this package is built from two ingredients.  The
rotating-frame transfer matrix over a time t,

    M(t) = cos(h) I + i sin(h) (W sx - D sz) / W_R,    h = W_R t / 2,

with Rabi frequency W, detuning D and generalized Rabi frequency
W_R = sqrt(W^2 + D^2), and the instantaneous phase kick

    P = diag(1, -1),

which flips the sign of the ground amplitude only.  States are
length-2 complex vectors ordered (c_e, c_g), excited first.  Both
matrices are unitary and M obeys the group property
M(t1) M(t2) = M(t1 + t2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

UNITARITY_TOL = 1e-12

IDENTITY = np.eye(2, dtype=complex)
GROUND = np.array([0.0, 1.0], dtype=complex)
EXCITED = np.array([1.0, 0.0], dtype=complex)


@dataclass(frozen=True)
class SystemParams:
    """Drive parameters: Rabi frequency W > 0, detuning D, total time T >= 0.

    Only the detuning (drive frequency minus transition frequency up to
    sign convention) enters the dynamics; bare frequencies never appear.
    """

    rabi_frequency: float
    detuning: float
    total_time: float

    def __post_init__(self) -> None:
        for name in ("rabi_frequency", "detuning", "total_time"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.rabi_frequency <= 0.0:
            raise ValueError("rabi_frequency must be positive")
        if self.total_time < 0.0:
            raise ValueError("total_time must be nonnegative")

    @property
    def omega_r(self) -> float:
        """Generalized Rabi frequency sqrt(detuning^2 + rabi_frequency^2)."""
        return math.hypot(self.detuning, self.rabi_frequency)


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of two 2x2 complex matrices."""
    return a @ b


def apply(m: np.ndarray, state: np.ndarray) -> np.ndarray:
    """Apply a 2x2 matrix to a length-2 state vector."""
    return m @ state


def is_unitary(m: np.ndarray, tol: float = UNITARITY_TOL) -> bool:
    """True iff the max-abs entry of m^dag m - I is at most tol."""
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    dev = m.conj().T @ m - IDENTITY
    return float(np.max(np.abs(dev))) <= tol


def pulse_operator() -> np.ndarray:
    """Instantaneous phase kick diag(1, -1): sign flip on the ground amplitude."""
    return np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


def rotating_propagator(params: SystemParams, t: float) -> np.ndarray:
    """Rotating-frame transfer matrix M(t) for free evolution over t >= 0."""
    if t < 0.0:
        raise ValueError("t must be nonnegative")
    wr = params.omega_r
    h = 0.5 * wr * t
    c = math.cos(h)
    s = math.sin(h)
    dz = params.detuning / wr
    ox = params.rabi_frequency / wr
    return np.array(
        [[c - 1j * dz * s, 1j * ox * s], [1j * ox * s, c + 1j * dz * s]],
        dtype=complex,
    )


def zero_detuning_propagator(omega: float, t: float) -> np.ndarray:
    """Resonant (D = 0) transfer matrix: cos(W t / 2) diagonal, i sin off-diagonal.

    Identical to rotating_propagator with zero detuning; kept as a separate
    entry point because the resonant case has its own closed-form analysis.
    """
    if omega <= 0.0:
        raise ValueError("omega must be positive")
    if t < 0.0:
        raise ValueError("t must be nonnegative")
    h = 0.5 * omega * t
    c = math.cos(h)
    s = math.sin(h)
    return np.array([[c, 1j * s], [1j * s, c]], dtype=complex)
