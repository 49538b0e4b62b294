"""Exact N-pulse evolution by alternating transfer matrices and phase kicks.

The state after a full sequence is

    M(tau_{N+1}) P M(tau_N) P ... P M(tau_1) |initial>,

applied in time order (tau_1 first), where M is the rotating-frame
transfer matrix and P the phase kick.  Kicks change only the relative
phase, so populations are continuous across them even though the
amplitudes jump.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .sequences import to_intervals, validate_fractions
from .su2 import GROUND, SystemParams, pulse_operator, rotating_propagator


@dataclass(frozen=True)
class TrajectoryPoint:
    """State sample: amplitudes, populations, and pulse-edge tag.

    pulse_edge is 'pre' or 'post' for the two samples sharing a kick
    time, 'none' everywhere else.
    """

    time: float
    c_e: complex
    c_g: complex
    p_e: float
    p_g: float
    pulse_edge: str


def _as_state(initial) -> np.ndarray:
    state = np.asarray(GROUND if initial is None else initial, dtype=complex)
    if state.shape != (2,):
        raise ValueError("state must have exactly two components")
    return state.copy()


def evolve_final(params: SystemParams, fractions, initial=None) -> np.ndarray:
    """Final state after the full pulse sequence; defaults to a ground start."""
    frac = validate_fractions(fractions)
    state = _as_state(initial)
    if frac.size == 0 and params.total_time == 0.0:
        return state
    kick = pulse_operator()
    for k, tau in enumerate(to_intervals(frac, params.total_time)):
        if k > 0:
            state = kick @ state
        state = rotating_propagator(params, tau) @ state
    return state


def transition_probability(params: SystemParams, fractions) -> float:
    """Excited-state population |c_e(T)|^2 for a ground-state start."""
    return float(abs(evolve_final(params, fractions)[0]) ** 2)


def trajectory(
    params: SystemParams,
    fractions,
    initial=None,
    samples_per_interval: int = 1,
) -> list[TrajectoryPoint]:
    """Time-resolved state samples across the sequence.

    Each interval contributes samples_per_interval points; every interior
    kick contributes a duplicated time stamp (pre and post kick) so the
    phase jump is recorded exactly.  The final point reproduces
    evolve_final bit for bit.
    """
    if samples_per_interval < 1:
        raise ValueError("samples_per_interval must be at least 1")
    frac = validate_fractions(fractions)
    state = _as_state(initial)
    kick = pulse_operator()
    intervals = to_intervals(frac, params.total_time)

    points = [_point(0.0, state, "none")]
    t_start = 0.0
    last = len(intervals) - 1
    for k, tau in enumerate(intervals):
        for j in range(1, samples_per_interval + 1):
            # state within an interval is propagated from the interval entry
            dt = tau if j == samples_per_interval else tau * j / samples_per_interval
            s = rotating_propagator(params, dt) @ state
            if j < samples_per_interval:
                points.append(_point(t_start + dt, s, "none"))
                continue
            t_edge = t_start + tau
            if k < last:
                points.append(_point(t_edge, s, "pre"))
                s = kick @ s
                points.append(_point(t_edge, s, "post"))
            else:
                points.append(_point(t_edge, s, "none"))
            state = s
            t_start = t_edge
    return points


def _point(t: float, state: np.ndarray, edge: str) -> TrajectoryPoint:
    return TrajectoryPoint(
        time=t,
        c_e=complex(state[0]),
        c_g=complex(state[1]),
        p_e=float(abs(state[0]) ** 2),
        p_g=float(abs(state[1]) ** 2),
        pulse_edge=edge,
    )
